#ifndef POLYCUP_MESHIO_HPP
#define POLYCUP_MESHIO_HPP

#include <charconv>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "polycup/complex.hpp"
#include "polycup/error.hpp"
#include "polycup/forms.hpp"

namespace polycup {

/// Vertex coordinates and face index lists as read from a file.
struct RawMesh {
  std::vector<Point3> vertices;
  std::vector<std::vector<Index>> faces;
  friend bool operator==(const RawMesh&, const RawMesh&) = default;
};

/// Shortest decimal string that parses back to the same double.
inline std::string format_double(double value) {
  char buffer[64];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, end);
}

namespace detail {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

/// Splits text into whitespace-separated token lines, dropping `#` comments
/// and blank lines.
inline std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++number;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    Line parsed{number, {}};
    std::size_t i = 0;
    auto is_space = [](char ch) {
      return ch == ' ' || ch == '\t' || ch == '\r' || ch == '\f' || ch == '\v';
    };
    while (i < line.size()) {
      while (i < line.size() && is_space(line[i])) ++i;
      std::size_t j = i;
      while (j < line.size() && !is_space(line[j])) ++j;
      if (j > i) parsed.tokens.push_back(line.substr(i, j - i));
      i = j;
    }
    if (!parsed.tokens.empty()) lines.push_back(std::move(parsed));
    pos = end + 1;
  }
  return lines;
}

inline std::string at_line(std::size_t number) { return "line " + std::to_string(number); }

inline std::optional<double> to_double(std::string_view token) {
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

template <typename Int>
std::optional<Int> to_integer(std::string_view token) {
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  Int value{};
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) return std::nullopt;
  return value;
}

inline double finite_coordinate(std::string_view token, std::size_t line) {
  const auto value = to_double(token);
  if (!value || !std::isfinite(*value))
    throw Error(ErrorKind::UnparseableNumber,
                at_line(line) + ": '" + std::string(token) + "' is not a finite number");
  return *value;
}

}  // namespace detail

/// OFF: `OFF`, then `V F E`, then V coordinate lines and F lines
/// `p i_0 ... i_{p-1}`. Counts may share the `OFF` line.
inline RawMesh parse_off(std::string_view text) {
  const auto lines = detail::tokenize(text);
  if (lines.empty() || lines[0].tokens[0] != "OFF")
    throw Error(ErrorKind::MalformedHeader, "missing 'OFF' keyword");

  std::vector<std::string_view> counts(lines[0].tokens.begin() + 1, lines[0].tokens.end());
  std::size_t next = 1;
  std::size_t counts_line = lines[0].number;
  if (counts.empty()) {
    if (lines.size() < 2) throw Error(ErrorKind::MalformedHeader, "missing 'V F E' counts line");
    counts = lines[1].tokens;
    counts_line = lines[1].number;
    next = 2;
  }
  if (counts.size() < 2 || counts.size() > 3)
    throw Error(ErrorKind::MalformedHeader, detail::at_line(counts_line) + ": expected 'V F E'");
  const auto v_count = detail::to_integer<std::size_t>(counts[0]);
  const auto f_count = detail::to_integer<std::size_t>(counts[1]);
  if (!v_count || !f_count || (counts.size() == 3 && !detail::to_integer<std::size_t>(counts[2])))
    throw Error(ErrorKind::MalformedHeader,
                detail::at_line(counts_line) + ": counts must be non-negative integers");
  const std::size_t available = lines.size() - next;
  if (*v_count > available || *f_count > available - *v_count || *v_count + *f_count != available)
    throw Error(ErrorKind::CountMismatch,
                "header announces " + std::to_string(*v_count) + " vertices and " +
                    std::to_string(*f_count) + " faces but " + std::to_string(available) +
                    " data lines follow");

  RawMesh mesh;
  for (std::size_t k = 0; k < *v_count; ++k) {
    const auto& line = lines[next + k];
    if (line.tokens.size() < 3)
      throw Error(ErrorKind::CountMismatch, detail::at_line(line.number) + ": vertex needs 3 coordinates");
    mesh.vertices.push_back({detail::finite_coordinate(line.tokens[0], line.number),
                             detail::finite_coordinate(line.tokens[1], line.number),
                             detail::finite_coordinate(line.tokens[2], line.number)});
  }
  next += *v_count;
  for (std::size_t k = 0; k < *f_count; ++k) {
    const auto& line = lines[next + k];
    const auto p = detail::to_integer<std::size_t>(line.tokens[0]);
    if (!p)
      throw Error(ErrorKind::UnparseableNumber,
                  detail::at_line(line.number) + ": bad face size '" + std::string(line.tokens[0]) + "'");
    if (*p < 3)
      throw Error(ErrorKind::DegenerateFace,
                  detail::at_line(line.number) + ": face with " + std::to_string(*p) + " vertices");
    if (line.tokens.size() - 1 < *p)
      throw Error(ErrorKind::CountMismatch, detail::at_line(line.number) + ": face announces " +
                                                std::to_string(*p) + " indices");
    std::vector<Index> face;
    for (std::size_t i = 1; i <= *p; ++i) {
      const auto index = detail::to_integer<long long>(line.tokens[i]);
      if (!index)
        throw Error(ErrorKind::UnparseableNumber, detail::at_line(line.number) + ": bad index '" +
                                                      std::string(line.tokens[i]) + "'");
      if (*index < 0 || static_cast<std::size_t>(*index) >= mesh.vertices.size())
        throw Error(ErrorKind::IndexOutOfRange,
                    detail::at_line(line.number) + ": vertex index " + std::to_string(*index));
      face.push_back(static_cast<Index>(*index));
    }
    mesh.faces.push_back(std::move(face));
  }
  return mesh;
}

/// OBJ subset: `v x y z` and `f i j k ...` with 1-based indices; `i/t/n`
/// references keep only the vertex index. Other directives are ignored.
inline RawMesh parse_obj(std::string_view text) {
  RawMesh mesh;
  std::vector<std::pair<std::size_t, std::vector<long long>>> pending;
  for (const auto& line : detail::tokenize(text)) {
    const auto& t = line.tokens;
    if (t[0] == "v") {
      if (t.size() < 4)
        throw Error(ErrorKind::CountMismatch, detail::at_line(line.number) + ": vertex needs 3 coordinates");
      mesh.vertices.push_back({detail::finite_coordinate(t[1], line.number),
                               detail::finite_coordinate(t[2], line.number),
                               detail::finite_coordinate(t[3], line.number)});
    } else if (t[0] == "f") {
      if (t.size() < 4)
        throw Error(ErrorKind::DegenerateFace, detail::at_line(line.number) + ": face with " +
                                                   std::to_string(t.size() - 1) + " vertices");
      std::vector<long long> refs;
      for (std::size_t i = 1; i < t.size(); ++i) {
        const auto vertex_part = t[i].substr(0, t[i].find('/'));
        const auto index = detail::to_integer<long long>(vertex_part);
        if (!index)
          throw Error(ErrorKind::UnparseableNumber,
                      detail::at_line(line.number) + ": bad index '" + std::string(t[i]) + "'");
        refs.push_back(*index);
      }
      pending.emplace_back(line.number, std::move(refs));
    }
  }
  for (auto& [number, refs] : pending) {
    std::vector<Index> face;
    for (long long ref : refs) {
      if (ref < 1 || static_cast<unsigned long long>(ref) > mesh.vertices.size())
        throw Error(ErrorKind::IndexOutOfRange,
                    detail::at_line(number) + ": vertex index " + std::to_string(ref));
      face.push_back(static_cast<Index>(ref - 1));
    }
    mesh.faces.push_back(std::move(face));
  }
  return mesh;
}

inline std::string serialize_off(const RawMesh& mesh) {
  std::string out = "OFF\n" + std::to_string(mesh.vertices.size()) + " " +
                    std::to_string(mesh.faces.size()) + " 0\n";
  for (const auto& p : mesh.vertices)
    out += format_double(p[0]) + " " + format_double(p[1]) + " " + format_double(p[2]) + "\n";
  for (const auto& face : mesh.faces) {
    out += std::to_string(face.size());
    for (Index v : face) out += " " + std::to_string(v);
    out += "\n";
  }
  return out;
}

inline PolygonalComplex complex_from_mesh(const RawMesh& mesh, const BuildOptions& options = {}) {
  return build_complex(mesh.faces, mesh.vertices.size(), mesh.vertices, options);
}

inline RawMesh mesh_from_complex(const PolygonalComplex& c) {
  RawMesh mesh;
  mesh.faces = c.faces();
  if (c.coords())
    mesh.vertices = *c.coords();
  else
    mesh.vertices.assign(c.vertex_count(), Point3{0.0, 0.0, 0.0});
  return mesh;
}

/// Cochain file contents before they are attached to a complex.
struct FormData {
  int degree = 0;
  std::vector<double> values;
};

/// `DFORM <degree> <cell_count>` followed by one value per line.
inline FormData read_form(std::string_view text) {
  const auto lines = detail::tokenize(text);
  if (lines.empty() || lines[0].tokens.size() != 3 || lines[0].tokens[0] != "DFORM")
    throw Error(ErrorKind::MalformedHeader, "expected 'DFORM <degree> <cell_count>'");
  const auto degree = detail::to_integer<int>(lines[0].tokens[1]);
  const auto count = detail::to_integer<std::size_t>(lines[0].tokens[2]);
  if (!degree || !count || *degree < 0 || *degree > 3)
    throw Error(ErrorKind::MalformedHeader, "bad degree or cell count");
  if (lines.size() - 1 != *count)
    throw Error(ErrorKind::CountMismatch, "header announces " + std::to_string(*count) +
                                              " values but " + std::to_string(lines.size() - 1) +
                                              " follow");
  FormData out{*degree, {}};
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& line = lines[k];
    const auto value = line.tokens.size() == 1 ? detail::to_double(line.tokens[0]) : std::nullopt;
    if (!value)
      throw Error(ErrorKind::UnparseableNumber, detail::at_line(line.number) + ": expected one number");
    out.values.push_back(*value);
  }
  return out;
}

inline DiscreteForm read_form(std::string_view text, const PolygonalComplex& c) {
  auto data = read_form(text);
  if (data.values.size() != c.cell_count(data.degree))
    throw Error(ErrorKind::CountMismatch,
                std::to_string(data.values.size()) + " values for " +
                    std::to_string(c.cell_count(data.degree)) + " cells of degree " +
                    std::to_string(data.degree));
  return {c, data.degree, std::move(data.values)};
}

inline std::string write_form(const DiscreteForm& a) {
  std::string out = "DFORM " + std::to_string(a.degree()) + " " + std::to_string(a.size()) + "\n";
  for (double v : a.values()) out += format_double(v) + "\n";
  return out;
}

}  // namespace polycup

#endif  // POLYCUP_MESHIO_HPP
