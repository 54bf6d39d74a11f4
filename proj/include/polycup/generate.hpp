#ifndef POLYCUP_GENERATE_HPP
#define POLYCUP_GENERATE_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "polycup/complex.hpp"
#include "polycup/error.hpp"
#include "polycup/forms.hpp"

namespace polycup {

enum class Profile { Triangles, Quads, Mixed, Sphere, Torus, Disk };

inline constexpr std::array<Profile, 6> kAllProfiles{Profile::Triangles, Profile::Quads,
                                                      Profile::Mixed,     Profile::Sphere,
                                                      Profile::Torus,     Profile::Disk};

inline constexpr std::string_view to_string(Profile p) noexcept {
  switch (p) {
    case Profile::Triangles: return "triangles";
    case Profile::Quads: return "quads";
    case Profile::Mixed: return "mixed";
    case Profile::Sphere: return "sphere";
    case Profile::Torus: return "torus";
    case Profile::Disk: return "disk";
  }
  return "unknown";
}

inline Profile parse_profile(std::string_view name) {
  for (Profile p : kAllProfiles)
    if (to_string(p) == name) return p;
  throw Error(ErrorKind::UnknownProfile, std::string(name));
}

/// splitmix64 finalizer; used to derive independent stream seeds.
inline std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
  return mix_seed(mix_seed(mix_seed(seed) ^ a) ^ (b * 0x632be59bd9b4e019ULL));
}

/// Deterministic random source with platform-independent draws.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(mix_seed(seed)) {}

  /// Uniform in [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
  /// Uniform integer in [lo, hi].
  long long integer(long long lo, long long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long long>(engine_() % span);
  }
  bool coin() { return (engine_() >> 63) != 0; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[integer(0, i - 1)]);
  }

 private:
  std::mt19937_64 engine_;
};

/// Faces plus vertex count, before validation.
struct FaceSoup {
  Index vertex_count = 0;
  std::vector<std::vector<Index>> faces;
};

namespace shapes {

/// (nx x ny) quad grid, optionally glued along x and/or y. Vertex (i, j) has
/// id i + stride * j.
inline FaceSoup quad_grid(Index nx, Index ny, bool wrap_x, bool wrap_y) {
  const Index sx = wrap_x ? nx : nx + 1;
  const Index sy = wrap_y ? ny : ny + 1;
  FaceSoup soup{sx * sy, {}};
  auto id = [&](Index i, Index j) { return (i % sx) + sx * (j % sy); };
  for (Index j = 0; j < ny; ++j)
    for (Index i = 0; i < nx; ++i)
      soup.faces.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1), id(i, j + 1)});
  return soup;
}

inline FaceSoup quad_torus(Index nx, Index ny) { return quad_grid(nx, ny, true, true); }
inline FaceSoup quad_disk(Index nx, Index ny) { return quad_grid(nx, ny, false, false); }

/// Surface of the lattice box [0,a] x [0,b] x [0,c], quads oriented outward.
inline FaceSoup box_sphere(Index a, Index b, Index c) {
  const std::array<Index, 3> dims{a, b, c};
  std::map<std::array<Index, 3>, Index> ids;
  FaceSoup soup;
  auto vertex = [&](std::array<Index, 3> p) {
    auto [it, inserted] = ids.emplace(p, ids.size());
    return it->second;
  };
  for (int axis = 0; axis < 3; ++axis) {
    const int u = (axis + 1) % 3, v = (axis + 2) % 3;
    for (int side = 0; side < 2; ++side) {
      for (Index i = 0; i < dims[u]; ++i)
        for (Index j = 0; j < dims[v]; ++j) {
          std::array<std::array<Index, 3>, 4> corners{};
          const std::array<std::pair<Index, Index>, 4> uv{
              {{i, j}, {i + 1, j}, {i + 1, j + 1}, {i, j + 1}}};
          for (int k = 0; k < 4; ++k) {
            corners[k][axis] = side ? dims[axis] : 0;
            corners[k][u] = uv[k].first;
            corners[k][v] = uv[k].second;
          }
          std::vector<Index> face;
          for (const auto& p : corners) face.push_back(vertex(p));
          if (!side) std::reverse(face.begin() + 1, face.end());
          soup.faces.push_back(std::move(face));
        }
    }
  }
  soup.vertex_count = ids.size();
  return soup;
}

/// Splits every quad along a random diagonal (or keeps it with probability
/// 1 - split_probability).
inline FaceSoup triangulate(const FaceSoup& soup, Rng& rng, double split_probability = 1.0) {
  FaceSoup out{soup.vertex_count, {}};
  for (const auto& f : soup.faces) {
    if (f.size() != 4 || rng.unit() >= split_probability) {
      out.faces.push_back(f);
    } else if (rng.coin()) {
      out.faces.push_back({f[0], f[1], f[2]});
      out.faces.push_back({f[0], f[2], f[3]});
    } else {
      out.faces.push_back({f[0], f[1], f[3]});
      out.faces.push_back({f[1], f[2], f[3]});
    }
  }
  return out;
}

/// Merges random adjacent, coherently oriented face pairs whose union is a
/// simple polygon with at most `max_size` vertices.
inline FaceSoup merge_polygons(FaceSoup soup, Rng& rng, Index attempts, Index max_size) {
  for (Index attempt = 0; attempt < attempts && soup.faces.size() > 1; ++attempt) {
    std::map<std::pair<Index, Index>, std::vector<Index>> owners;
    for (Index f = 0; f < soup.faces.size(); ++f) {
      const auto& face = soup.faces[f];
      for (Index i = 0; i < face.size(); ++i) {
        const Index u = face[i], w = face[(i + 1) % face.size()];
        owners[{std::min(u, w), std::max(u, w)}].push_back(f);
      }
    }
    const Index f = static_cast<Index>(rng.integer(0, soup.faces.size() - 1));
    const auto& face = soup.faces[f];
    const Index slot = static_cast<Index>(rng.integer(0, face.size() - 1));
    const Index u = face[slot], w = face[(slot + 1) % face.size()];
    const auto& own = owners[{std::min(u, w), std::max(u, w)}];
    if (own.size() != 2) continue;
    const Index g = own[0] == f ? own[1] : own[0];
    const auto& other = soup.faces[g];
    if (face.size() + other.size() - 2 > max_size) continue;
    std::vector<Index> shared;
    for (Index x : face)
      if (std::find(other.begin(), other.end(), x) != other.end()) shared.push_back(x);
    if (shared.size() != 2) continue;
    const auto pos = static_cast<Index>(std::find(other.begin(), other.end(), w) - other.begin());
    if (other[(pos + 1) % other.size()] != u) continue;  // incoherent pair
    // Walk f from w around to u, then g from u around to w.
    std::vector<Index> merged;
    for (Index k = 1; k <= face.size(); ++k) merged.push_back(face[(slot + k) % face.size()]);
    for (Index k = 2; k < other.size(); ++k) merged.push_back(other[(pos + k) % other.size()]);
    soup.faces[f] = std::move(merged);
    soup.faces.erase(soup.faces.begin() + static_cast<std::ptrdiff_t>(g));
  }
  return soup;
}

/// Random vertex relabeling, face rotation and face order; optionally
/// reverses every face. Keeps the soup coherent.
inline FaceSoup scramble(FaceSoup soup, Rng& rng) {
  std::vector<Index> relabel(soup.vertex_count);
  std::iota(relabel.begin(), relabel.end(), Index{0});
  rng.shuffle(relabel);
  const bool flip = rng.coin();
  for (auto& face : soup.faces) {
    for (auto& v : face) v = relabel[v];
    if (flip) std::reverse(face.begin(), face.end());
    std::rotate(face.begin(), face.begin() + rng.integer(0, face.size() - 1), face.end());
  }
  rng.shuffle(soup.faces);
  return soup;
}

}  // namespace shapes

inline PolygonalComplex build_complex(const FaceSoup& soup, const BuildOptions& options = {}) {
  return build_complex(soup.faces, soup.vertex_count, std::nullopt, options);
}

/// Deterministic random complex of the given profile.
inline PolygonalComplex gen_complex(std::uint64_t seed, Profile profile) {
  Rng rng(derive_seed(seed, 0x636f6d706c6578ULL, static_cast<std::uint64_t>(profile)));
  auto size = [&](long long lo, long long hi) { return static_cast<Index>(rng.integer(lo, hi)); };
  FaceSoup soup;
  switch (profile) {
    case Profile::Triangles:
      soup = shapes::triangulate(shapes::quad_disk(size(1, 5), size(1, 5)), rng);
      break;
    case Profile::Quads:
      soup = rng.coin() ? shapes::quad_disk(size(1, 5), size(1, 5))
                        : shapes::quad_torus(size(3, 5), size(3, 5));
      break;
    case Profile::Sphere: {
      soup = shapes::box_sphere(size(1, 3), size(1, 3), size(1, 3));
      if (rng.coin()) soup = shapes::triangulate(soup, rng, 0.5);
      break;
    }
    case Profile::Torus: {
      soup = shapes::quad_torus(size(3, 5), size(3, 5));
      if (rng.coin()) soup = shapes::triangulate(soup, rng, 0.5);
      break;
    }
    case Profile::Disk:
      soup = shapes::triangulate(shapes::quad_disk(size(1, 5), size(1, 5)), rng, 0.5);
      break;
    case Profile::Mixed: {
      switch (rng.integer(0, 2)) {
        case 0: soup = shapes::triangulate(shapes::quad_disk(size(3, 6), size(3, 6)), rng, 0.7); break;
        case 1: soup = shapes::triangulate(shapes::box_sphere(size(2, 3), size(2, 3), size(2, 3)), rng, 0.7); break;
        default: soup = shapes::triangulate(shapes::quad_torus(size(4, 6), size(4, 6)), rng, 0.7); break;
      }
      const Index attempts = soup.faces.size() * 2;
      soup = shapes::merge_polygons(std::move(soup), rng, attempts, 12);
      break;
    }
  }
  return build_complex(shapes::scramble(std::move(soup), rng));
}

/// Deterministic form with values uniform in [-1, 1).
inline DiscreteForm gen_form(std::uint64_t seed, const PolygonalComplex& c, int degree) {
  if (degree < 0 || degree > 2)
    throw Error(ErrorKind::DegreeOutOfRange, "cannot generate a " + std::to_string(degree) + "-form");
  Rng rng(derive_seed(seed, 0x666f726dULL, static_cast<std::uint64_t>(degree)));
  std::vector<double> values(c.cell_count(degree));
  for (auto& v : values) v = rng.uniform(-1.0, 1.0);
  return {c, degree, std::move(values)};
}

/// Deterministic integer-valued form with values in [-bound, bound].
inline DiscreteForm gen_integer_form(std::uint64_t seed, const PolygonalComplex& c, int degree,
                                     long long bound = 1 << 20) {
  Rng rng(derive_seed(seed, 0x696e74ULL, static_cast<std::uint64_t>(degree)));
  std::vector<double> values(c.cell_count(degree));
  for (auto& v : values) v = static_cast<double>(rng.integer(-bound, bound));
  return {c, degree, std::move(values)};
}

}  // namespace polycup

#endif  // POLYCUP_GENERATE_HPP
