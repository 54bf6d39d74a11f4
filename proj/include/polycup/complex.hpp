#ifndef POLYCUP_COMPLEX_HPP
#define POLYCUP_COMPLEX_HPP

#include <algorithm>
#include <array>
#include <atomic>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "polycup/error.hpp"

namespace polycup {

using Index = std::size_t;
using Point3 = std::array<double, 3>;

/// Stored edge orientation: always tail < head.
struct Edge {
  Index tail;
  Index head;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// A (cell, incidence number) pair.
struct Incidence {
  Index cell;
  int sign;
  friend bool operator==(const Incidence&, const Incidence&) = default;
};

/// Slot i of a face (v_0, ..., v_{p-1}) is the face-local edge
/// (v_i, v_{(i+1)%p}); `sign` is +1 when that equals the stored edge and -1
/// when it is the reverse. The signs are exactly the incidence numbers [f:e].
struct EdgeSlot {
  Index edge;
  int sign;
  friend bool operator==(const EdgeSlot&, const EdgeSlot&) = default;
};

struct FaceLocalEdgeView {
  Index face;
  std::span<const EdgeSlot> slots;

  std::size_t size() const noexcept { return slots.size(); }
  const EdgeSlot& operator[](std::size_t i) const { return slots[i]; }
};

struct CellRef {
  int degree;
  Index id;
  friend auto operator<=>(const CellRef&, const CellRef&) = default;
};

struct BuildOptions {
  /// Coherently re-orient faces (BFS over the dual graph) instead of
  /// rejecting incoherent input.
  bool orient = false;
  /// When false, skip the coherence check entirely. Cup products and
  /// derivatives are well defined on any consistently signed complex; this is
  /// used to study orientation covariance of single faces.
  bool require_coherent = true;
};

class PolygonalComplex;

PolygonalComplex build_complex(std::vector<std::vector<Index>> faces, Index vertex_count,
                               std::optional<std::vector<Point3>> coords = std::nullopt,
                               const BuildOptions& options = {});

/// A validated, oriented polygonal 2-pseudomanifold. Immutable once built.
class PolygonalComplex {
 public:
  Index vertex_count() const noexcept { return vertex_count_; }
  Index edge_count() const noexcept { return edges_.size(); }
  Index face_count() const noexcept { return faces_.size(); }

  Index cell_count(int degree) const {
    switch (degree) {
      case 0: return vertex_count();
      case 1: return edge_count();
      case 2: return face_count();
      case 3: return 0;
      default:
        throw Error(ErrorKind::DegreeOutOfRange, "degree " + std::to_string(degree));
    }
  }

  const std::vector<Edge>& edges() const& noexcept { return edges_; }
  std::vector<Edge> edges() && noexcept { return std::move(edges_); }
  std::vector<Edge> edges() const&& { return edges_; }
  const Edge& edge(Index e) const { return edges_.at(e); }

  const std::vector<std::vector<Index>>& faces() const& noexcept { return faces_; }
  std::vector<std::vector<Index>> faces() && noexcept { return std::move(faces_); }
  std::vector<std::vector<Index>> faces() const&& { return faces_; }
  std::span<const Index> face(Index f) const { return faces_.at(f); }

  const std::optional<std::vector<Point3>>& coords() const noexcept { return coords_; }

  FaceLocalEdgeView face_edges(Index f) const { return {f, face_slots_.at(f)}; }

  /// Faces containing edge e together with [f:e].
  std::span<const Incidence> edge_faces(Index e) const { return edge_faces_.at(e); }
  std::span<const Index> vertex_edges(Index v) const { return vertex_edges_.at(v); }
  std::span<const Index> vertex_faces(Index v) const { return vertex_faces_.at(v); }

  /// [f:e], zero when e is not an edge of f.
  int incidence(Index f, Index e) const {
    for (const auto& inc : edge_faces_.at(e))
      if (inc.cell == f) return inc.sign;
    return 0;
  }

  /// Stored edge joining u and v, with +1 when (u, v) is the stored
  /// orientation and -1 otherwise.
  std::optional<EdgeSlot> find_edge(Index u, Index v) const {
    const Edge key{std::min(u, v), std::max(u, v)};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key, [](const Edge& a, const Edge& b) {
      return std::pair(a.tail, a.head) < std::pair(b.tail, b.head);
    });
    if (it == edges_.end() || !(*it == key)) return std::nullopt;
    return EdgeSlot{static_cast<Index>(it - edges_.begin()), u < v ? 1 : -1};
  }

  bool has_boundary() const noexcept { return boundary_flag_; }
  bool is_boundary_edge(Index e) const { return edge_faces_.at(e).size() == 1; }

  /// Identity of this built complex; copies share it. Forms record it.
  std::uint64_t id() const noexcept { return id_; }

  /// Structural equality (ignores identity).
  friend bool operator==(const PolygonalComplex& a, const PolygonalComplex& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_ && a.faces_ == b.faces_ &&
           a.face_slots_ == b.face_slots_ && a.boundary_flag_ == b.boundary_flag_;
  }

 private:
  friend PolygonalComplex build_complex(std::vector<std::vector<Index>>, Index,
                                        std::optional<std::vector<Point3>>, const BuildOptions&);

  static std::uint64_t next_id() {
    static std::atomic<std::uint64_t> counter{1};
    return counter.fetch_add(1, std::memory_order_relaxed);
  }

  Index vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Index>> faces_;
  std::optional<std::vector<Point3>> coords_;
  std::vector<std::vector<EdgeSlot>> face_slots_;
  std::vector<std::vector<Incidence>> edge_faces_;
  std::vector<std::vector<Index>> vertex_edges_;
  std::vector<std::vector<Index>> vertex_faces_;
  bool boundary_flag_ = false;
  std::uint64_t id_ = 0;
};

namespace detail {

inline std::string join_ids(const std::vector<Index>& ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(ids[i]);
  }
  return out;
}

inline std::vector<Index> reversed_cycle(const std::vector<Index>& face) {
  std::vector<Index> out;
  out.reserve(face.size());
  out.push_back(face.front());
  for (std::size_t i = face.size() - 1; i > 0; --i) out.push_back(face[i]);
  return out;
}

/// Per-face flips (+1 keep, -1 reverse) making the complex coherent, or the
/// edge at which propagation failed.
inline std::pair<std::vector<int>, std::optional<Index>> propagate_orientation(
    const std::vector<std::vector<Incidence>>& edge_faces,
    const std::vector<std::vector<EdgeSlot>>& face_slots) {
  std::vector<int> flip(face_slots.size(), 0);
  for (Index root = 0; root < face_slots.size(); ++root) {
    if (flip[root] != 0) continue;
    flip[root] = 1;
    std::queue<Index> queue;
    queue.push(root);
    while (!queue.empty()) {
      const Index f = queue.front();
      queue.pop();
      for (const auto& slot : face_slots[f]) {
        const auto& incident = edge_faces[slot.edge];
        if (incident.size() != 2) continue;
        const Incidence& other = incident[0].cell == f ? incident[1] : incident[0];
        const int wanted = -flip[f] * slot.sign * other.sign;
        if (flip[other.cell] == 0) {
          flip[other.cell] = wanted;
          queue.push(other.cell);
        } else if (flip[other.cell] != wanted) {
          return {std::move(flip), slot.edge};
        }
      }
    }
  }
  return {std::move(flip), std::nullopt};
}

}  // namespace detail

/// Builds and validates a complex from cyclic face lists. Edges are keyed by
/// their (low, high) vertex pair and numbered in lexicographic order of that
/// pair; the cyclic order of each face is its orientation.
inline PolygonalComplex build_complex(std::vector<std::vector<Index>> faces, Index vertex_count,
                                      std::optional<std::vector<Point3>> coords,
                                      const BuildOptions& options) {
  if (coords && coords->size() != vertex_count)
    throw Error(ErrorKind::CountMismatch, "coords has " + std::to_string(coords->size()) +
                                              " entries for " + std::to_string(vertex_count) +
                                              " vertices");
  if (faces.empty()) throw Error(ErrorKind::NotAPseudomanifold, "complex has no faces");

  for (Index f = 0; f < faces.size(); ++f) {
    const auto& face = faces[f];
    if (face.size() < 3)
      throw Error(ErrorKind::DegenerateFace,
                  "face " + std::to_string(f) + " has " + std::to_string(face.size()) + " vertices");
    for (Index v : face)
      if (v >= vertex_count)
        throw Error(ErrorKind::VertexOutOfRange,
                    "face " + std::to_string(f) + " references vertex " + std::to_string(v));
    std::vector<Index> sorted = face;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error(ErrorKind::DegenerateFace,
                  "face " + std::to_string(f) + " repeats a vertex: (" + detail::join_ids(face) + ")");
  }

  PolygonalComplex c;
  c.vertex_count_ = vertex_count;
  c.coords_ = std::move(coords);

  std::set<std::pair<Index, Index>> keys;
  for (const auto& face : faces)
    for (std::size_t i = 0; i < face.size(); ++i) {
      const Index u = face[i], v = face[(i + 1) % face.size()];
      keys.emplace(std::min(u, v), std::max(u, v));
    }
  c.edges_.reserve(keys.size());
  for (const auto& [lo, hi] : keys) c.edges_.push_back({lo, hi});

  c.face_slots_.resize(faces.size());
  c.edge_faces_.resize(c.edges_.size());
  for (Index f = 0; f < faces.size(); ++f) {
    const auto& face = faces[f];
    for (std::size_t i = 0; i < face.size(); ++i) {
      const auto slot = *c.find_edge(face[i], face[(i + 1) % face.size()]);
      c.face_slots_[f].push_back(slot);
      c.edge_faces_[slot.edge].push_back({f, slot.sign});
    }
  }

  // Pseudomanifold conditions.
  for (Index e = 0; e < c.edges_.size(); ++e) {
    if (c.edge_faces_[e].size() > 2) {
      std::vector<Index> ids;
      for (const auto& inc : c.edge_faces_[e]) ids.push_back(inc.cell);
      throw Error(ErrorKind::NotAPseudomanifold,
                  "edge " + std::to_string(e) + " (" + std::to_string(c.edges_[e].tail) + "," +
                      std::to_string(c.edges_[e].head) + ") is a face of more than two faces: " +
                      detail::join_ids(ids));
    }
  }
  c.vertex_faces_.resize(vertex_count);
  c.vertex_edges_.resize(vertex_count);
  for (Index f = 0; f < faces.size(); ++f)
    for (Index v : faces[f]) c.vertex_faces_[v].push_back(f);
  for (Index e = 0; e < c.edges_.size(); ++e) {
    c.vertex_edges_[c.edges_[e].tail].push_back(e);
    c.vertex_edges_[c.edges_[e].head].push_back(e);
  }
  for (Index v = 0; v < vertex_count; ++v)
    if (c.vertex_faces_[v].empty())
      throw Error(ErrorKind::NotAPseudomanifold,
                  "vertex " + std::to_string(v) + " is not a face of any 2-cell");

  {
    std::vector<bool> seen(faces.size(), false);
    std::queue<Index> queue;
    queue.push(0);
    seen[0] = true;
    Index reached = 1;
    while (!queue.empty()) {
      const Index f = queue.front();
      queue.pop();
      for (const auto& slot : c.face_slots_[f])
        for (const auto& inc : c.edge_faces_[slot.edge])
          if (!seen[inc.cell]) {
            seen[inc.cell] = true;
            ++reached;
            queue.push(inc.cell);
          }
    }
    if (reached != faces.size()) {
      std::vector<Index> unreached;
      for (Index f = 0; f < faces.size(); ++f)
        if (!seen[f]) unreached.push_back(f);
      throw Error(ErrorKind::NotAPseudomanifold,
                  "face-adjacency graph is disconnected; faces not reachable from face 0: " +
                      detail::join_ids(unreached));
    }
  }

  // Coherence: interior edges must receive opposite signs from their faces.
  std::optional<Index> incoherent;
  for (Index e = 0; e < c.edges_.size() && !incoherent; ++e) {
    const auto& inc = c.edge_faces_[e];
    if (inc.size() == 2 && inc[0].sign + inc[1].sign != 0) incoherent = e;
  }
  if (incoherent && (options.require_coherent || options.orient)) {
    auto [flip, failed_edge] = detail::propagate_orientation(c.edge_faces_, c.face_slots_);
    if (failed_edge)
      throw Error(ErrorKind::Nonorientable,
                  "coherent orientation propagation failed at edge " + std::to_string(*failed_edge) +
                      " (" + std::to_string(c.edges_[*failed_edge].tail) + "," +
                      std::to_string(c.edges_[*failed_edge].head) + ")");
    if (!options.orient)
      throw Error(ErrorKind::IncoherentOrientation,
                  "faces " + std::to_string(c.edge_faces_[*incoherent][0].cell) + " and " +
                      std::to_string(c.edge_faces_[*incoherent][1].cell) +
                      " induce the same orientation on edge " + std::to_string(*incoherent));
    for (Index f = 0; f < faces.size(); ++f)
      if (flip[f] < 0) faces[f] = detail::reversed_cycle(faces[f]);
    BuildOptions strict = options;
    strict.orient = false;
    return build_complex(std::move(faces), vertex_count, std::move(c.coords_), strict);
  }

  c.boundary_flag_ = std::any_of(c.edge_faces_.begin(), c.edge_faces_.end(),
                                 [](const auto& inc) { return inc.size() == 1; });
  c.faces_ = std::move(faces);
  c.id_ = PolygonalComplex::next_id();
  return c;
}

/// Reverses faces so that every interior edge is coherently oriented.
/// Throws Nonorientable when no such assignment exists.
inline PolygonalComplex coherently_orient(const PolygonalComplex& c) {
  BuildOptions options;
  options.orient = true;
  return build_complex(c.faces(), c.vertex_count(), c.coords(), options);
}

/// Sparse integer matrix of incidence numbers: columns are n-cells, rows are
/// (n-1)-cells.
class IncidenceMatrix {
 public:
  struct Entry {
    Index row;
    int value;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  IncidenceMatrix(Index rows, Index cols) : rows_(rows), columns_(cols) {}

  Index rows() const noexcept { return rows_; }
  Index cols() const noexcept { return columns_.size(); }

  void set(Index row, Index col, int value) {
    auto& column = columns_.at(col);
    auto it = std::lower_bound(column.begin(), column.end(), row,
                               [](const Entry& e, Index r) { return e.row < r; });
    if (it != column.end() && it->row == row) {
      if (value == 0)
        column.erase(it);
      else
        it->value = value;
    } else if (value != 0) {
      column.insert(it, Entry{row, value});
    }
  }

  int at(Index row, Index col) const {
    for (const auto& e : columns_.at(col))
      if (e.row == row) return e.value;
    return 0;
  }

  std::span<const Entry> column(Index col) const { return columns_.at(col); }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& col : columns_) n += col.size();
    return n;
  }

  std::vector<std::vector<long long>> dense() const {
    std::vector<std::vector<long long>> out(rows_, std::vector<long long>(cols(), 0));
    for (Index c = 0; c < cols(); ++c)
      for (const auto& e : columns_[c]) out[e.row][c] = e.value;
    return out;
  }

  /// y = M x.
  template <typename T>
  std::vector<T> apply(std::span<const T> x) const {
    std::vector<T> y(rows_, T{});
    for (Index c = 0; c < cols(); ++c)
      for (const auto& e : columns_[c]) y[e.row] += static_cast<T>(e.value) * x[c];
    return y;
  }

  /// y = M^T x, summed in the stored row order of each column.
  template <typename T>
  std::vector<T> apply_transpose(std::span<const T> x) const {
    std::vector<T> y(cols(), T{});
    for (Index c = 0; c < cols(); ++c)
      for (const auto& e : columns_[c]) y[c] += static_cast<T>(e.value) * x[e.row];
    return y;
  }

  friend bool operator==(const IncidenceMatrix&, const IncidenceMatrix&) = default;

 private:
  Index rows_;
  std::vector<std::vector<Entry>> columns_;
};

/// Nonzero entries of a*b (exact integer product).
inline std::map<std::pair<Index, Index>, long long> multiply(const IncidenceMatrix& a,
                                                             const IncidenceMatrix& b) {
  if (a.cols() != b.rows())
    throw Error(ErrorKind::DegreeMismatch, "matrix shapes do not compose");
  std::map<std::pair<Index, Index>, long long> out;
  for (Index c = 0; c < b.cols(); ++c) {
    std::map<Index, long long> column;
    for (const auto& eb : b.column(c))
      for (const auto& ea : a.column(eb.row))
        column[ea.row] += static_cast<long long>(ea.value) * eb.value;
    for (const auto& [r, v] : column)
      if (v != 0) out[{r, c}] = v;
  }
  return out;
}

/// Matrix of the boundary homomorphism on n-chains, n in {1, 2}.
inline IncidenceMatrix boundary_matrix(const PolygonalComplex& c, int n) {
  if (n == 1) {
    IncidenceMatrix m(c.vertex_count(), c.edge_count());
    for (Index e = 0; e < c.edge_count(); ++e) {
      m.set(c.edge(e).tail, e, -1);
      m.set(c.edge(e).head, e, +1);
    }
    return m;
  }
  if (n == 2) {
    IncidenceMatrix m(c.edge_count(), c.face_count());
    for (Index f = 0; f < c.face_count(); ++f)
      for (const auto& slot : c.face_edges(f).slots) m.set(slot.edge, f, slot.sign);
    return m;
  }
  throw Error(ErrorKind::DegreeOutOfRange, "boundary matrix of degree " + std::to_string(n));
}

/// Integer-valued function on the canonically oriented n-cells.
struct Chain {
  int degree = 0;
  std::vector<long long> coefficients;

  static Chain zero(const PolygonalComplex& c, int degree) {
    return {degree, std::vector<long long>(c.cell_count(degree), 0)};
  }
  static Chain unit(const PolygonalComplex& c, int degree, Index cell) {
    Chain out = zero(c, degree);
    out.coefficients.at(cell) = 1;
    return out;
  }

  Chain operator-() const {
    Chain out = *this;
    for (auto& x : out.coefficients) x = -x;
    return out;
  }

  friend bool operator==(const Chain&, const Chain&) = default;
};

inline Chain apply_boundary(const PolygonalComplex& c, const Chain& chain) {
  if (chain.degree != 1 && chain.degree != 2)
    throw Error(ErrorKind::DegreeOutOfRange,
                "boundary of a " + std::to_string(chain.degree) + "-chain");
  if (chain.coefficients.size() != c.cell_count(chain.degree))
    throw Error(ErrorKind::ComplexMismatch, "chain length does not match the complex");
  const auto m = boundary_matrix(c, chain.degree);
  return {chain.degree - 1, m.apply<long long>(chain.coefficients)};
}

/// All cells having `cell` as a face, the cell itself included.
inline std::set<CellRef> star_cells(const PolygonalComplex& c, CellRef cell) {
  if (cell.degree < 0 || cell.degree > 2 || cell.id >= c.cell_count(cell.degree))
    throw Error(ErrorKind::UnknownCell, "cell (degree " + std::to_string(cell.degree) + ", id " +
                                            std::to_string(cell.id) + ")");
  std::set<CellRef> out{cell};
  if (cell.degree == 0) {
    for (Index e : c.vertex_edges(cell.id)) out.insert({1, e});
    for (Index f : c.vertex_faces(cell.id)) out.insert({2, f});
  } else if (cell.degree == 1) {
    for (const auto& inc : c.edge_faces(cell.id)) out.insert({2, inc.cell});
  }
  return out;
}

}  // namespace polycup

#endif  // POLYCUP_COMPLEX_HPP
