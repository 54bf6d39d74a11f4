#ifndef POLYCUP_TESTS_FIXTURES_HPP
#define POLYCUP_TESTS_FIXTURES_HPP

#include <array>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "polycup/polycup.hpp"

namespace polycup::testing {

inline std::string data_path(const std::string& name) { return std::string(POLYCUP_DATA_DIR) + "/" + name; }

inline std::string read_data(const std::string& name) {
  std::ifstream in(data_path(name), std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/*
 * Two-face disk: triangle f0 = (0,1,4) glued to quad f1 = (4,1,2,3) along
 * the edge {1,4}. Lexicographic edge ids:
 *   0:(0,1) 1:(0,4) 2:(1,2) 3:(1,4) 4:(2,3) 5:(3,4)
 * The labels e0..e5 used by several tests map onto these ids as below; in that
 * labeling f1 has [f1:e1] = -1, [f1:e3] = [f1:e4] = [f1:e5] = +1.
 */
inline PolygonalComplex two_face_disk() { return build_complex({{0, 1, 4}, {4, 1, 2, 3}}, 5); }
inline constexpr std::array<Index, 6> kDiskEdgeOfLabel{0, 3, 1, 2, 4, 5};

/// Five-quad Möbius strip: top vertices 0..4, bottom 5..9, last quad glued
/// with a half twist.
inline std::vector<std::vector<Index>> mobius_faces() {
  return {{5, 6, 1, 0}, {6, 7, 2, 1}, {7, 8, 3, 2}, {8, 9, 4, 3}, {9, 0, 5, 4}};
}

inline PolygonalComplex pentagon_complex() { return build_complex({{0, 1, 2, 3, 4}}, 5); }

/// Unit 1-form on the k-th face-local edge of face f (value +1 when read
/// along the face orientation).
inline DiscreteForm face_edge_indicator(const PolygonalComplex& c, Index f, std::size_t k) {
  std::vector<double> v(c.edge_count(), 0.0);
  const auto slot = c.face_edges(f)[k];
  v[slot.edge] = slot.sign;
  return {c, 1, std::move(v)};
}

/// Rank over Q by plain rational Gauss-Jordan elimination; test-only oracle
/// independent of the Bareiss path.
inline std::size_t rational_rank(std::vector<std::vector<Rational>> m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      const Rational factor = m[r][col] / m[rank][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

inline std::size_t rational_rank(const IncidenceMatrix& m) {
  std::vector<std::vector<Rational>> q(m.rows(), std::vector<Rational>(m.cols(), 0));
  for (Index c = 0; c < m.cols(); ++c)
    for (const auto& e : m.column(c)) q[e.row][c] = e.value;
  return rational_rank(std::move(q));
}

/// Closed 1-form on the (n x m) quad torus (vertex (i,j) = i + n j): value 1
/// on every edge crossing the line between columns k and k+1 (horizontal) or
/// rows k and k+1 (vertical), read in the increasing direction.
inline DiscreteForm torus_generator(const PolygonalComplex& c, Index n, Index m, bool horizontal, Index k) {
  std::vector<double> v(c.edge_count(), 0.0);
  auto id = [&](Index i, Index j) { return (i % n) + n * (j % m); };
  const Index count = horizontal ? m : n;
  for (Index t = 0; t < count; ++t) {
    const Index from = horizontal ? id(k, t) : id(t, k);
    const Index to = horizontal ? id(k + 1, t) : id(t, k + 1);
    const auto slot = *c.find_edge(from, to);
    v[slot.edge] = slot.sign;
  }
  return {c, 1, std::move(v)};
}

}  // namespace polycup::testing

#endif  // POLYCUP_TESTS_FIXTURES_HPP
