#ifndef POLYCUP_COHOMOLOGY_HPP
#define POLYCUP_COHOMOLOGY_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

#include "polycup/complex.hpp"
#include "polycup/error.hpp"
#include "polycup/forms.hpp"
#include "polycup/whitney.hpp"

namespace polycup {

inline constexpr double kExactTolerance = 1e-8;

using BigInt = boost::multiprecision::cpp_int;

namespace detail {

struct Overflow {};

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}

inline BigInt checked_mul(const BigInt& a, const BigInt& b) { return a * b; }
inline BigInt checked_sub(const BigInt& a, const BigInt& b) { return a - b; }

/*
 * Fraction-free (Bareiss) elimination. Every intermediate entry is a minor of
 * the input, so the division by the previous pivot is exact. Columns without
 * a pivot are skipped, which yields the rank over Q.
 */
template <typename Int>
std::size_t bareiss_rank(std::vector<std::vector<Int>> m) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();
  std::size_t rank = 0;
  Int prev = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    const Int p = m[rank][col];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const Int lead = m[r][col];
      for (std::size_t c = col + 1; c < cols; ++c) {
        const Int num = checked_sub(checked_mul(p, m[r][c]), checked_mul(lead, m[rank][c]));
        m[r][c] = num / prev;
      }
      m[r][col] = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

inline std::size_t exact_rank_dense(const std::vector<std::vector<long long>>& dense) {
  try {
    std::vector<std::vector<std::int64_t>> m(dense.size());
    for (std::size_t r = 0; r < dense.size(); ++r) m[r].assign(dense[r].begin(), dense[r].end());
    return bareiss_rank(std::move(m));
  } catch (const Overflow&) {
    std::vector<std::vector<BigInt>> m(dense.size());
    for (std::size_t r = 0; r < dense.size(); ++r)
      for (long long v : dense[r]) m[r].emplace_back(v);
    return bareiss_rank(std::move(m));
  }
}

/// Coboundary d_{q} as a dense matrix, rows (q+1)-cells, cols q-cells.
inline Eigen::MatrixXd coboundary_dense(const PolygonalComplex& c, int q) {
  const auto boundary = boundary_matrix(c, q + 1);
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(boundary.cols(), boundary.rows());
  for (Index col = 0; col < boundary.cols(); ++col)
    for (const auto& e : boundary.column(col)) d(col, e.row) = e.value;
  return d;
}

}  // namespace detail

/// Rank over Q of an integer incidence matrix, exact.
inline std::size_t exact_rank(const IncidenceMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0 || m.nonzeros() == 0) return 0;
  // Eliminate along the shorter side.
  auto dense = m.dense();
  if (m.cols() < m.rows()) {
    std::vector<std::vector<long long>> t(m.cols(), std::vector<long long>(m.rows()));
    for (Index r = 0; r < m.rows(); ++r)
      for (Index c = 0; c < m.cols(); ++c) t[c][r] = dense[r][c];
    dense = std::move(t);
  }
  return detail::exact_rank_dense(dense);
}

struct CohomologyReport {
  std::size_t vertices = 0, edges = 0, faces = 0;
  std::size_t rank_d0 = 0, rank_d1 = 0;
  std::array<std::size_t, 3> betti{};
  long long euler = 0;
};

inline CohomologyReport betti_numbers(const PolygonalComplex& c) {
  CohomologyReport r;
  r.vertices = c.vertex_count();
  r.edges = c.edge_count();
  r.faces = c.face_count();
  // d0 = ∂1^T and d1 = ∂2^T have the ranks of the boundary matrices.
  r.rank_d0 = exact_rank(boundary_matrix(c, 1));
  r.rank_d1 = exact_rank(boundary_matrix(c, 2));
  r.betti[0] = r.vertices - r.rank_d0;
  r.betti[1] = r.edges - r.rank_d0 - r.rank_d1;
  r.betti[2] = r.faces - r.rank_d1;
  r.euler = static_cast<long long>(r.vertices) - static_cast<long long>(r.edges) +
            static_cast<long long>(r.faces);
  return r;
}

struct ExactnessResult {
  bool exact = false;
  /// max |d(primitive) - a| of the least-squares primitive.
  double residual = 0.0;
  /// Minimum-norm least-squares primitive, present when exact.
  std::optional<DiscreteForm> primitive;
};

/// Decides whether a (degree 1 or 2) is d of some form via a minimum-norm
/// least-squares solve against the coboundary matrix.
inline ExactnessResult is_exact(const PolygonalComplex& c, const DiscreteForm& a,
                                double tol = kExactTolerance) {
  detail::require_same_complex(c, a);
  if (a.degree() != 1 && a.degree() != 2)
    throw Error(ErrorKind::DegreeOutOfRange,
                "exactness is defined for degrees 1 and 2, got " + std::to_string(a.degree()));
  const Eigen::MatrixXd d = detail::coboundary_dense(c, a.degree() - 1);
  const Eigen::VectorXd rhs = Eigen::Map<const Eigen::VectorXd>(a.values().data(), a.size());
  Eigen::VectorXd x = Eigen::VectorXd::Zero(d.cols());
  if (rhs.size() > 0 && rhs.lpNorm<Eigen::Infinity>() > 0.0)
    x = d.completeOrthogonalDecomposition().solve(rhs);
  ExactnessResult out;
  out.residual = rhs.size() > 0 ? (d * x - rhs).lpNorm<Eigen::Infinity>() : 0.0;
  out.exact = out.residual <= tol;
  if (out.exact)
    out.primitive = DiscreteForm(c, a.degree() - 1, std::vector<double>(x.data(), x.data() + x.size()));
  return out;
}

/// Exact decision for a rational cochain: a is exact iff appending it to the
/// coboundary matrix does not raise the rank over Q.
inline bool is_exact_rational(const PolygonalComplex& c, int degree,
                              const std::vector<Rational>& values) {
  if (degree != 1 && degree != 2)
    throw Error(ErrorKind::DegreeOutOfRange,
                "exactness is defined for degrees 1 and 2, got " + std::to_string(degree));
  if (values.size() != c.cell_count(degree))
    throw Error(ErrorKind::CountMismatch, "cochain length does not match the complex");
  const auto boundary = boundary_matrix(c, degree);
  BigInt common = 1;
  for (const auto& v : values) common = boost::multiprecision::lcm(common, denominator(v));
  std::vector<std::vector<BigInt>> d(boundary.cols(), std::vector<BigInt>(boundary.rows() + 1, 0));
  for (Index col = 0; col < boundary.cols(); ++col)
    for (const auto& e : boundary.column(col)) d[col][e.row] = e.value;
  const std::size_t base = detail::bareiss_rank(d);
  for (Index row = 0; row < d.size(); ++row)
    d[row].back() = numerator(values[row]) * (common / denominator(values[row]));
  return detail::bareiss_rank(std::move(d)) == base;
}

/// Closed forms a and b are cohomologous iff a - b is exact.
inline bool cohomologous(const PolygonalComplex& c, const DiscreteForm& a, const DiscreteForm& b,
                         double tol = kExactTolerance) {
  detail::require_compatible(a, b);
  detail::require_same_complex(c, a);
  if (!is_closed(c, a, tol)) throw Error(ErrorKind::NotClosed, "first form is not closed");
  if (!is_closed(c, b, tol)) throw Error(ErrorKind::NotClosed, "second form is not closed");
  if (a.degree() == 0) return max_abs_difference(a, b) <= tol;
  return is_exact(c, subtract(c, a, b), tol).exact;
}

}  // namespace polycup

#endif  // POLYCUP_COHOMOLOGY_HPP
