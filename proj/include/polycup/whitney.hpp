#ifndef POLYCUP_WHITNEY_HPP
#define POLYCUP_WHITNEY_HPP

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "polycup/complex.hpp"
#include "polycup/error.hpp"

namespace polycup {

using Rational = boost::multiprecision::cpp_rational;

/*
 * Exact Wilson cup product on the reference 2-simplex (v0, v1, v2).
 *
 * The triangle is charted by the barycentric coordinates (x1, x2), with
 * x0 = 1 - x1 - x2, so v0 = (0,0), v1 = (1,0), v2 = (0,1) and (v0, v1, v2) is
 * positively oriented. In this chart the Whitney 2-form of the triangle is
 * 2 dx1^dx2 and integrates to exactly 1, which is the normalization under
 * which integration inverts the Whitney map on every cell. Polynomials are
 * integrated exactly with ∫ x1^a x2^b = a! b! / (a + b + 2)!.
 *
 * Basis indices: degree 0 -> vertex i; degree 1 -> the face-local edge
 * (v_i, v_{(i+1)%3}); degree 2 -> the triangle (index 0).
 */
namespace whitney {

using Monomial = std::pair<int, int>;  // exponents of (x1, x2)
using Poly = std::map<Monomial, Rational>;

inline Poly constant(const Rational& c) { return c == 0 ? Poly{} : Poly{{{0, 0}, c}}; }

inline Poly add(const Poly& a, const Poly& b) {
  Poly out = a;
  for (const auto& [m, c] : b) {
    out[m] += c;
    if (out[m] == 0) out.erase(m);
  }
  return out;
}

inline Poly scale(const Poly& a, const Rational& t) {
  Poly out;
  if (t == 0) return out;
  for (const auto& [m, c] : a) out[m] = c * t;
  return out;
}

inline Poly multiply(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      const Monomial m{ma.first + mb.first, ma.second + mb.second};
      out[m] += ca * cb;
      if (out[m] == 0) out.erase(m);
    }
  return out;
}

/// Barycentric coordinate x_i as a polynomial in the (x1, x2) chart.
inline Poly barycentric(int i) {
  if (i == 1) return Poly{{{1, 0}, 1}};
  if (i == 2) return Poly{{{0, 1}, 1}};
  return Poly{{{0, 0}, 1}, {{1, 0}, -1}, {{0, 1}, -1}};
}

/// Differential form on the chart: degree 0 -> {g}; degree 1 -> {g dx1, g dx2};
/// degree 2 -> {g dx1^dx2}.
struct Form {
  int degree = 0;
  std::vector<Poly> parts;
};

inline Form form_add(const Form& a, const Form& b) {
  Form out{a.degree, a.parts};
  for (std::size_t i = 0; i < out.parts.size(); ++i) out.parts[i] = add(out.parts[i], b.parts[i]);
  return out;
}

inline Form form_scale(const Form& a, const Rational& t) {
  Form out{a.degree, {}};
  for (const auto& p : a.parts) out.parts.push_back(scale(p, t));
  return out;
}

inline Form wedge(const Form& a, const Form& b) {
  if (a.degree + b.degree > 2) return Form{a.degree + b.degree, {}};
  if (a.degree == 0) {
    Form out{b.degree, {}};
    for (const auto& p : b.parts) out.parts.push_back(multiply(a.parts[0], p));
    return out;
  }
  if (b.degree == 0) return wedge(b, a);
  // 1 ^ 1
  return Form{2, {add(multiply(a.parts[0], b.parts[1]), scale(multiply(a.parts[1], b.parts[0]), -1))}};
}

/// dx_i as a 1-form in the chart.
inline Form differential(int i) {
  if (i == 1) return Form{1, {constant(1), constant(0)}};
  if (i == 2) return Form{1, {constant(0), constant(1)}};
  return Form{1, {constant(-1), constant(-1)}};
}

/// Whitney form of the sub-simplex (v_{s_0}, ..., v_{s_k}):
/// k! Σ_i (-1)^i x_{s_i} dx_{s_0} ^ ... (omit i) ... ^ dx_{s_k}.
inline Form whitney_form(const std::vector<int>& simplex) {
  const int k = static_cast<int>(simplex.size()) - 1;
  Rational factorial = 1;
  for (int i = 2; i <= k; ++i) factorial *= i;
  Form total{k, std::vector<Poly>(k == 1 ? 2 : 1)};
  for (int i = 0; i <= k; ++i) {
    Form term{0, {barycentric(simplex[i])}};
    for (int j = 0; j <= k; ++j)
      if (j != i) term = wedge(term, differential(simplex[j]));
    total = form_add(total, form_scale(term, (i % 2 == 0 ? 1 : -1) * factorial));
  }
  return total;
}

inline const std::array<std::array<Rational, 2>, 3>& reference_points() {
  static const std::array<std::array<Rational, 2>, 3> points{{{0, 0}, {1, 0}, {0, 1}}};
  return points;
}

inline Rational evaluate_at(const Poly& p, const std::array<Rational, 2>& point) {
  Rational sum = 0;
  for (const auto& [m, c] : p) {
    Rational term = c;
    for (int i = 0; i < m.first; ++i) term *= point[0];
    for (int i = 0; i < m.second; ++i) term *= point[1];
    sum += term;
  }
  return sum;
}

using Univariate = std::vector<Rational>;  // coefficients of t^k

inline Univariate uni_multiply(const Univariate& a, const Univariate& b) {
  Univariate out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

/// Pullback of p along x(t) = from + t (to - from).
inline Univariate restrict_to_segment(const Poly& p, const std::array<Rational, 2>& from,
                                      const std::array<Rational, 2>& to) {
  const Univariate x1{from[0], to[0] - from[0]};
  const Univariate x2{from[1], to[1] - from[1]};
  Univariate sum{Rational(0)};
  for (const auto& [m, c] : p) {
    Univariate term{c};
    for (int i = 0; i < m.first; ++i) term = uni_multiply(term, x1);
    for (int i = 0; i < m.second; ++i) term = uni_multiply(term, x2);
    if (term.size() > sum.size()) sum.resize(term.size(), Rational(0));
    for (std::size_t i = 0; i < term.size(); ++i) sum[i] += term[i];
  }
  return sum;
}

inline Rational integrate_unit_interval(const Univariate& u) {
  Rational sum = 0;
  for (std::size_t k = 0; k < u.size(); ++k) sum += u[k] / Rational(static_cast<long long>(k + 1));
  return sum;
}

inline Rational integrate_reference_triangle(const Poly& p) {
  auto factorial = [](int n) {
    boost::multiprecision::cpp_int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  };
  Rational sum = 0;
  for (const auto& [m, c] : p)
    sum += c * Rational(factorial(m.first) * factorial(m.second), factorial(m.first + m.second + 2));
  return sum;
}

/// Integral of a chart form over each cell of the matching degree.
inline std::vector<Rational> integrate_over_cells(const Form& form) {
  const auto& points = reference_points();
  std::vector<Rational> out;
  if (form.degree == 0) {
    for (int v = 0; v < 3; ++v) out.push_back(evaluate_at(form.parts[0], points[v]));
  } else if (form.degree == 1) {
    for (int s = 0; s < 3; ++s) {
      const auto& from = points[s];
      const auto& to = points[(s + 1) % 3];
      const Rational dx1 = to[0] - from[0], dx2 = to[1] - from[1];
      Poly integrand = add(scale(form.parts[0], dx1), scale(form.parts[1], dx2));
      out.push_back(integrate_unit_interval(restrict_to_segment(integrand, from, to)));
    }
  } else {
    out.push_back(integrate_reference_triangle(form.parts[0]));
  }
  return out;
}

inline std::vector<int> basis_simplex(int degree, Index i) {
  const int n = degree == 2 ? 1 : 3;
  if (i >= static_cast<Index>(n))
    throw Error(ErrorKind::UnknownCell,
                "basis index " + std::to_string(i) + " for degree " + std::to_string(degree));
  const int k = static_cast<int>(i);
  if (degree == 0) return {k};
  if (degree == 1) return {k, (k + 1) % 3};
  return {0, 1, 2};
}

}  // namespace whitney

/// Values of W(basis_i) ^ W(basis_j) integrated over every (p+q)-cell of the
/// reference triangle (3 vertices, 3 face-local edges, or the single face).
inline std::vector<Rational> whitney_cup_triangle_oracle(int p, int q, Index i, Index j) {
  if (p < 0 || q < 0 || p + q > 2)
    throw Error(ErrorKind::UnsupportedDegreePair,
                "degrees " + std::to_string(p) + " and " + std::to_string(q));
  const auto a = whitney::whitney_form(whitney::basis_simplex(p, i));
  const auto b = whitney::whitney_form(whitney::basis_simplex(q, j));
  return whitney::integrate_over_cells(whitney::wedge(a, b));
}

}  // namespace polycup

#endif  // POLYCUP_WHITNEY_HPP
