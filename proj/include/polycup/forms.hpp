#ifndef POLYCUP_FORMS_HPP
#define POLYCUP_FORMS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "polycup/complex.hpp"
#include "polycup/error.hpp"

namespace polycup {

inline constexpr double kClosedTolerance = 1e-12;

/// A real-valued q-cochain: one value per canonically oriented q-cell.
/// Reading through the reversed orientation of a cell negates the value.
class DiscreteForm {
 public:
  DiscreteForm() = default;

  DiscreteForm(const PolygonalComplex& c, int degree, std::vector<double> values)
      : degree_(degree), values_(std::move(values)), complex_id_(c.id()) {
    if (values_.size() != c.cell_count(degree))
      throw Error(ErrorKind::CountMismatch,
                  std::to_string(values_.size()) + " values for " +
                      std::to_string(c.cell_count(degree)) + " cells of degree " +
                      std::to_string(degree));
  }

  static DiscreteForm zero(const PolygonalComplex& c, int degree) {
    return {c, degree, std::vector<double>(c.cell_count(degree), 0.0)};
  }
  static DiscreteForm constant(const PolygonalComplex& c, int degree, double value) {
    return {c, degree, std::vector<double>(c.cell_count(degree), value)};
  }
  /// I^0, the constant 0-form equal to 1 on every vertex.
  static DiscreteForm unit(const PolygonalComplex& c) { return constant(c, 0, 1.0); }

  int degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::span<const double> values() const& noexcept { return values_; }
  // Called on a temporary, hand the storage over instead of a dangling view.
  std::vector<double> values() && noexcept { return std::move(values_); }
  std::vector<double> values() const&& { return values_; }
  double operator[](Index i) const { return values_[i]; }
  double at(Index i) const { return values_.at(i); }
  std::uint64_t complex_id() const noexcept { return complex_id_; }

  /// Value on a cell read through `sign` (+1 stored orientation, -1 reversed).
  double oriented(Index i, int sign) const { return sign > 0 ? values_[i] : -values_[i]; }

  double max_abs() const {
    double m = 0.0;
    for (double v : values_) m = std::max(m, std::abs(v));
    return m;
  }

  friend bool operator==(const DiscreteForm&, const DiscreteForm&) = default;

 private:
  int degree_ = 0;
  std::vector<double> values_;
  std::uint64_t complex_id_ = 0;
};

namespace detail {

inline void require_same_complex(const PolygonalComplex& c, const DiscreteForm& a) {
  if (a.complex_id() != c.id())
    throw Error(ErrorKind::ComplexMismatch, "form was not built on this complex");
}

inline void require_compatible(const DiscreteForm& a, const DiscreteForm& b) {
  if (a.complex_id() != b.complex_id())
    throw Error(ErrorKind::ComplexMismatch, "forms live on different complexes");
  if (a.degree() != b.degree())
    throw Error(ErrorKind::DegreeMismatch, "degrees " + std::to_string(a.degree()) + " and " +
                                               std::to_string(b.degree()));
}

}  // namespace detail

inline DiscreteForm add(const PolygonalComplex& c, const DiscreteForm& a, const DiscreteForm& b) {
  detail::require_compatible(a, b);
  detail::require_same_complex(c, a);
  std::vector<double> out(a.size());
  for (Index i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
  return {c, a.degree(), std::move(out)};
}

inline DiscreteForm subtract(const PolygonalComplex& c, const DiscreteForm& a,
                             const DiscreteForm& b) {
  detail::require_compatible(a, b);
  detail::require_same_complex(c, a);
  std::vector<double> out(a.size());
  for (Index i = 0; i < out.size(); ++i) out[i] = a[i] - b[i];
  return {c, a.degree(), std::move(out)};
}

inline DiscreteForm scale(const PolygonalComplex& c, double t, const DiscreteForm& a) {
  detail::require_same_complex(c, a);
  std::vector<double> out(a.size());
  for (Index i = 0; i < out.size(); ++i) out[i] = t * a[i];
  return {c, a.degree(), std::move(out)};
}

/// Natural pairing <a, chain>.
inline double evaluate(const DiscreteForm& a, const Chain& chain) {
  if (a.degree() != chain.degree)
    throw Error(ErrorKind::DegreeMismatch, "form of degree " + std::to_string(a.degree()) +
                                               " on a " + std::to_string(chain.degree) + "-chain");
  if (a.size() != chain.coefficients.size())
    throw Error(ErrorKind::ComplexMismatch, "chain length does not match the form");
  double sum = 0.0;
  for (Index i = 0; i < a.size(); ++i)
    if (chain.coefficients[i] != 0) sum += static_cast<double>(chain.coefficients[i]) * a[i];
  return sum;
}

/// Coboundary: (da)(c) = a(boundary of c). The derivative of a 2-form is the
/// empty 3-form since there are no 3-cells.
inline DiscreteForm exterior_derivative(const PolygonalComplex& c, const DiscreteForm& a) {
  detail::require_same_complex(c, a);
  switch (a.degree()) {
    case 0: {
      std::vector<double> out(c.edge_count());
      for (Index e = 0; e < c.edge_count(); ++e) out[e] = a[c.edge(e).head] - a[c.edge(e).tail];
      return {c, 1, std::move(out)};
    }
    case 1: {
      std::vector<double> out(c.face_count());
      for (Index f = 0; f < c.face_count(); ++f) {
        double sum = 0.0;
        for (const auto& slot : c.face_edges(f).slots) sum += a.oriented(slot.edge, slot.sign);
        out[f] = sum;
      }
      return {c, 2, std::move(out)};
    }
    case 2:
      return {c, 3, {}};
    default:
      throw Error(ErrorKind::DegreeOutOfRange,
                  "exterior derivative of a " + std::to_string(a.degree()) + "-form");
  }
}

inline bool is_closed(const PolygonalComplex& c, const DiscreteForm& a,
                      double tol = kClosedTolerance) {
  if (a.degree() >= 2) return true;
  return exterior_derivative(c, a).max_abs() <= tol;
}

/// max |a - b| over cells; forms must be comparable.
inline double max_abs_difference(const DiscreteForm& a, const DiscreteForm& b) {
  detail::require_compatible(a, b);
  double m = 0.0;
  for (Index i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace polycup

#endif  // POLYCUP_FORMS_HPP
