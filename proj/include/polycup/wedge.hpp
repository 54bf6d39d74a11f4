#ifndef POLYCUP_WEDGE_HPP
#define POLYCUP_WEDGE_HPP

#include <string>
#include <vector>

#include "polycup/complex.hpp"
#include "polycup/error.hpp"
#include "polycup/forms.hpp"

namespace polycup {

/// Weight of the offset-`a` term of the 1-form product on a p-gon:
/// 1/2 - a/p = (p - 2a) / (2p). Only offsets 1 <= a <= (p-1)/2 contribute.
inline double cup11_weight(std::size_t p, std::size_t a) {
  return static_cast<double>(static_cast<long long>(p) - 2 * static_cast<long long>(a)) /
         static_cast<double>(2 * p);
}

/// (a ∪ b)(v) = a(v) b(v).
inline DiscreteForm cup00(const PolygonalComplex& c, const DiscreteForm& a, const DiscreteForm& b) {
  detail::require_same_complex(c, a);
  detail::require_same_complex(c, b);
  std::vector<double> out(c.vertex_count());
  for (Index v = 0; v < out.size(); ++v) out[v] = a[v] * b[v];
  return {c, 0, std::move(out)};
}

/// (a ∪ b)(e) = ½ (a(tail) + a(head)) b(e) on each stored edge.
inline DiscreteForm cup01(const PolygonalComplex& c, const DiscreteForm& a, const DiscreteForm& b) {
  detail::require_same_complex(c, a);
  detail::require_same_complex(c, b);
  std::vector<double> out(c.edge_count());
  for (Index e = 0; e < out.size(); ++e) {
    const Edge& edge = c.edge(e);
    out[e] = 0.5 * (a[edge.tail] + a[edge.head]) * b[e];
  }
  return {c, 1, std::move(out)};
}

/// (a ∪ b)(f) = (1/p) (Σ a(v_i)) b(f) on each p-gon.
inline DiscreteForm cup02(const PolygonalComplex& c, const DiscreteForm& a, const DiscreteForm& b) {
  detail::require_same_complex(c, a);
  detail::require_same_complex(c, b);
  std::vector<double> out(c.face_count());
  for (Index f = 0; f < out.size(); ++f) {
    const auto face = c.face(f);
    double sum = 0.0;
    for (Index v : face) sum += a[v];
    out[f] = (sum / static_cast<double>(face.size())) * b[f];
  }
  return {c, 2, std::move(out)};
}

/// Product of two 1-forms on one face, reading both through the face-local
/// orientation of each edge slot.
inline double cup11_on_face(const FaceLocalEdgeView& view, const DiscreteForm& a,
                            const DiscreteForm& b) {
  const std::size_t p = view.size();
  double total = 0.0;
  for (std::size_t offset = 1; offset <= (p - 1) / 2; ++offset) {
    double inner = 0.0;
    for (std::size_t i = 0; i < p; ++i) {
      const auto& here = view[i];
      const auto& ahead = view[(i + offset) % p];
      const auto& behind = view[(i + p - offset) % p];
      inner += a.oriented(here.edge, here.sign) *
               (b.oriented(ahead.edge, ahead.sign) - b.oriented(behind.edge, behind.sign));
    }
    total += cup11_weight(p, offset) * inner;
  }
  return total;
}

inline DiscreteForm cup11(const PolygonalComplex& c, const DiscreteForm& a, const DiscreteForm& b) {
  detail::require_same_complex(c, a);
  detail::require_same_complex(c, b);
  std::vector<double> out(c.face_count());
  for (Index f = 0; f < out.size(); ++f) out[f] = cup11_on_face(c.face_edges(f), a, b);
  return {c, 2, std::move(out)};
}

/// The polygonal cup product for every degree pair with k + l <= 2. Products
/// with a 0-form on the right are computed as the mirrored product, with sign
/// (-1)^{kl} = +1.
inline DiscreteForm cup(const PolygonalComplex& c, const DiscreteForm& a, const DiscreteForm& b) {
  if (a.complex_id() != b.complex_id())
    throw Error(ErrorKind::ComplexMismatch, "forms live on different complexes");
  detail::require_same_complex(c, a);
  const int k = a.degree(), l = b.degree();
  if (k < 0 || l < 0 || k + l > 2)
    throw Error(ErrorKind::DegreeOverflow,
                "cup of degrees " + std::to_string(k) + " and " + std::to_string(l));
  if (k == 0 && l == 0) return cup00(c, a, b);
  if (k == 0 && l == 1) return cup01(c, a, b);
  if (k == 0 && l == 2) return cup02(c, a, b);
  if (k == 1 && l == 0) return cup01(c, b, a);
  if (k == 2 && l == 0) return cup02(c, b, a);
  return cup11(c, a, b);
}

/// Simplicial cup product, written directly on triangles (v0, v1, v2) with
/// indices mod 3. Edge values are looked up by vertex pair. Requires an
/// all-triangle complex; used to cross-check the polygonal product.
inline DiscreteForm simplicial_cup(const PolygonalComplex& c, const DiscreteForm& a,
                                   const DiscreteForm& b) {
  for (Index f = 0; f < c.face_count(); ++f)
    if (c.face(f).size() != 3)
      throw Error(ErrorKind::DegenerateFace, "face " + std::to_string(f) + " is not a triangle");
  const int k = a.degree(), l = b.degree();
  auto edge_value = [&](const DiscreteForm& form, Index u, Index v) {
    const auto slot = *c.find_edge(u, v);
    return slot.sign > 0 ? form[slot.edge] : -form[slot.edge];
  };
  if (k == 0 && l == 0) {
    std::vector<double> out(c.vertex_count());
    for (Index v = 0; v < out.size(); ++v) out[v] = a[v] * b[v];
    return {c, 0, std::move(out)};
  }
  if (k == 0 && l == 1) {
    std::vector<double> out(c.edge_count());
    for (Index e = 0; e < out.size(); ++e) {
      const Index v0 = c.edge(e).tail, v1 = c.edge(e).head;
      out[e] = 0.5 * (a[v0] + a[v1]) * edge_value(b, v0, v1);
    }
    return {c, 1, std::move(out)};
  }
  if (k == 0 && l == 2) {
    std::vector<double> out(c.face_count());
    for (Index f = 0; f < out.size(); ++f) {
      const auto t = c.face(f);
      out[f] = ((a[t[0]] + a[t[1]] + a[t[2]]) / 3.0) * b[f];
    }
    return {c, 2, std::move(out)};
  }
  if (k == 1 && l == 1) {
    std::vector<double> out(c.face_count());
    for (Index f = 0; f < out.size(); ++f) {
      const auto t = c.face(f);
      double sum = 0.0;
      for (int i = 0; i < 3; ++i) {
        // v_{i-1} = v_{i+2} mod 3.
        const Index vi = t[i], vi1 = t[(i + 1) % 3], vi2 = t[(i + 2) % 3];
        sum += edge_value(a, vi, vi1) * (edge_value(b, vi1, vi2) - edge_value(b, vi2, vi));
      }
      out[f] = (1.0 / 6.0) * sum;
    }
    return {c, 2, std::move(out)};
  }
  throw Error(ErrorKind::UnsupportedDegreePair,
              "simplicial reference covers (0,0), (0,1), (0,2), (1,1)");
}

/// Cubical cup product on quadrilaterals (v0, v1, v2, v3), indices mod 4.
/// Requires an all-quad complex.
inline DiscreteForm cubical_cup(const PolygonalComplex& c, const DiscreteForm& a,
                                const DiscreteForm& b) {
  for (Index f = 0; f < c.face_count(); ++f)
    if (c.face(f).size() != 4)
      throw Error(ErrorKind::DegenerateFace, "face " + std::to_string(f) + " is not a quad");
  const int k = a.degree(), l = b.degree();
  auto edge_value = [&](const DiscreteForm& form, Index u, Index v) {
    const auto slot = *c.find_edge(u, v);
    return slot.sign > 0 ? form[slot.edge] : -form[slot.edge];
  };
  if (k == 0 && l == 0) {
    std::vector<double> out(c.vertex_count());
    for (Index v = 0; v < out.size(); ++v) out[v] = a[v] * b[v];
    return {c, 0, std::move(out)};
  }
  if (k == 0 && l == 1) {
    std::vector<double> out(c.edge_count());
    for (Index e = 0; e < out.size(); ++e) {
      const Index v0 = c.edge(e).tail, v1 = c.edge(e).head;
      out[e] = 0.5 * (a[v0] + a[v1]) * edge_value(b, v0, v1);
    }
    return {c, 1, std::move(out)};
  }
  if (k == 0 && l == 2) {
    std::vector<double> out(c.face_count());
    for (Index f = 0; f < out.size(); ++f) {
      const auto q = c.face(f);
      out[f] = ((a[q[0]] + a[q[1]] + a[q[2]] + a[q[3]]) / 4.0) * b[f];
    }
    return {c, 2, std::move(out)};
  }
  if (k == 1 && l == 1) {
    std::vector<double> out(c.face_count());
    for (Index f = 0; f < out.size(); ++f) {
      const auto q = c.face(f);
      auto v = [&](int i) { return q[((i % 4) + 4) % 4]; };
      double sum = 0.0;
      for (int i = 0; i < 4; ++i)
        sum += edge_value(a, v(i), v(i + 1)) *
               (edge_value(b, v(i + 1), v(i + 2)) - edge_value(b, v(i - 1), v(i)));
      out[f] = 0.25 * sum;
    }
    return {c, 2, std::move(out)};
  }
  throw Error(ErrorKind::UnsupportedDegreePair,
              "cubical reference covers (0,0), (0,1), (0,2), (1,1)");
}

}  // namespace polycup

#endif  // POLYCUP_WEDGE_HPP
