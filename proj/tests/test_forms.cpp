#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace polycup;
using namespace polycup::testing;

namespace {

DiscreteForm values(const PolygonalComplex& c, int degree, std::vector<double> v) {
  return {c, degree, std::move(v)};
}

}  // namespace

TEST(Forms, AddAndScale) {
  const auto tri = build_complex({{0, 1, 2}}, 3);
  EXPECT_EQ(add(tri, values(tri, 0, {1, 2, 3}), DiscreteForm::zero(tri, 0)), values(tri, 0, {1, 2, 3}));
  EXPECT_EQ(add(tri, values(tri, 1, {1, 2, 0}), values(tri, 1, {-1, -2, 0})), DiscreteForm::zero(tri, 1));
  EXPECT_EQ(add(tri, values(tri, 1, {0.5, 1.5, 0}), values(tri, 1, {0.25, 0.25, 0})),
            values(tri, 1, {0.75, 1.75, 0}));

  const auto a = gen_form(5, tri, 1);
  EXPECT_EQ(scale(tri, 1.0, a), a);
  EXPECT_EQ(scale(tri, 0.0, a), DiscreteForm::zero(tri, 1));
  EXPECT_EQ(scale(tri, 2.0, values(tri, 1, {1, -3, 0})), values(tri, 1, {2, -6, 0}));
}

TEST(Forms, Errors) {
  const auto tri = build_complex({{0, 1, 2}}, 3);
  const auto other = build_complex({{0, 1, 2}}, 3);
  try {
    add(tri, DiscreteForm::zero(tri, 0), DiscreteForm::zero(tri, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegreeMismatch);
  }
  try {
    add(tri, DiscreteForm::zero(tri, 0), DiscreteForm::zero(other, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ComplexMismatch);
  }
  EXPECT_THROW(values(tri, 1, {1, 2}), Error);
  EXPECT_THROW(evaluate(DiscreteForm::zero(tri, 1), Chain::zero(tri, 2)), Error);
}

TEST(Forms, VectorSpaceAxioms) {
  const auto c = gen_complex(11, Profile::Mixed);
  for (int k = 0; k <= 2; ++k) {
    const auto a = gen_form(1, c, k), b = gen_form(2, c, k), d = gen_form(3, c, k);
    EXPECT_EQ(add(c, a, b), add(c, b, a));
    EXPECT_LE(max_abs_difference(add(c, add(c, a, b), d), add(c, a, add(c, b, d))), 1e-15);
    EXPECT_LE(max_abs_difference(scale(c, 0.3, add(c, a, b)), add(c, scale(c, 0.3, a), scale(c, 0.3, b))),
              1e-15);
  }
}

TEST(Forms, TemporariesAreSafeToIterate) {
  double total = 0;
  for (double x : values(build_complex({{0, 1, 2}}, 3), 0, {1, 2, 4}).values()) total += x;
  EXPECT_EQ(total, 7.0);
  std::size_t corners = 0;
  for (const auto& f : build_complex({{0, 1, 2}, {0, 2, 3}}, 4).faces()) corners += f.size();
  EXPECT_EQ(corners, 6u);
}

TEST(Evaluate, Pairing) {
  const auto c = two_face_disk();
  const auto beta = values(c, 1, {0.5, -1.25, 2, 3.5, 7, -4});
  for (Index e = 0; e < 6; ++e) EXPECT_EQ(evaluate(beta, Chain::unit(c, 1, e)), beta[e]);
  EXPECT_EQ(evaluate(beta, Chain::zero(c, 1)), 0.0);
  // β(∂f1) = -β(e1) + β(e3) + β(e4) + β(e5) in the e0..e5 labels.
  auto b = [&](Index label) { return beta[kDiskEdgeOfLabel[label]]; };
  EXPECT_EQ(evaluate(beta, apply_boundary(c, Chain::unit(c, 2, 1))), -b(1) + b(3) + b(4) + b(5));
}

TEST(ExteriorDerivative, LabeledDisk) {
  const auto c = two_face_disk();
  // β(e_label) = label + 1.
  std::vector<double> v(6);
  for (Index label = 0; label < 6; ++label) v[kDiskEdgeOfLabel[label]] = static_cast<double>(label + 1);
  const auto dbeta = exterior_derivative(c, values(c, 1, v));
  EXPECT_EQ(dbeta.degree(), 2);
  EXPECT_EQ(dbeta[1], 0 * 1 - 1 * 2 + 0 * 3 + 1 * 4 + 1 * 5 + 1 * 6);
}

TEST(ExteriorDerivative, ConstantsAndTopDegree) {
  const auto c = gen_complex(4, Profile::Sphere);
  EXPECT_EQ(exterior_derivative(c, DiscreteForm::constant(c, 0, 3.7)), DiscreteForm::zero(c, 1));
  const auto top = exterior_derivative(c, gen_form(1, c, 2));
  EXPECT_EQ(top.degree(), 3);
  EXPECT_EQ(top.size(), 0u);
  try {
    exterior_derivative(c, top);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegreeOutOfRange);
  }
}

TEST(ExteriorDerivative, DSquaredIsZero) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto c = gen_complex(seed, kAllProfiles[seed % kAllProfiles.size()]);
    const auto integral = gen_integer_form(seed, c, 0);
    EXPECT_EQ(exterior_derivative(c, exterior_derivative(c, integral)), DiscreteForm::zero(c, 2));
    const auto real = gen_form(seed, c, 0);
    EXPECT_LE(exterior_derivative(c, exterior_derivative(c, real)).max_abs(), 1e-12);
  }
}

TEST(ExteriorDerivative, StokesDuality) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto c = gen_complex(seed, Profile::Mixed);
    Rng rng(seed);
    for (int q = 0; q <= 1; ++q) {
      const auto a = gen_form(seed + 100, c, q);
      Chain chain{q + 1, std::vector<long long>(c.cell_count(q + 1))};
      for (auto& x : chain.coefficients) x = rng.integer(-3, 3);
      EXPECT_NEAR(evaluate(exterior_derivative(c, a), chain), evaluate(a, apply_boundary(c, chain)), 1e-12);
    }
  }
}

TEST(IsClosed, Basic) {
  const auto c = build_complex({{0, 1, 2}}, 3);
  EXPECT_TRUE(is_closed(c, DiscreteForm::constant(c, 0, 2.0)));
  EXPECT_FALSE(is_closed(c, values(c, 0, {0, 1, 0})));
  EXPECT_TRUE(is_closed(c, gen_form(3, c, 2)));
  EXPECT_TRUE(is_closed(c, exterior_derivative(c, gen_form(3, c, 0))));
}
