#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "fixtures.hpp"

using namespace polycup;
using namespace polycup::testing;

TEST(Generators, Deterministic) {
  for (Profile p : kAllProfiles)
    for (std::uint64_t seed : {0ULL, 1ULL, 99ULL}) {
      const auto a = gen_complex(seed, p), b = gen_complex(seed, p);
      EXPECT_EQ(a, b) << to_string(p);
      EXPECT_EQ(gen_form(seed, a, 1).values().size(), a.edge_count());
      const auto x = gen_form(seed, a, 1), y = gen_form(seed, b, 1);
      EXPECT_TRUE(std::equal(x.values().begin(), x.values().end(), y.values().begin()));
      EXPECT_EQ(gen_form(seed, a, 0).size(), a.vertex_count());
      EXPECT_EQ(gen_form(seed, a, 2).size(), a.face_count());
    }
  EXPECT_NE(gen_complex(1, Profile::Mixed).faces(), gen_complex(2, Profile::Mixed).faces());
}

TEST(Generators, ProfileShapes) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const auto sphere = gen_complex(seed, Profile::Sphere);
    EXPECT_FALSE(sphere.has_boundary());
    EXPECT_FALSE(gen_complex(seed, Profile::Torus).has_boundary());
    EXPECT_TRUE(gen_complex(seed, Profile::Disk).has_boundary());
    const auto triangles = gen_complex(seed, Profile::Triangles);
    const auto quads = gen_complex(seed, Profile::Quads);
    const auto mixed = gen_complex(seed, Profile::Mixed);
    for (const auto& f : triangles.faces()) EXPECT_EQ(f.size(), 3u);
    for (const auto& f : quads.faces()) EXPECT_EQ(f.size(), 4u);
    for (const auto& f : mixed.faces()) {
      EXPECT_GE(f.size(), 3u);
      EXPECT_LE(f.size(), 12u);
    }
  }
}

TEST(Generators, MixedProfileReachesLargeFaces) {
  std::size_t largest = 0;
  std::set<std::size_t> sizes;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto c = gen_complex(seed, Profile::Mixed);
    for (const auto& f : c.faces()) {
      largest = std::max(largest, f.size());
      sizes.insert(f.size());
    }
  }
  EXPECT_GE(largest, 8u);
  EXPECT_TRUE(sizes.count(3) && sizes.count(4) && sizes.count(5));
}

TEST(Generators, FormValuesInRange) {
  const auto c = gen_complex(3, Profile::Mixed);
  for (int k = 0; k <= 2; ++k) {
    const auto a = gen_form(7, c, k);
    for (double v : a.values()) {
      EXPECT_GE(v, -1.0);
      EXPECT_LT(v, 1.0);
    }
  }
  const auto integral = gen_integer_form(7, c, 0);
  for (double v : integral.values()) EXPECT_EQ(v, std::floor(v));
  EXPECT_EQ(parse_profile("torus"), Profile::Torus);
  EXPECT_THROW(parse_profile("klein"), Error);
}

TEST(Telescoping, ExactInRationals) {
  // Both sides of the identity in exact arithmetic, written from the index
  // formula directly.
  Rng rng(11);
  for (long long n = 3; n <= 12; ++n) {
    std::vector<Rational> beta(static_cast<std::size_t>(n));
    for (auto& b : beta) b = Rational(rng.integer(-100, 100), rng.integer(1, 9));
    auto at = [&](long long k) { return beta[static_cast<std::size_t>(((k % n) + n) % n)]; };
    Rational total = 0;
    for (const auto& b : beta) total += b;
    for (long long i = 0; i < n; ++i) {
      Rational bracket = 0;
      for (long long a = 1; a <= (n - 1) / 2; ++a)
        bracket += (n - 2 * a) * (at(i + a - 1) - at(i + a) + at(i - a) - at(i - a - 1));
      EXPECT_EQ((at(i - 1) + at(i)) / 2, (bracket + 2 * total) / (2 * n)) << "n=" << n << " i=" << i;
    }
  }
}

TEST(Telescoping, FloatSidesAgreeWithRationalValue) {
  Rng rng(12);
  for (std::size_t n = 3; n <= 12; ++n) {
    std::vector<double> beta(n);
    for (auto& b : beta) b = static_cast<double>(rng.integer(-64, 64)) / 64.0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto [lhs, rhs] = detail::telescoping_sides(beta, i);
      EXPECT_EQ(lhs, 0.5 * (beta[(i + n - 1) % n] + beta[i]));
      EXPECT_NEAR(lhs, rhs, 1e-15);
    }
  }
}

TEST(CheckProperty, EveryPropertyHolds) {
  for (auto name : kPropertyNames) {
    const std::size_t trials = name == "assoc_counterexample" ? 10000 : 40;
    const auto report = check_property(name, trials, 1);
    EXPECT_TRUE(report.holds) << to_text(report);
    EXPECT_EQ(report.property, name);
  }
}

TEST(CheckProperty, ExactPropertiesHaveZeroDeviation) {
  for (auto name : {"dd_zero", "boundary_sq_zero", "unit", "locality", "specialize_simplicial",
                    "specialize_cubical"}) {
    const auto report = check_property(name, 30, 5);
    EXPECT_EQ(report.max_deviation, 0.0) << name;
    EXPECT_EQ(report.tolerance, 0.0) << name;
  }
}

TEST(CheckProperty, Reproducible) {
  const auto a = check_property("leibniz01", 50, 7), b = check_property("leibniz01", 50, 7);
  EXPECT_EQ(to_text(a), to_text(b));
  EXPECT_EQ(a.trials, 50u);
  const auto c = check_property("skew", 20, 3, Profile::Torus);
  EXPECT_TRUE(c.holds);
}

TEST(CheckProperty, CounterexampleWitness) {
  const auto report = check_property("assoc_counterexample", 10000, 1);
  ASSERT_TRUE(report.witness.has_value());
  EXPECT_TRUE(report.counterexample_mode);
  EXPECT_GT(report.max_deviation, kCounterexampleThreshold);
  EXPECT_LE(report.trials, 10000u);

  // Replay the witness: the first form is a non-closed 0-form and the
  // associativity gap exceeds the threshold.
  const auto& w = *report.witness;
  const auto c = gen_complex(w.mesh_seed, parse_profile(w.profile));
  ASSERT_EQ(w.form_seeds.size(), 3u);
  const auto note = w.note;
  const int k = note[8] - '0', l = note[10] - '0', m = note[12] - '0';
  const auto a = gen_form(w.form_seeds[0], c, k);
  const auto b = gen_form(w.form_seeds[1], c, l);
  const auto g = gen_form(w.form_seeds[2], c, m);
  EXPECT_FALSE(is_closed(c, a));
  EXPECT_GT(max_abs_difference(cup(c, a, cup(c, b, g)), cup(c, cup(c, a, b), g)), kCounterexampleThreshold);
}

TEST(CheckProperty, Errors) {
  try {
    check_property("commutative_ring", 10, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownProperty);
  }
  EXPECT_THROW(check_property("skew", 0, 1), Error);
}

TEST(CheckProperty, ReportText) {
  const auto text = to_text(check_property("unit", 3, 2));
  EXPECT_NE(text.find("property=unit\n"), std::string::npos);
  EXPECT_NE(text.find("trials=3\n"), std::string::npos);
  EXPECT_NE(text.find("status=pass\n"), std::string::npos);
}
