#ifndef POLYCUP_VERIFY_HPP
#define POLYCUP_VERIFY_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polycup/complex.hpp"
#include "polycup/error.hpp"
#include "polycup/forms.hpp"
#include "polycup/generate.hpp"
#include "polycup/meshio.hpp"
#include "polycup/wedge.hpp"

namespace polycup {

/// Float-weighted identities on values in [-1, 1] and faces of degree <= 12.
inline constexpr double kIdentityTolerance = 1e-12;
/// Deviation a counterexample must exceed to count as a genuine failure.
inline constexpr double kCounterexampleThreshold = 1e-6;

inline constexpr std::array<std::string_view, 15> kPropertyNames{
    "dd_zero",         "boundary_sq_zero",      "leibniz00",
    "leibniz01",       "skew",                  "unit",
    "bilinear",        "assoc_closed",          "assoc_counterexample",
    "telescoping_eq9", "specialize_simplicial", "specialize_cubical",
    "orientation_covariance", "locality",       "rotation_invariance"};

struct Witness {
  std::string profile;
  std::uint64_t mesh_seed = 0;
  std::vector<std::uint64_t> form_seeds;
  std::optional<CellRef> cell;
  std::string note;
};

struct PropertyReport {
  std::string property;
  std::size_t trials = 0;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  /// True for properties that must find a violation rather than bound one.
  bool counterexample_mode = false;
  bool holds = false;
  std::optional<Witness> witness;
};

inline std::string to_text(const PropertyReport& r) {
  std::string out;
  out += "property=" + r.property + "\n";
  out += "trials=" + std::to_string(r.trials) + "\n";
  out += "max_deviation=" + format_double(r.max_deviation) + "\n";
  out += std::string(r.counterexample_mode ? "threshold=" : "tolerance=") +
         format_double(r.tolerance) + "\n";
  out += std::string("status=") + (r.holds ? "pass" : "fail") + "\n";
  if (r.witness) {
    const auto& w = *r.witness;
    out += "witness.profile=" + w.profile + "\n";
    out += "witness.mesh_seed=" + std::to_string(w.mesh_seed) + "\n";
    out += "witness.form_seeds=";
    for (std::size_t i = 0; i < w.form_seeds.size(); ++i)
      out += (i ? "," : "") + std::to_string(w.form_seeds[i]);
    out += "\n";
    if (w.cell)
      out += "witness.cell=" + std::to_string(w.cell->degree) + ":" + std::to_string(w.cell->id) + "\n";
    if (!w.note.empty()) out += "witness.note=" + w.note + "\n";
  }
  return out;
}

namespace detail {

/// Largest |a - b| and the cell attaining it.
struct Deviation {
  double value = 0.0;
  std::optional<CellRef> cell;

  void absorb(const DiscreteForm& a, const DiscreteForm& b) {
    require_compatible(a, b);
    for (Index i = 0; i < a.size(); ++i) {
      const double d = std::abs(a[i] - b[i]);
      if (d > value || std::isnan(d)) {
        value = std::isnan(d) ? std::numeric_limits<double>::infinity() : d;
        cell = CellRef{a.degree(), i};
      }
    }
  }
  void absorb(double d, std::optional<CellRef> at = std::nullopt) {
    if (d > value) {
      value = d;
      cell = at;
    }
  }
};

struct TrialContext {
  Profile profile;
  std::uint64_t mesh_seed;
  std::uint64_t seed;
  std::vector<std::uint64_t> used_seeds;

  std::uint64_t form_seed(std::uint64_t k) {
    used_seeds.push_back(derive_seed(seed, 0x666f726d73ULL, k));
    return used_seeds.back();
  }
};

using Trial = std::function<Deviation(const PolygonalComplex&, TrialContext&)>;

inline PropertyReport run_trials(std::string_view name, std::size_t trials, std::uint64_t seed,
                                 std::optional<Profile> profile, std::vector<Profile> defaults,
                                 double tolerance, const Trial& trial) {
  PropertyReport report;
  report.property = std::string(name);
  report.trials = trials;
  report.tolerance = tolerance;
  for (std::size_t t = 0; t < trials; ++t) {
    TrialContext ctx{profile ? *profile : defaults[t % defaults.size()],
                     derive_seed(seed, t, 1), derive_seed(seed, t, 2), {}};
    const auto c = gen_complex(ctx.mesh_seed, ctx.profile);
    const Deviation dev = trial(c, ctx);
    if (dev.value > tolerance && !report.witness)
      report.witness = Witness{std::string(to_string(ctx.profile)), ctx.mesh_seed, ctx.used_seeds,
                               dev.cell, "trial " + std::to_string(t)};
    report.max_deviation = std::max(report.max_deviation, dev.value);
  }
  report.holds = report.max_deviation <= tolerance;
  return report;
}

inline const std::vector<Profile>& all_profiles() {
  static const std::vector<Profile> v(kAllProfiles.begin(), kAllProfiles.end());
  return v;
}

/// Complex with the given faces reversed; coherence is not required.
inline PolygonalComplex with_reversed_faces(const PolygonalComplex& c, const std::vector<Index>& which) {
  auto faces = c.faces();
  for (Index f : which) faces[f] = reversed_cycle(faces[f]);
  BuildOptions options;
  options.require_coherent = false;
  return build_complex(std::move(faces), c.vertex_count(), c.coords(), options);
}

/// The same form values attached to another complex with identical cells.
inline DiscreteForm transplant(const DiscreteForm& a, const PolygonalComplex& target) {
  return {target, a.degree(), std::vector<double>(a.values().begin(), a.values().end())};
}

inline constexpr std::array<std::pair<int, int>, 6> kDegreePairs{
    {{0, 0}, {0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 1}}};

/// Both sides of the telescoping identity for face-local values beta at index i.
inline std::pair<double, double> telescoping_sides(std::span<const double> beta, std::size_t i) {
  const long long n = static_cast<long long>(beta.size());
  auto at = [&](long long k) { return beta[static_cast<std::size_t>(((k % n) + n) % n)]; };
  const long long ii = static_cast<long long>(i);
  const double lhs = 0.5 * (at(ii - 1) + at(ii));
  double bracket = 0.0;
  for (long long a = 1; a <= (n - 1) / 2; ++a)
    bracket += static_cast<double>(n - 2 * a) *
               (at(ii + a - 1) - at(ii + a) + at(ii - a) - at(ii - a - 1));
  double total = 0.0;
  for (double b : beta) total += b;
  const double rhs = (bracket + 2.0 * total) / (2.0 * static_cast<double>(n));
  return {lhs, rhs};
}

}  // namespace detail

/// Runs the named identity over `trials` generated instances. With no
/// profile, instances cycle through the property's default mesh profiles.
inline PropertyReport check_property(std::string_view name, std::size_t trials, std::uint64_t seed,
                                     std::optional<Profile> profile = std::nullopt) {
  using detail::Deviation;
  using detail::TrialContext;
  if (trials == 0) throw Error(ErrorKind::CountMismatch, "trials must be at least 1");
  const auto& all = detail::all_profiles();

  if (name == "dd_zero") {
    // Integer-valued inputs: every intermediate is an exact integer.
    return detail::run_trials(name, trials, seed, profile, all, 0.0,
                              [](const PolygonalComplex& c, TrialContext& ctx) {
                                Deviation dev;
                                const auto a = gen_integer_form(ctx.form_seed(0), c, 0);
                                dev.absorb(exterior_derivative(c, exterior_derivative(c, a)),
                                           DiscreteForm::zero(c, 2));
                                return dev;
                              });
  }
  if (name == "boundary_sq_zero") {
    return detail::run_trials(name, trials, seed, profile, all, 0.0,
                              [](const PolygonalComplex& c, TrialContext&) {
                                Deviation dev;
                                for (const auto& [rc, v] : multiply(boundary_matrix(c, 1), boundary_matrix(c, 2)))
                                  dev.absorb(static_cast<double>(std::llabs(v)), CellRef{2, rc.second});
                                return dev;
                              });
  }
  if (name == "leibniz00" || name == "leibniz01") {
    const int l = name == "leibniz00" ? 0 : 1;
    return detail::run_trials(name, trials, seed, profile, {Profile::Mixed}, kIdentityTolerance,
                              [l](const PolygonalComplex& c, TrialContext& ctx) {
                                Deviation dev;
                                const auto a = gen_form(ctx.form_seed(0), c, 0);
                                const auto b = gen_form(ctx.form_seed(1), c, l);
                                const auto lhs = exterior_derivative(c, cup(c, a, b));
                                const auto rhs = add(c, cup(c, exterior_derivative(c, a), b),
                                                     cup(c, a, exterior_derivative(c, b)));
                                dev.absorb(lhs, rhs);
                                return dev;
                              });
  }
  if (name == "skew") {
    return detail::run_trials(name, trials, seed, profile, all, kIdentityTolerance,
                              [](const PolygonalComplex& c, TrialContext& ctx) {
                                Deviation dev;
                                for (const auto& [k, l] : detail::kDegreePairs) {
                                  const auto a = gen_form(ctx.form_seed(2 * k + 7 * l), c, k);
                                  const auto b = gen_form(ctx.form_seed(2 * k + 7 * l + 1), c, l);
                                  const double sign = (k * l) % 2 ? -1.0 : 1.0;
                                  dev.absorb(cup(c, a, b), scale(c, sign, cup(c, b, a)));
                                }
                                return dev;
                              });
  }
  if (name == "unit") {
    return detail::run_trials(name, trials, seed, profile, all, 0.0,
                              [](const PolygonalComplex& c, TrialContext& ctx) {
                                Deviation dev;
                                const auto one = DiscreteForm::unit(c);
                                for (int k = 0; k <= 2; ++k) {
                                  const auto a = gen_form(ctx.form_seed(k), c, k);
                                  dev.absorb(cup(c, one, a), a);
                                  dev.absorb(cup(c, a, one), a);
                                }
                                return dev;
                              });
  }
  if (name == "bilinear") {
    return detail::run_trials(
        name, trials, seed, profile, all, kIdentityTolerance,
        [](const PolygonalComplex& c, TrialContext& ctx) {
          Deviation dev;
          Rng rng(ctx.form_seed(100));
          for (const auto& [k, l] : detail::kDegreePairs) {
            const double t = rng.uniform(-1.0, 1.0);
            const auto a = gen_form(ctx.form_seed(10 * k + l), c, k);
            const auto a2 = gen_form(ctx.form_seed(10 * k + l + 30), c, k);
            const auto b = gen_form(ctx.form_seed(10 * k + l + 60), c, l);
            const auto b2 = gen_form(ctx.form_seed(10 * k + l + 90), c, l);
            dev.absorb(cup(c, add(c, scale(c, t, a), a2), b),
                       add(c, scale(c, t, cup(c, a, b)), cup(c, a2, b)));
            dev.absorb(cup(c, a, add(c, scale(c, t, b), b2)),
                       add(c, scale(c, t, cup(c, a, b)), cup(c, a, b2)));
          }
          return dev;
        });
  }
  if (name == "assoc_closed") {
    return detail::run_trials(
        name, trials, seed, profile, all, kIdentityTolerance,
        [](const PolygonalComplex& c, TrialContext& ctx) {
          Deviation dev;
          Rng rng(ctx.form_seed(100));
          auto constant = [&] { return DiscreteForm::constant(c, 0, rng.uniform(-1.0, 1.0)); };
          auto assoc = [&](const DiscreteForm& a, const DiscreteForm& b, const DiscreteForm& g) {
            dev.absorb(cup(c, a, cup(c, b, g)), cup(c, cup(c, a, b), g));
          };
          // Three 0-forms: always.
          assoc(gen_form(ctx.form_seed(0), c, 0), gen_form(ctx.form_seed(1), c, 0),
                gen_form(ctx.form_seed(2), c, 0));
          // (0,0,1) and (0,0,2): either 0-form closed.
          for (int m : {1, 2}) {
            const auto g = gen_form(ctx.form_seed(10 + m), c, m);
            assoc(constant(), gen_form(ctx.form_seed(20 + m), c, 0), g);
            assoc(gen_form(ctx.form_seed(30 + m), c, 0), constant(), g);
          }
          // (0,1,1): the 0-form closed.
          assoc(constant(), gen_form(ctx.form_seed(40), c, 1), gen_form(ctx.form_seed(41), c, 1));
          return dev;
        });
  }
  if (name == "assoc_counterexample") {
    PropertyReport report;
    report.property = std::string(name);
    report.tolerance = kCounterexampleThreshold;
    report.counterexample_mode = true;
    const std::array<std::array<int, 3>, 3> triples{{{0, 0, 1}, {0, 0, 2}, {0, 1, 1}}};
    for (std::size_t t = 0; t < trials; ++t) {
      TrialContext ctx{profile ? *profile : all[t % all.size()], derive_seed(seed, t, 1),
                       derive_seed(seed, t, 2), {}};
      const auto c = gen_complex(ctx.mesh_seed, ctx.profile);
      const auto& deg = triples[t % triples.size()];
      const auto a = gen_form(ctx.form_seed(0), c, deg[0]);
      const auto b = gen_form(ctx.form_seed(1), c, deg[1]);
      const auto g = gen_form(ctx.form_seed(2), c, deg[2]);
      report.trials = t + 1;
      if (is_closed(c, a) || (deg[1] == 0 && is_closed(c, b))) continue;
      Deviation dev;
      dev.absorb(cup(c, a, cup(c, b, g)), cup(c, cup(c, a, b), g));
      report.max_deviation = std::max(report.max_deviation, dev.value);
      if (dev.value > kCounterexampleThreshold) {
        report.witness = Witness{std::string(to_string(ctx.profile)), ctx.mesh_seed, ctx.used_seeds,
                                 dev.cell,
                                 "degrees " + std::to_string(deg[0]) + "," + std::to_string(deg[1]) +
                                     "," + std::to_string(deg[2]) + "; trial " + std::to_string(t)};
        break;
      }
    }
    report.holds = report.witness.has_value();
    return report;
  }
  if (name == "telescoping_eq9") {
    PropertyReport report;
    report.property = std::string(name);
    report.trials = trials;
    report.tolerance = kIdentityTolerance;
    for (std::size_t t = 0; t < trials; ++t) {
      Rng rng(derive_seed(seed, t, 3));
      for (std::size_t n = 3; n <= 12; ++n) {
        std::vector<double> beta(n);
        for (auto& b : beta) b = rng.uniform(-1.0, 1.0);
        for (std::size_t i = 0; i < n; ++i) {
          const auto [lhs, rhs] = detail::telescoping_sides(beta, i);
          const double d = std::abs(lhs - rhs);
          if (d > report.max_deviation) report.max_deviation = d;
          if (d > kIdentityTolerance && !report.witness)
            report.witness = Witness{"polygon", 0, {derive_seed(seed, t, 3)}, std::nullopt,
                                     "n=" + std::to_string(n) + " i=" + std::to_string(i)};
        }
      }
    }
    report.holds = report.max_deviation <= kIdentityTolerance;
    return report;
  }
  if (name == "specialize_simplicial" || name == "specialize_cubical") {
    const bool simplicial = name == "specialize_simplicial";
    const std::vector<Profile> defaults{simplicial ? Profile::Triangles : Profile::Quads};
    // Exact float agreement: both routes evaluate identical operation sequences.
    auto report = detail::run_trials(
        name, trials, seed, profile, defaults, 0.0,
        [simplicial](const PolygonalComplex& c, TrialContext& ctx) {
          Deviation dev;
          for (const auto& [k, l] : {std::pair{0, 0}, std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 1}}) {
            const auto a = gen_form(ctx.form_seed(4 * k + l), c, k);
            const auto b = gen_form(ctx.form_seed(4 * k + l + 20), c, l);
            dev.absorb(cup(c, a, b), simplicial ? simplicial_cup(c, a, b) : cubical_cup(c, a, b));
          }
          return dev;
        });
    // Coefficient-level agreement: 1/2 - 1/3 = 1/6 and 1/2 - 1/4 = 1/4.
    const double weight = simplicial ? cup11_weight(3, 1) : cup11_weight(4, 1);
    const double expected = simplicial ? 1.0 / 6.0 : 0.25;
    if (weight != expected) report.holds = false;
    return report;
  }
  if (name == "orientation_covariance") {
    return detail::run_trials(
        name, trials, seed, profile, all, kIdentityTolerance,
        [](const PolygonalComplex& c, TrialContext& ctx) {
          Deviation dev;
          Rng rng(ctx.form_seed(100));
          const Index f = static_cast<Index>(rng.integer(0, c.face_count() - 1));
          const auto flipped = detail::with_reversed_faces(c, {f});
          const auto a0 = gen_form(ctx.form_seed(0), c, 0);
          const auto a1 = gen_form(ctx.form_seed(1), c, 1);
          const auto b1 = gen_form(ctx.form_seed(2), c, 1);
          const auto b2 = gen_form(ctx.form_seed(3), c, 2);
          // The same geometric 2-cochain seen from the reversed face.
          std::vector<double> b2_values(b2.values().begin(), b2.values().end());
          b2_values[f] = -b2_values[f];
          const DiscreteForm b2_flipped(flipped, 2, std::move(b2_values));

          auto compare = [&](const DiscreteForm& original, const DiscreteForm& reoriented) {
            std::vector<double> expected(original.values().begin(), original.values().end());
            expected[f] = -expected[f];
            dev.absorb(reoriented, DiscreteForm(flipped, 2, std::move(expected)));
          };
          compare(cup(c, a1, b1), cup(flipped, detail::transplant(a1, flipped), detail::transplant(b1, flipped)));
          compare(cup(c, a0, b2), cup(flipped, detail::transplant(a0, flipped), b2_flipped));
          return dev;
        });
  }
  if (name == "locality") {
    return detail::run_trials(
        name, trials, seed, profile, all, 0.0,
        [](const PolygonalComplex& c, TrialContext& ctx) {
          Deviation dev;
          Rng rng(ctx.form_seed(100));
          for (const auto& [k, l] : detail::kDegreePairs) {
            const auto a = gen_form(ctx.form_seed(10 * k + l), c, k);
            const auto b = gen_form(ctx.form_seed(10 * k + l + 50), c, l);
            const auto base = cup(c, a, b);
            // Perturb one cell of either factor; the product may only change
            // on cells in the star of the perturbed cell.
            for (int side = 0; side < 2; ++side) {
              const auto& target = side == 0 ? a : b;
              const Index cell = static_cast<Index>(rng.integer(0, target.size() - 1));
              std::vector<double> values(target.values().begin(), target.values().end());
              values[cell] += rng.uniform(0.5, 1.5);
              const DiscreteForm perturbed(c, target.degree(), std::move(values));
              const auto changed = side == 0 ? cup(c, perturbed, b) : cup(c, a, perturbed);
              const auto star = star_cells(c, CellRef{target.degree(), cell});
              for (Index i = 0; i < base.size(); ++i)
                if (!star.count(CellRef{base.degree(), i}))
                  dev.absorb(std::abs(changed[i] - base[i]), CellRef{base.degree(), i});
            }
          }
          return dev;
        });
  }
  if (name == "rotation_invariance") {
    return detail::run_trials(
        name, trials, seed, profile, all, kIdentityTolerance,
        [](const PolygonalComplex& c, TrialContext& ctx) {
          Deviation dev;
          Rng rng(ctx.form_seed(100));
          auto faces = c.faces();
          for (auto& face : faces)
            std::rotate(face.begin(), face.begin() + rng.integer(0, face.size() - 1), face.end());
          const auto rotated = build_complex(std::move(faces), c.vertex_count());
          for (const auto& [k, l] : detail::kDegreePairs) {
            const auto a = gen_form(ctx.form_seed(10 * k + l), c, k);
            const auto b = gen_form(ctx.form_seed(10 * k + l + 50), c, l);
            dev.absorb(detail::transplant(cup(c, a, b), rotated),
                       cup(rotated, detail::transplant(a, rotated), detail::transplant(b, rotated)));
          }
          return dev;
        });
  }
  throw Error(ErrorKind::UnknownProperty, std::string(name));
}

}  // namespace polycup

#endif  // POLYCUP_VERIFY_HPP
