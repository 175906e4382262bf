// Acceptance suite: one line per criterion, tolerances pinned in code.
// Exits with the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "biext/degeneration.hpp"
#include "biext/divisors.hpp"
#include "biext/heisenberg.hpp"
#include "biext/modp_invariants.hpp"
#include "biext/modular.hpp"

using namespace biext;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

HVector random_hvector(Genus g, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-9, 9);
  HVector x(g);
  for (auto& c : x.coords) c = d(rng);
  return x;
}

Wedge3 random_wedge3(Genus g, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-9, 9);
  Wedge3 w(g);
  for (auto& c : w.coeffs) c = d(rng);
  return w;
}

// 1. Central charge of every separating twist equals 4h(g-h), g = 3..8.
Outcome criterion_twist_charges() {
  for (int g = 3; g <= 8; ++g)
    for (int h = 1; h <= g - 1; ++h) {
      const mpz_class got = dehn_twist_central_charge({Genus(g), h});
      const mpz_class want = mpz_class(4) * h * (g - h);
      if (got != want)
        return {false, "g=" + std::to_string(g) + " h=" + std::to_string(h) +
                           ": got " + got.get_str() + ", want " + want.get_str()};
    }
  return {true, "all 3<=g<=8, 1<=h<=g-1, exact"};
}

// 2. c(x^theta) = (g-1)x on every basis vector and 100 random x, g = 2..8.
Outcome criterion_contraction_identity() {
  std::mt19937 rng(20250801);
  for (int g = 2; g <= 8; ++g) {
    const Genus genus(g);
    for (int i = 0; i < 2 * g; ++i) {
      const HVector e = HVector::basis(genus, i);
      if (!(contraction_c(wedge_with_theta(e)) == mpz_class(g - 1) * e))
        return {false, "basis vector failed at g=" + std::to_string(g)};
    }
    for (int rep = 0; rep < 100; ++rep) {
      const HVector x = random_hvector(genus, rng);
      if (!(contraction_c(wedge_with_theta(x)) == mpz_class(g - 1) * x))
        return {false, "random vector failed at g=" + std::to_string(g)};
    }
  }
  return {true, "basis + 100 random per genus, 2<=g<=8, exact"};
}

// 3. q is integral on 1000 random pairs per genus, and the theta-wedge
//    pairing collapses to (g-1)(x.y), g = 3..6.
Outcome criterion_integrality() {
  std::mt19937 rng(20250802);
  for (int g = 3; g <= 6; ++g) {
    const Genus genus(g);
    for (int rep = 0; rep < 1000; ++rep) {
      const VClass u(random_wedge3(genus, rng));
      const VClass v(random_wedge3(genus, rng));
      try {
        q_form(u, v);  // throws if the division by g-1 is not exact
      } catch (const std::logic_error& e) {
        return {false, "inexact division at g=" + std::to_string(g)};
      }
    }
    for (int rep = 0; rep < 100; ++rep) {
      const HVector x = random_hvector(genus, rng);
      const HVector y = random_hvector(genus, rng);
      if (wedge3_pairing(wedge_with_theta(x), wedge_with_theta(y)) !=
          mpz_class(g - 1) * intersection(x, y))
        return {false, "theta-wedge pairing failed at g=" + std::to_string(g)};
    }
  }
  return {true, "1000 q pairs + 100 pairing pairs per genus, 3<=g<=6"};
}

// 4. Commutator central coordinate is 2 q(u, v) on 200 random pairs, g = 3, 4.
Outcome criterion_commutators() {
  std::mt19937 rng(20250803);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int g : {3, 4}) {
    const Genus genus(g);
    for (int rep = 0; rep < 200; ++rep) {
      const GZElement a{VClass(random_wedge3(genus, rng)), mpz_class(d(rng))};
      const GZElement b{VClass(random_wedge3(genus, rng)), mpz_class(d(rng))};
      const GZElement com = gz_commutator(a, b);
      if (com.n != 2 * q_form(a.v, b.v) || !vclass_equal(com.v, VClass(Wedge3(genus))))
        return {false, "commutator mismatch at g=" + std::to_string(g)};
    }
  }
  return {true, "200 random pairs at g=3 and g=4, exact"};
}

// 5. No mod-p invariants for g in {2..5}, p in {2,3,5}, either side; the
//    dimension identity holds for g = 3..8.
Outcome criterion_modp() {
  for (int g = 2; g <= 5; ++g)
    for (long p : {2L, 3L, 5L})
      for (InvariantSide side :
           {InvariantSide::invariants, InvariantSide::coinvariant_dual}) {
        const int dim = invariant_dim(Genus(g), p, side);
        if (dim != 0)
          return {false, "fixed space dim " + std::to_string(dim) + " at g=" +
                             std::to_string(g) + " p=" + std::to_string(p)};
      }
  for (int g = 3; g <= 8; ++g)
    if (!dimension_identity(Genus(g)))
      return {false, "dimension identity failed at g=" + std::to_string(g)};
  return {true, "g in 2..5, p in {2,3,5}, both sides; identity for g=3..8"};
}

// 6. r0 = -g for g = 3..12 and the Chern delta_h coefficients are minus the
//    twist charges; exact rational arithmetic throughout.
Outcome criterion_divisors() {
  for (int g = 3; g <= 12; ++g) {
    if (solve_r0(Genus(g)) != mpq_class(-g))
      return {false, "r0 != -g at g=" + std::to_string(g)};
    const DivisorClass c = chern_biextension(Genus(g));
    if (c.coeff("lambda") != mpq_class(8 * g + 4) ||
        c.coeff("delta_0") != mpq_class(-g))
      return {false, "lambda/delta_0 coefficients wrong at g=" + std::to_string(g)};
    for (int h = 1; h <= g / 2; ++h) {
      const mpz_class charge = dehn_twist_central_charge({Genus(g), h});
      if (c.coeff("delta_" + std::to_string(h)) != mpq_class(-charge))
        return {false, "delta_" + std::to_string(h) +
                           " does not match the twist charge at g=" +
                           std::to_string(g)};
    }
  }
  return {true, "r0 and cross-module Chern coefficients, g=3..12, exact"};
}

// 7. beta_1 along t = e^{-x}, x log-spaced in [20, 2000], fits
//    (-1) log|t| + (-6) loglog(1/|t|) to 1e-6.
Outcome criterion_beta1_fit() {
  const auto samples = beta1_degeneration_samples(kBeta1SweepXMin, kBeta1SweepXMax,
                                                  kBeta1SweepCount);
  const AsymptoticFit fit = fit_asymptotics(samples);
  char buf[160];
  std::snprintf(buf, sizeof buf, "a=%.9f b=%.9f residual=%.2e", fit.coeff_log,
                fit.coeff_loglog, fit.residual);
  const bool ok =
      std::abs(fit.coeff_log + 1.0) < 1e-6 && std::abs(fit.coeff_loglog + 6.0) < 1e-6;
  return {ok, buf};
}

// 8. beta_2 along the one-node family fits (-2, -10) to 1e-2.
Outcome criterion_beta2_fay_fit() {
  const auto samples = sweep(default_fay_path(),
                             [](const SiegelPoint& om) { return beta2(om); });
  const AsymptoticFit fit = fit_asymptotics(samples);
  char buf[160];
  std::snprintf(buf, sizeof buf, "a=%.5f b=%.5f residual=%.2e", fit.coeff_log,
                fit.coeff_loglog, fit.residual);
  const bool ok =
      std::abs(fit.coeff_log + 2.0) < 1e-2 && std::abs(fit.coeff_loglog + 10.0) < 1e-2;
  return {ok, buf};
}

// 9. chi_10 vanishes to order 2 along the two-component family (slope within
//    1e-3), so beta_2 ~ -4 log|t| = -4h(g-h) log|t| there (h = 1, g = 2).
Outcome criterion_chi10_slope() {
  const auto samples = sweep(default_reducible_path(), [](const SiegelPoint& om) {
    return log_abs_chi10(om);
  });
  const double slope = vanishing_order_slope(samples);
  const auto beta_samples =
      sweep(default_reducible_path(), [](const SiegelPoint& om) { return beta2(om); });
  const double beta_log_coeff = fit_asymptotics(beta_samples).coeff_log;
  char buf[96];
  std::snprintf(buf, sizeof buf, "slope=%.6f, beta_2 log-coefficient=%.5f", slope,
                beta_log_coeff);
  return {std::abs(slope - 2.0) < 1e-3 && std::abs(beta_log_coeff + 4.0) < 1e-2,
          buf};
}

// 10. The Hodge norm log grows like (1/2) loglog(1/|t|) along the one-node
//     family (loglog coefficient within 1e-3).
Outcome criterion_hodge_loglog() {
  const auto samples = sweep(default_fay_path(), hodge_norm_log);
  const AsymptoticFit fit = fit_asymptotics(samples);
  char buf[96];
  std::snprintf(buf, sizeof buf, "b=%.6f", fit.coeff_loglog);
  return {std::abs(fit.coeff_loglog - 0.5) < 1e-3, buf};
}

// 11. The boundary coefficient vectors of beta_g and 3g delta_g are never
//     proportional, g = 3..8.
Outcome criterion_incommensurable() {
  for (int g = 3; g <= 8; ++g)
    if (!incommensurability_check(Genus(g)))
      return {false, "vectors proportional at g=" + std::to_string(g)};
  return {true, "exact rational comparison, g=3..8"};
}

}  // namespace

int main() {
  struct Entry {
    int number;
    const char* label;
    Outcome (*run)();
    double budget_seconds;  // 0 = no budget
  };
  const std::vector<Entry> entries{
      {1, "separating-twist central charge equals 4h(g-h)", criterion_twist_charges, 30.0},
      {2, "c(x^theta) = (g-1)x", criterion_contraction_identity, 0.0},
      {3, "q integrality and theta-wedge pairing", criterion_integrality, 0.0},
      {4, "commutator central coordinate = 2q(u,v)", criterion_commutators, 0.0},
      {5, "no mod-p invariants; dimension identity", criterion_modp, 60.0},
      {6, "r0 = -g and Chern cross-check", criterion_divisors, 0.0},
      {7, "beta_1 fit (-1, -6) within 1e-6", criterion_beta1_fit, 5.0},
      {8, "beta_2 one-node fit (-2, -10) within 1e-2", criterion_beta2_fay_fit, 120.0},
      {9, "chi_10 vanishing order 2 within 1e-3", criterion_chi10_slope, 0.0},
      {10, "Hodge norm loglog coefficient 1/2 within 1e-3", criterion_hodge_loglog, 0.0},
      {11, "beta and delta asymptotics incommensurable", criterion_incommensurable, 0.0},
  };

  int failures = 0;
  for (const auto& e : entries) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = e.run();
    } catch (const std::exception& ex) {
      outcome = {false, std::string("exception: ") + ex.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    const bool in_budget = e.budget_seconds <= 0.0 || seconds < e.budget_seconds;
    const bool pass = outcome.pass && in_budget;
    if (!pass) ++failures;
    std::printf("[%s] criterion %2d: %s | %s (%.2f s%s)\n", pass ? "PASS" : "FAIL",
                e.number, e.label, outcome.detail.c_str(), seconds,
                in_budget ? "" : ", over budget");
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures;
}
