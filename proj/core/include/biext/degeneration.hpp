#ifndef BIEXT_DEGENERATION_HPP
#define BIEXT_DEGENERATION_HPP

#include <gmpxx.h>

#include <complex>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "biext/modular.hpp"
#include "biext/symplectic.hpp"

// Degenerating period-matrix families, the Hodge-norm asymptotics along
// them, least-squares fitting of a log |t| + b log log(1/|t|) + c, and the
// exact reference asymptotics of 3g times Faltings' delta.

namespace biext {

// One sample of a family: assumes |t| < 1 and stores log|t| directly, since
// the interesting windows (log(1/|t|) up to 2000) put t itself far below the
// double-precision range.
struct Sample {
  double log_abs_t;  // log |t|, negative
  double value;
};

// Least-squares fit of samples against {log|t|, log log(1/|t|), 1}.
struct AsymptoticFit {
  double coeff_log;
  double coeff_loglog;
  double coeff_const;
  double residual;  // max absolute deviation over the samples
};

// A one-parameter degenerating family of period matrices.
//   irreducible_node: Omega(t) = [[Omega0, v^T], [v, log t / (2 pi i)]]
//   reducible_node:   Omega(t) = [[tau1, t], [t, tau2]]
struct DegenerationPath {
  enum class Kind { irreducible_node, reducible_node };

  Kind kind;
  std::optional<SiegelPoint> omega0;  // irreducible: (g-1) x (g-1) block
  std::vector<Complex> v;             // irreducible
  Complex tau1, tau2;                 // reducible
  std::vector<double> ts;             // strictly decreasing, in (0, 1)

  static DegenerationPath irreducible(SiegelPoint omega0, std::vector<Complex> v,
                                      std::vector<double> ts);
  static DegenerationPath reducible(Complex tau1, Complex tau2,
                                    std::vector<double> ts);

  SiegelPoint period_matrix(double t) const;
};

// [[Omega0, v^T], [v, log t / (2 pi i)]]; the corner has imaginary part
// log(1/|t|) / (2 pi).  Errors if Im of the result is not positive definite.
SiegelPoint fay_period_matrix(const SiegelPoint& omega0,
                              const std::vector<Complex>& v, Complex t);

// [[tau1, t], [t, tau2]].
SiegelPoint reducible_period_matrix(Complex tau1, Complex tau2, Complex t);

// (1/2) log det Im Omega, the log of the Hodge norm of w_1 ^ .. ^ w_g.
double hodge_norm_log(const SiegelPoint& omega);

// t_k = 10^{-k}, k = k_min..k_max.
std::vector<double> geometric_schedule(int k_min, int k_max);

// Evaluate f along the path, in schedule order.
std::vector<Sample> sweep(const DegenerationPath& path,
                          const std::function<double(const SiegelPoint&)>& f);

// beta_1 along the genus-1 node family tau(t) = log t / (2 pi i), sampled at
// x = log(1/t) log-spaced over [x_min, x_max].
std::vector<Sample> beta1_degeneration_samples(double x_min, double x_max,
                                               int count);

// Pinned default windows (recorded in output metadata by the CLI).
DegenerationPath default_fay_path();        // Omega0 = [1.2i], v = [0.2], k = 8..20
DegenerationPath default_reducible_path();  // tau1 = 1.1i, tau2 = 1.3i, k = 3..12
inline constexpr double kBeta1SweepXMin = 20.0;
inline constexpr double kBeta1SweepXMax = 2000.0;
inline constexpr int kBeta1SweepCount = 33;

// Least-squares solve for (a, b, c) in value ~ a log|t| + b loglog(1/|t|) + c
// over a centered and scaled design matrix.  Requires at least 8 samples
// spanning at least 4 decades of |t|.
AsymptoticFit fit_asymptotics(const std::vector<Sample>& samples);

// Slope of value (= log |F(t)|) against log |t|; the numerical order of
// vanishing of F along the path.
double vanishing_order_slope(const std::vector<Sample>& samples);

// Exact (log|t|, loglog(1/|t|)) coefficient pair of the asymptotics of
// 3g * delta_g near the named boundary component: h empty means the
// irreducible-node boundary, giving (-(4g-1), -18); a split of genus h gives
// (-12h(g-h), 0).
std::pair<mpq_class, mpq_class> faltings_reference(Genus g, std::optional<int> h);

// Asymptotic coefficient vectors across all boundary components delta_0,
// delta_1..delta_[g/2], flattened as (log, loglog) pairs.
std::vector<mpq_class> biextension_boundary_coefficients(Genus g);
std::vector<mpq_class> faltings_boundary_coefficients(Genus g);

// Exact test for linear dependence over R of two rational vectors
// (all 2x2 minors vanish).
bool rational_vectors_proportional(const std::vector<mpq_class>& x,
                                   const std::vector<mpq_class>& y);

// True iff no single real scalar relates the boundary coefficient vector of
// beta_g to that of 3g delta_g, i.e. the two differentials are linearly
// independent.  Requires g >= 3.
bool incommensurability_check(Genus g);

}  // namespace biext

#endif  // BIEXT_DEGENERATION_HPP
