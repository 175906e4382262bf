#include "biext/degeneration.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace biext {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

SiegelPoint fay_period_matrix(const SiegelPoint& omega0,
                              const std::vector<Complex>& v, Complex t) {
  const int g0 = omega0.g();
  if (v.size() != static_cast<size_t>(g0))
    throw std::invalid_argument("fay_period_matrix: v must have g-1 entries");
  const double at = std::abs(t);
  if (!(at > 0.0 && at < 1.0))
    throw std::invalid_argument("fay_period_matrix: need 0 < |t| < 1");
  const int g = g0 + 1;
  std::vector<Complex> m(static_cast<size_t>(g) * g);
  for (int r = 0; r < g0; ++r)
    for (int c = 0; c < g0; ++c)
      m[static_cast<size_t>(r) * g + c] = omega0.at(r, c);
  for (int r = 0; r < g0; ++r) {
    m[static_cast<size_t>(r) * g + g0] = v[r];
    m[static_cast<size_t>(g0) * g + r] = v[r];
  }
  // log t / (2 pi i); the imaginary part is log(1/|t|) / (2 pi).
  m[static_cast<size_t>(g0) * g + g0] = std::log(t) / Complex(0.0, 2.0 * kPi);
  return SiegelPoint::make(g, std::move(m));  // positive definiteness checked
}

SiegelPoint reducible_period_matrix(Complex tau1, Complex tau2, Complex t) {
  return SiegelPoint::make(2, {tau1, t, t, tau2});
}

double hodge_norm_log(const SiegelPoint& omega) {
  return 0.5 * std::log(omega.det_im());
}

DegenerationPath DegenerationPath::irreducible(SiegelPoint omega0,
                                               std::vector<Complex> v,
                                               std::vector<double> ts) {
  DegenerationPath p{Kind::irreducible_node, std::move(omega0), std::move(v),
                     Complex(0), Complex(0), std::move(ts)};
  if (p.v.size() != static_cast<size_t>(p.omega0->g()))
    throw std::invalid_argument("DegenerationPath: v must have g-1 entries");
  for (size_t i = 0; i < p.ts.size(); ++i) {
    if (!(p.ts[i] > 0.0 && p.ts[i] < 1.0))
      throw std::invalid_argument("DegenerationPath: t must lie in (0,1)");
    if (i > 0 && !(p.ts[i] < p.ts[i - 1]))
      throw std::invalid_argument("DegenerationPath: t must be strictly decreasing");
  }
  return p;
}

DegenerationPath DegenerationPath::reducible(Complex tau1, Complex tau2,
                                             std::vector<double> ts) {
  DegenerationPath p{Kind::reducible_node, std::nullopt, {}, tau1, tau2,
                     std::move(ts)};
  for (size_t i = 0; i < p.ts.size(); ++i) {
    if (!(p.ts[i] > 0.0 && p.ts[i] < 1.0))
      throw std::invalid_argument("DegenerationPath: t must lie in (0,1)");
    if (i > 0 && !(p.ts[i] < p.ts[i - 1]))
      throw std::invalid_argument("DegenerationPath: t must be strictly decreasing");
  }
  return p;
}

SiegelPoint DegenerationPath::period_matrix(double t) const {
  if (kind == Kind::irreducible_node) return fay_period_matrix(*omega0, v, t);
  return reducible_period_matrix(tau1, tau2, t);
}

std::vector<double> geometric_schedule(int k_min, int k_max) {
  if (k_min < 1 || k_max < k_min)
    throw std::invalid_argument("geometric_schedule: need 1 <= k_min <= k_max");
  std::vector<double> ts;
  ts.reserve(k_max - k_min + 1);
  for (int k = k_min; k <= k_max; ++k) ts.push_back(std::pow(10.0, -k));
  return ts;
}

std::vector<Sample> sweep(const DegenerationPath& path,
                          const std::function<double(const SiegelPoint&)>& f) {
  std::vector<Sample> out;
  out.reserve(path.ts.size());
  for (double t : path.ts)
    out.push_back({std::log(t), f(path.period_matrix(t))});
  return out;
}

std::vector<Sample> beta1_degeneration_samples(double x_min, double x_max,
                                               int count) {
  if (!(x_min > 0.0 && x_max > x_min) || count < 2)
    throw std::invalid_argument("beta1_degeneration_samples: bad window");
  // tau(t) = log t / (2 pi i) = i x / (2 pi) for t = e^{-x}.
  std::vector<Sample> out;
  out.reserve(count);
  const double ratio = std::log(x_max / x_min);
  for (int i = 0; i < count; ++i) {
    const double x = x_min * std::exp(ratio * i / (count - 1));
    out.push_back({-x, beta1(Complex(0.0, x / (2.0 * kPi)))});
  }
  return out;
}

DegenerationPath default_fay_path() {
  return DegenerationPath::irreducible(
      SiegelPoint::make(1, {Complex(0.0, 1.2)}), {Complex(0.2, 0.0)},
      geometric_schedule(8, 20));
}

DegenerationPath default_reducible_path() {
  return DegenerationPath::reducible(Complex(0.0, 1.1), Complex(0.0, 1.3),
                                     geometric_schedule(3, 12));
}

namespace {

// Ordinary least squares via the normal equations of a centered and scaled
// design; 3 columns, so the solve is a tiny Gaussian elimination.
struct LeastSquares3 {
  double a, b, c;  // coefficients on the original (uncentered) basis
};

LeastSquares3 solve_ls3(const std::vector<double>& f0, const std::vector<double>& f1,
                        const std::vector<double>& y) {
  const size_t n = y.size();
  double m0 = 0, m1 = 0;
  for (size_t i = 0; i < n; ++i) {
    m0 += f0[i];
    m1 += f1[i];
  }
  m0 /= n;
  m1 /= n;
  double s0 = 0, s1 = 0;
  for (size_t i = 0; i < n; ++i) {
    s0 += (f0[i] - m0) * (f0[i] - m0);
    s1 += (f1[i] - m1) * (f1[i] - m1);
  }
  s0 = std::sqrt(s0 / n);
  s1 = std::sqrt(s1 / n);
  if (!(s0 > 0.0) || !(s1 > 0.0))
    throw std::invalid_argument("fit_asymptotics: rank-deficient design");

  // Gram matrix of the columns {(f0-m0)/s0, (f1-m1)/s1, 1}.
  double g00 = 0, g01 = 0, g11 = 0, r0 = 0, r1 = 0, r2 = 0;
  for (size_t i = 0; i < n; ++i) {
    const double u = (f0[i] - m0) / s0;
    const double v = (f1[i] - m1) / s1;
    g00 += u * u;
    g01 += u * v;
    g11 += v * v;
    r0 += u * y[i];
    r1 += v * y[i];
    r2 += y[i];
  }
  // Centered columns are orthogonal to the constant column, so the system
  // splits into a 2x2 block and the mean.
  const double det = g00 * g11 - g01 * g01;
  if (!(std::abs(det) > 1e-9 * g00 * g11))
    throw std::invalid_argument("fit_asymptotics: rank-deficient design");
  const double ua = (g11 * r0 - g01 * r1) / det;
  const double ub = (g00 * r1 - g01 * r0) / det;
  const double uc = r2 / n;

  LeastSquares3 out;
  out.a = ua / s0;
  out.b = ub / s1;
  out.c = uc - ua * m0 / s0 - ub * m1 / s1;
  return out;
}

}  // namespace

AsymptoticFit fit_asymptotics(const std::vector<Sample>& samples) {
  const size_t n = samples.size();
  if (n < 8) throw std::invalid_argument("fit_asymptotics: need >= 8 samples");
  std::vector<double> f0(n), f1(n), y(n);
  double lo = samples[0].log_abs_t, hi = samples[0].log_abs_t;
  for (size_t i = 0; i < n; ++i) {
    const double lt = samples[i].log_abs_t;
    if (!(lt < 0.0))
      throw std::invalid_argument("fit_asymptotics: need |t| < 1");
    f0[i] = lt;
    f1[i] = std::log(-lt);
    y[i] = samples[i].value;
    lo = std::min(lo, lt);
    hi = std::max(hi, lt);
  }
  if ((hi - lo) / std::log(10.0) < 4.0)
    throw std::invalid_argument("fit_asymptotics: samples span < 4 decades");

  const LeastSquares3 ls = solve_ls3(f0, f1, y);
  double residual = 0.0;
  for (size_t i = 0; i < n; ++i)
    residual = std::max(residual,
                        std::abs(ls.a * f0[i] + ls.b * f1[i] + ls.c - y[i]));
  return {ls.a, ls.b, ls.c, residual};
}

double vanishing_order_slope(const std::vector<Sample>& samples) {
  const size_t n = samples.size();
  if (n < 2) throw std::invalid_argument("vanishing_order_slope: need >= 2 samples");
  double mx = 0, my = 0;
  for (const auto& s : samples) {
    mx += s.log_abs_t;
    my += s.value;
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0;
  for (const auto& s : samples) {
    sxx += (s.log_abs_t - mx) * (s.log_abs_t - mx);
    sxy += (s.log_abs_t - mx) * (s.value - my);
  }
  if (!(sxx > 0.0))
    throw std::invalid_argument("vanishing_order_slope: degenerate samples");
  return sxy / sxx;
}

std::pair<mpq_class, mpq_class> faltings_reference(Genus g, std::optional<int> h) {
  const long gv = g.value();
  if (gv < 2) throw std::invalid_argument("faltings_reference: need g >= 2");
  if (!h) return {mpq_class(-(4 * gv - 1)), mpq_class(-18)};
  if (*h < 1 || *h > gv - 1)
    throw std::invalid_argument("faltings_reference: need 1 <= h <= g-1");
  return {mpq_class(-12 * *h * (gv - *h)), mpq_class(0)};
}

std::vector<mpq_class> biextension_boundary_coefficients(Genus g) {
  const long gv = g.value();
  if (gv < 3)
    throw std::invalid_argument("biextension_boundary_coefficients: need g >= 3");
  std::vector<mpq_class> out;
  out.emplace_back(-gv);
  out.emplace_back(-(4 * gv + 2));
  for (long h = 1; h <= gv / 2; ++h) {
    out.emplace_back(-4 * h * (gv - h));
    out.emplace_back(0);
  }
  return out;
}

std::vector<mpq_class> faltings_boundary_coefficients(Genus g) {
  const long gv = g.value();
  if (gv < 3)
    throw std::invalid_argument("faltings_boundary_coefficients: need g >= 3");
  std::vector<mpq_class> out;
  out.emplace_back(-(4 * gv - 1));
  out.emplace_back(-18);
  for (long h = 1; h <= gv / 2; ++h) {
    out.emplace_back(-12 * h * (gv - h));
    out.emplace_back(0);
  }
  return out;
}

bool rational_vectors_proportional(const std::vector<mpq_class>& x,
                                   const std::vector<mpq_class>& y) {
  if (x.size() != y.size())
    throw std::invalid_argument("rational_vectors_proportional: length mismatch");
  for (size_t i = 0; i < x.size(); ++i)
    for (size_t j = i + 1; j < x.size(); ++j)
      if (x[i] * y[j] != x[j] * y[i]) return false;
  return true;
}

bool incommensurability_check(Genus g) {
  if (g.value() < 3)
    throw std::invalid_argument("incommensurability_check: need g >= 3");
  return !rational_vectors_proportional(biextension_boundary_coefficients(g),
                                        faltings_boundary_coefficients(g));
}

}  // namespace biext
