#include "biext/modular.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace biext {

namespace {

constexpr double kPi = std::numbers::pi;

// Cholesky pivots of a real symmetric matrix; empty if not positive definite.
std::vector<double> cholesky_pivots(const std::vector<double>& a, int n) {
  std::vector<double> l(a);
  std::vector<double> pivots;
  pivots.reserve(n);
  for (int j = 0; j < n; ++j) {
    double d = l[static_cast<size_t>(j) * n + j];
    for (int k = 0; k < j; ++k) {
      const double ljk = l[static_cast<size_t>(j) * n + k];
      d -= ljk * ljk;
    }
    if (!(d > 0.0)) return {};
    pivots.push_back(d);
    const double root = std::sqrt(d);
    l[static_cast<size_t>(j) * n + j] = root;
    for (int i = j + 1; i < n; ++i) {
      double v = l[static_cast<size_t>(i) * n + j];
      for (int k = 0; k < j; ++k)
        v -= l[static_cast<size_t>(i) * n + k] * l[static_cast<size_t>(j) * n + k];
      l[static_cast<size_t>(i) * n + j] = v / root;
    }
  }
  return pivots;
}

}  // namespace

SiegelPoint SiegelPoint::make(int g, std::vector<Complex> row_major) {
  if (g < 1) throw std::invalid_argument("SiegelPoint: need g >= 1");
  if (row_major.size() != static_cast<size_t>(g) * g)
    throw std::invalid_argument("SiegelPoint: expected g*g entries");
  double scale = 1.0;
  for (const auto& z : row_major) scale = std::max(scale, std::abs(z));
  for (int r = 0; r < g; ++r)
    for (int c = r + 1; c < g; ++c) {
      const Complex d = row_major[static_cast<size_t>(r) * g + c] -
                        row_major[static_cast<size_t>(c) * g + r];
      if (std::abs(d) > 1e-12 * scale)
        throw std::invalid_argument("SiegelPoint: matrix not symmetric");
    }
  std::vector<double> y(static_cast<size_t>(g) * g);
  for (size_t i = 0; i < y.size(); ++i) y[i] = row_major[i].imag();
  if (cholesky_pivots(y, g).empty())
    throw std::domain_error("SiegelPoint: Im not positive definite");
  return SiegelPoint(g, std::move(row_major));
}

SiegelPoint SiegelPoint::diagonal(std::vector<Complex> taus) {
  const int g = static_cast<int>(taus.size());
  std::vector<Complex> m(static_cast<size_t>(g) * g, Complex(0.0, 0.0));
  for (int i = 0; i < g; ++i) m[static_cast<size_t>(i) * g + i] = taus[i];
  return make(g, std::move(m));
}

std::vector<double> SiegelPoint::im() const {
  std::vector<double> y(m_.size());
  for (size_t i = 0; i < m_.size(); ++i) y[i] = m_[i].imag();
  return y;
}

double SiegelPoint::det_im() const {
  const auto pivots = cholesky_pivots(im(), g_);
  double det = 1.0;
  for (double d : pivots) det *= d;
  return det;
}

ThetaCharacteristic::ThetaCharacteristic(std::array<double, 2> a_in,
                                         std::array<double, 2> b_in)
    : a(a_in), b(b_in) {
  for (double x : {a[0], a[1], b[0], b[1]})
    if (x != 0.0 && x != 0.5)
      throw std::invalid_argument("ThetaCharacteristic: entries must be 0 or 1/2");
}

bool ThetaCharacteristic::is_even() const {
  const long dot4 = std::lround(4.0 * (a[0] * b[0] + a[1] * b[1]));
  return dot4 % 2 == 0;
}

const std::array<ThetaCharacteristic, 10>& even_characteristics() {
  static const std::array<ThetaCharacteristic, 10> table = [] {
    std::vector<ThetaCharacteristic> found;
    for (int bits = 0; bits < 16; ++bits) {
      const ThetaCharacteristic ch({0.5 * ((bits >> 3) & 1), 0.5 * ((bits >> 2) & 1)},
                                   {0.5 * ((bits >> 1) & 1), 0.5 * (bits & 1)});
      if (ch.is_even()) found.push_back(ch);
    }
    if (found.size() != 10)
      throw std::logic_error("even_characteristics: enumeration broke");
    std::array<ThetaCharacteristic, 10> out{
        found[0], found[1], found[2], found[3], found[4],
        found[5], found[6], found[7], found[8], found[9]};
    return out;
  }();
  return table;
}

namespace {

void eigen_bounds_2x2(const std::vector<double>& y, double& lo, double& hi) {
  const double tr = y[0] + y[3];
  const double disc = std::sqrt(0.25 * (y[0] - y[3]) * (y[0] - y[3]) + y[1] * y[1]);
  lo = 0.5 * tr - disc;
  hi = 0.5 * tr + disc;
}

int theta_box_radius(double lambda_min, double lambda_max) {
  // Discarded terms decay like exp(-pi lambda_min |m|^2); the leading term is
  // at least exp(-pi lambda_max / 2).  Grow the box until the perimeter bound
  // drops below kThetaTailBound relative to that.
  const double target =
      std::log(kThetaTailBound) - 0.5 * kPi * lambda_max;
  for (int radius = 4; radius < 64; ++radius) {
    const double tail = -kPi * lambda_min * radius * radius +
                        2.0 * std::log(2.0 * radius + 3.0);
    if (tail < target) return radius;
  }
  return 64;
}

}  // namespace

Complex theta_constant(const ThetaCharacteristic& ch, const SiegelPoint& omega) {
  if (omega.g() != 2) throw std::invalid_argument("theta_constant: need g = 2");
  if (!ch.is_even())
    throw std::invalid_argument(
        "theta_constant: odd characteristic (value is identically zero)");
  const auto y = omega.im();
  double lo, hi;
  eigen_bounds_2x2(y, lo, hi);
  const int radius = theta_box_radius(lo, hi);

  const Complex ipi(0.0, kPi);
  const Complex o00 = omega.at(0, 0), o01 = omega.at(0, 1), o11 = omega.at(1, 1);
  Complex sum(0.0, 0.0);
  for (int n0 = -radius - 1; n0 <= radius; ++n0) {
    const double m0 = n0 + ch.a[0];
    for (int n1 = -radius - 1; n1 <= radius; ++n1) {
      const double m1 = n1 + ch.a[1];
      const Complex quad = m0 * m0 * o00 + 2.0 * m0 * m1 * o01 + m1 * m1 * o11;
      const double lin = m0 * ch.b[0] + m1 * ch.b[1];
      sum += std::exp(ipi * (quad + 2.0 * lin));
    }
  }
  return sum;
}

Complex chi10(const SiegelPoint& omega) {
  Complex prod(1.0, 0.0);
  for (const auto& ch : even_characteristics()) {
    const Complex t = theta_constant(ch, omega);
    prod *= t * t;
  }
  return prod;
}

double log_abs_chi10(const SiegelPoint& omega) {
  double s = 0.0;
  for (const auto& ch : even_characteristics()) {
    const double m = std::abs(theta_constant(ch, omega));
    if (m == 0.0) throw std::domain_error("log_abs_chi10: zero of the form");
    s += 2.0 * std::log(m);
  }
  return s;
}

namespace {

int delta_product_cutoff(double im_tau) {
  // |q|^n < kDeltaTailBound  with |q| = exp(-2 pi Im tau).
  const double n = -std::log(kDeltaTailBound) / (2.0 * kPi * im_tau);
  return std::clamp(static_cast<int>(std::ceil(n)), 1, 1000000);
}

}  // namespace

Complex dedekind_delta(Complex tau) {
  if (!(tau.imag() > 0.0))
    throw std::domain_error("dedekind_delta: need Im tau > 0");
  const Complex q = std::exp(Complex(0.0, 2.0 * kPi) * tau);
  const int cutoff = delta_product_cutoff(tau.imag());
  Complex prod(1.0, 0.0);
  Complex qn(1.0, 0.0);
  for (int n = 1; n <= cutoff; ++n) {
    qn *= q;
    const Complex f = 1.0 - qn;
    const Complex f2 = f * f;
    const Complex f4 = f2 * f2;
    const Complex f8 = f4 * f4;
    prod *= f8 * f8 * f8;  // (1 - q^n)^24
  }
  return std::pow(2.0 * kPi, 12.0) * q * prod;
}

double log_abs_dedekind_delta(Complex tau) {
  if (!(tau.imag() > 0.0))
    throw std::domain_error("dedekind_delta: need Im tau > 0");
  // log|q| = -2 pi Im tau; accumulate the product in log space so the value
  // stays finite far past the underflow point of Delta itself.
  double s = 12.0 * std::log(2.0 * kPi) - 2.0 * kPi * tau.imag();
  const Complex q = std::exp(Complex(0.0, 2.0 * kPi) * tau);
  const int cutoff = delta_product_cutoff(tau.imag());
  Complex qn(1.0, 0.0);
  for (int n = 1; n <= cutoff; ++n) {
    qn *= q;
    s += 24.0 * std::log(std::abs(1.0 - qn));
  }
  return s;
}

double modular_norm(const ModularValue& v) {
  if (v.weight <= 0) throw std::invalid_argument("modular_norm: weight must be > 0");
  const double det = v.point.det_im();
  if (!(det > 0.0)) throw std::domain_error("modular_norm: det Im not positive");
  return std::abs(v.value) * std::pow(det, v.weight.get_d() / 2.0);
}

double beta1(Complex tau) {
  const double log_norm = log_abs_dedekind_delta(tau) + 6.0 * std::log(tau.imag());
  return -log_norm;
}

double beta2(const SiegelPoint& omega) {
  if (omega.g() != 2) throw std::invalid_argument("beta2: need g = 2");
  return -2.0 * (log_abs_chi10(omega) + 5.0 * std::log(omega.det_im()));
}

}  // namespace biext
