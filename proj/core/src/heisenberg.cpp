#include "biext/heisenberg.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace biext {

namespace {

void check_same_genus(Genus a, Genus b) {
  if (!(a == b)) throw std::invalid_argument("genus mismatch");
}

}  // namespace

GZElement gz_identity(Genus g) { return {VClass(Wedge3(g)), 0}; }

GZElement gz_mul(const GZElement& a, const GZElement& b) {
  check_same_genus(a.v.genus, b.v.genus);
  return {VClass(a.v.lift + b.v.lift), b.n + a.n + q_form(a.v, b.v)};
}

GZElement gz_inverse(const GZElement& a) {
  Wedge3 neg = a.v.lift;
  neg *= mpz_class(-1);
  return {VClass(std::move(neg)), -a.n};
}

GZElement gz_commutator(const GZElement& a, const GZElement& b) {
  return gz_mul(gz_mul(a, b), gz_mul(gz_inverse(a), gz_inverse(b)));
}

DehnTwistTrace dehn_twist_trace(const SeparatingCurveData& c) {
  const int g = c.genus.value();
  if (g < 3) throw std::invalid_argument("dehn_twist: need g >= 3");
  if (c.h < 1 || c.h > g - 1)
    throw std::invalid_argument("dehn_twist: need 1 <= h <= g-1");
  // The 8/(2h-2) scaling is singular on a genus-1 side; a separating curve
  // is symmetric in its two sides, so run h = 1 on the genus g-1 side.
  const int side = (c.h == 1) ? g - 1 : c.h;

  DehnTwistTrace out;
  out.side = side;
  out.pairing_sum = 0;
  for (int j = 0; j < side; ++j) {
    const Wedge3 aw = wedge_with_theta_block(HVector::basis_a(c.genus, j), side);
    const Wedge3 bw = wedge_with_theta_block(HVector::basis_b(c.genus, j), side);
    out.pairing_sum += q_form(VClass(aw), VClass(bw));
  }
  const mpz_class num = 8 * out.pairing_sum;
  const mpz_class den = 2 * side - 2;
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
    throw std::logic_error("dehn_twist: 8 * sum not divisible by 2h-2");
  mpz_divexact(out.charge.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

mpz_class dehn_twist_central_charge(const SeparatingCurveData& c) {
  return dehn_twist_trace(c).charge;
}

bool j_split_identity_check(Genus g, int h, const HVector& x) {
  const int gv = g.value();
  if (h < 1 || h > gv - 1)
    throw std::invalid_argument("j_split_identity_check: need 1 <= h <= g-1");
  check_same_genus(g, x.genus);
  for (int i = h; i < gv; ++i)
    if (x.coords[i] != 0 || x.coords[gv + i] != 0)
      throw std::invalid_argument(
          "j_split_identity_check: x must be supported on the first h pairs");
  const Wedge3 xw1 = wedge_with_theta_block(x, h);
  const Wedge3 xw2 = wedge_with_theta(x) - xw1;
  const Wedge3 lhs = j_map(VClass(xw1));
  const Wedge3 rhs = mpz_class(gv - h) * xw1 - mpz_class(h - 1) * xw2;
  return lhs == rhs;
}

double fiber_log_norm(const FiberPoint& p) {
  if (p.z.size() != p.u.size())
    throw std::invalid_argument("fiber_log_norm: z and u length mismatch");
  // 2 pi i (z conj(u) - u conj(z)) = 4 pi Im(conj(z) u), summed over j.
  double s = 0.0;
  for (size_t j = 0; j < p.z.size(); ++j)
    s += std::imag(std::conj(p.z[j]) * p.u[j]);
  return 4.0 * std::numbers::pi * s;
}

double curvature_check(const FiberPoint& p, double step) {
  if (step <= 0.0) throw std::invalid_argument("curvature_check: step must be > 0");
  const size_t n = p.z.size();
  const size_t m = 4 * n;  // real coordinates (Re z_j, Im z_j, Re u_j, Im u_j)

  auto eval = [&](const std::vector<double>& x) {
    FiberPoint q;
    q.z.resize(n);
    q.u.resize(n);
    for (size_t j = 0; j < n; ++j) {
      q.z[j] = {x[4 * j], x[4 * j + 1]};
      q.u[j] = {x[4 * j + 2], x[4 * j + 3]};
    }
    return fiber_log_norm(q);
  };

  std::vector<double> base(m);
  for (size_t j = 0; j < n; ++j) {
    base[4 * j] = p.z[j].real();
    base[4 * j + 1] = p.z[j].imag();
    base[4 * j + 2] = p.u[j].real();
    base[4 * j + 3] = p.u[j].imag();
  }

  // The log-norm is bilinear in (z, u): its Hessian has 4 pi at
  // (Re z_j, Im u_j), -4 pi at (Im z_j, Re u_j), zero elsewhere.
  auto expected = [&](size_t i, size_t j) {
    if (i / 4 != j / 4) return 0.0;
    const size_t a = i % 4, b = j % 4;
    if ((a == 0 && b == 3) || (a == 3 && b == 0)) return 4.0 * std::numbers::pi;
    if ((a == 1 && b == 2) || (a == 2 && b == 1)) return -4.0 * std::numbers::pi;
    return 0.0;
  };

  const double f0 = eval(base);
  double max_dev = 0.0;
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = i; j < m; ++j) {
      double second;
      std::vector<double> x = base;
      if (i == j) {
        x[i] = base[i] + step;
        const double fp = eval(x);
        x[i] = base[i] - step;
        const double fm = eval(x);
        second = (fp - 2.0 * f0 + fm) / (step * step);
      } else {
        x[i] = base[i] + step;
        x[j] = base[j] + step;
        const double fpp = eval(x);
        x[j] = base[j] - step;
        const double fpm = eval(x);
        x[i] = base[i] - step;
        const double fmm = eval(x);
        x[j] = base[j] + step;
        const double fmp = eval(x);
        second = (fpp - fpm - fmp + fmm) / (4.0 * step * step);
      }
      max_dev = std::max(max_dev, std::abs(second - expected(i, j)));
    }
  }
  return max_dev;
}

}  // namespace biext
