#ifndef BIEXT_MODULAR_HPP
#define BIEXT_MODULAR_HPP

#include <gmpxx.h>

#include <array>
#include <complex>
#include <vector>

// Numerical evaluation of the weight-12 cusp form Delta in genus 1, the ten
// even theta constants and chi_10 in genus 2, the invariant norm
// ||F|| = |F| (det Im Omega)^{k/2} of a weight-k form, and the functions
//   beta_1 = -log ||Delta||,   beta_2 = -2 log ||chi_10||.
//
// Series are evaluated in double precision with explicit tail bounds; all
// cutoffs are fixed so results are bit-stable for identical inputs.

namespace biext {

// Relative tail bounds for the series cutoffs.
inline constexpr double kDeltaTailBound = 1e-18;
inline constexpr double kThetaTailBound = 1e-16;

using Complex = std::complex<double>;

// Point of the Siegel upper half space: a complex symmetric g x g matrix
// with positive definite imaginary part.  Validated on construction
// (symmetry to 1e-12, positive definiteness by Cholesky pivots).
class SiegelPoint {
 public:
  static SiegelPoint make(int g, std::vector<Complex> row_major);
  static SiegelPoint diagonal(std::vector<Complex> taus);

  int g() const { return g_; }
  const Complex& at(int r, int c) const { return m_[static_cast<size_t>(r) * g_ + c]; }
  const std::vector<Complex>& entries() const { return m_; }

  std::vector<double> im() const;  // row-major g x g
  double det_im() const;           // > 0 by the class invariant

 private:
  SiegelPoint(int g, std::vector<Complex> m) : g_(g), m_(std::move(m)) {}
  int g_ = 1;
  std::vector<Complex> m_;
};

// Half-integer theta characteristic [a; b], entries in {0, 1/2}.
// Even means 4 a.b = 0 mod 2; genus 2 has exactly 10 even characteristics.
struct ThetaCharacteristic {
  ThetaCharacteristic(std::array<double, 2> a_in, std::array<double, 2> b_in);
  std::array<double, 2> a;
  std::array<double, 2> b;
  bool is_even() const;
};

// The 10 even genus-2 characteristics, enumerated in the binary order of
// (2a_1, 2a_2, 2b_1, 2b_2).
const std::array<ThetaCharacteristic, 10>& even_characteristics();

// theta[a;b](0; Omega) = sum_{n in Z^2} exp(pi i (n+a)^T Omega (n+a)
//                                           + 2 pi i (n+a).b),  genus 2.
// The summation box is chosen from the smallest eigenvalue of Im Omega so
// the discarded tail is below kThetaTailBound relative to the leading term.
// Odd characteristics are rejected (the value would be identically zero).
Complex theta_constant(const ThetaCharacteristic& ch, const SiegelPoint& omega);

// chi_10(Omega) = product over the 10 even characteristics of theta^2.
Complex chi10(const SiegelPoint& omega);

// log |chi_10|, accumulated in log space; errors on an exact zero.
double log_abs_chi10(const SiegelPoint& omega);

// Delta(tau) = (2 pi)^12 q prod_{n>=1} (1 - q^n)^24, q = exp(2 pi i tau).
Complex dedekind_delta(Complex tau);

// log |Delta(tau)|, stable for large Im tau where Delta itself underflows.
double log_abs_dedekind_delta(Complex tau);

// Value of a weight-k form at a point, carrying its own weight.
struct ModularValue {
  Complex value;
  mpq_class weight;  // > 0
  SiegelPoint point;
};

// ||F(Omega)|| = |F(Omega)| (det Im Omega)^{k/2}.
double modular_norm(const ModularValue& v);

// beta_1(tau) = -log(|Delta(tau)| (Im tau)^6).
double beta1(Complex tau);

// beta_2(Omega) = -2 log(|chi_10(Omega)| (det Im Omega)^5), genus 2.
double beta2(const SiegelPoint& omega);

}  // namespace biext

#endif  // BIEXT_MODULAR_HPP
