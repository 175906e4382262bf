#ifndef BIEXT_HEISENBERG_HPP
#define BIEXT_HEISENBERG_HPP

#include <complex>
#include <vector>

#include "biext/symplectic.hpp"

// The central extension G_Z of V_Z by Z with multiplication twisted by the
// form q, its commutator calculus, the central charge of a separating Dehn
// twist, and the log-norm model of a fiber of the metrized bundle.

namespace biext {

// Element (v, n) of G_Z = V_Z x Z with
//   (u, n) * (v, m) = (u + v, m + n + q(u, v)).
struct GZElement {
  VClass v;
  mpz_class n;
};

GZElement gz_identity(Genus g);
GZElement gz_mul(const GZElement& a, const GZElement& b);
GZElement gz_inverse(const GZElement& a);

// a b a^-1 b^-1; always central, with central coordinate 2 q(u, v).
GZElement gz_commutator(const GZElement& a, const GZElement& b);

// A simple closed curve separating a genus-g surface into pieces of genus h
// and g-h; symmetric under h <-> g-h.
struct SeparatingCurveData {
  Genus genus;
  int h;  // 1 <= h <= g-1
};

// Intermediate record of the central-charge computation.
struct DehnTwistTrace {
  int side;               // genus of the subsurface the pipeline ran on
  mpz_class pairing_sum;  // sum_j q(a_j ^ w', b_j ^ w') over that side
  mpz_class charge;       // 8 * pairing_sum / (2*side - 2)
};

// Central charge of the separating Dehn twist: the image of the twist in the
// center Z of G_Z.  Computed as 8/(2h-2) * sum_{j<=h} q(a_j^w', b_j^w') with
// w' = a_1^b_1 + .. + a_h^b_h.  The scaling is singular at h = 1, so that
// case runs on the complementary subsurface of genus g-1 >= 2 (a separating
// curve does not distinguish its two sides).  Always equals 4h(g-h).
DehnTwistTrace dehn_twist_trace(const SeparatingCurveData& c);
mpz_class dehn_twist_central_charge(const SeparatingCurveData& c);

// Checks j(x ^ w') == (g-h) x^w' - (h-1) x^w'' as Lambda^3 vectors, for x
// supported on the first h symplectic pairs (w'' = theta - w').
bool j_split_identity_check(Genus g, int h, const HVector& x);

// Point of a bundle fiber in the holomorphic frame coordinates (z, u).
struct FiberPoint {
  std::vector<std::complex<double>> z;
  std::vector<std::complex<double>> u;
};

// log |s|^2 = 2 pi i * sum_j (z_j conj(u_j) - u_j conj(z_j)); real valued and
// antisymmetric under swapping z and u.
double fiber_log_norm(const FiberPoint& p);

// Central-difference check that the mixed second derivatives of
// fiber_log_norm form the constant coefficient matrix of the curvature form
// sum_j (dz_j ^ d(conj u_j) - du_j ^ d(conj z_j)).  The log-norm is a
// bilinear form, so the deviation is at rounding level for any step.
// Returns the max absolute deviation.
double curvature_check(const FiberPoint& p, double step);

}  // namespace biext

#endif  // BIEXT_HEISENBERG_HPP
