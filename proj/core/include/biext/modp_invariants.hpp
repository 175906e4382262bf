#ifndef BIEXT_MODP_INVARIANTS_HPP
#define BIEXT_MODP_INVARIANTS_HPP

#include <vector>

#include "biext/symplectic.hpp"

// Finite-field checks that Lambda^3 H mod p carries no nonzero vector fixed
// by all of Sp_g(Z), on either the module or its dual.  Everything here is
// exact Gaussian elimination over F_p; no floating point.

namespace biext {

bool is_prime(long p);

// Square matrix over Z/p, entries reduced to [0, p).
struct ModPMatrix {
  long p = 2;
  int dim = 0;
  std::vector<long> entries;  // row-major

  long at(int r, int c) const { return entries[static_cast<size_t>(r) * dim + c]; }
  long& at(int r, int c) { return entries[static_cast<size_t>(r) * dim + c]; }
};

ModPMatrix modp_identity(long p, int dim);
ModPMatrix modp_mul(const ModPMatrix& a, const ModPMatrix& b);
int modp_rank(ModPMatrix m);

// Induced action of a 2g x 2g integer matrix on Lambda^3 H, reduced mod p.
// Errors if p is not prime or the reduction is singular.
ModPMatrix wedge3_action_modp(const IntMatrix& m, Genus g, long p);

enum class InvariantSide {
  invariants,        // fixed vectors of Lambda^3 H tensor F_p
  coinvariant_dual,  // fixed vectors of Hom(Lambda^3 H, F_p)
};

// Dimension over F_p of the simultaneous fixed space of the given generators
// acting on Lambda^3 tensor F_p (or its dual): the kernel of the stacked
// matrices rho(M_i) - I.
int fixed_space_dim(const std::vector<IntMatrix>& generators, Genus g, long p,
                    InvariantSide side);

// Same, over the full sp_generators(g) set.  Invariance under a generating
// set is invariance under the group, so the expected value is 0.
int invariant_dim(Genus g, long p, InvariantSide side);

// C(2g,3) == 2g(g-1) + 8 C(g,3): the dimension count of the decomposition of
// Lambda^3 H mod 2 into two-dimensional blocks and their triple products.
bool dimension_identity(Genus g);

}  // namespace biext

#endif  // BIEXT_MODP_INVARIANTS_HPP
