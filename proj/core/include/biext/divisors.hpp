#ifndef BIEXT_DIVISORS_HPP
#define BIEXT_DIVISORS_HPP

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "biext/symplectic.hpp"

// Exact rational divisor-class bookkeeping on the compactified moduli space
// and on the closure of the hyperelliptic locus.
//
// Bases (labels validated against the declared genus range):
//   compactified:   lambda, delta_0 .. delta_[g/2]
//   hyperelliptic:  lambda, xi_0 .. xi_[(g-1)/2], delta_1 .. delta_[g/2]

namespace biext {

class DivisorClass {
 public:
  explicit DivisorClass(std::vector<std::string> basis);

  const std::vector<std::string>& basis() const { return basis_; }
  const mpq_class& coeff(const std::string& label) const;
  void set_coeff(const std::string& label, mpq_class value);

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

 private:
  std::vector<std::string> basis_;
  std::map<std::string, mpq_class> coeffs_;
};

std::vector<std::string> compactified_basis(Genus g);
std::vector<std::string> hyperelliptic_basis(Genus g);
std::vector<std::string> interior_basis();  // just lambda

// First Chern class of the extended metrized bundle:
//   (8g+4) lambda - g delta_0 - 4 sum_h h(g-h) delta_h,  g >= 3.
// The delta_h coefficients agree with -dehn_twist_central_charge(g, h).
DivisorClass chern_biextension(Genus g);

// The relation (8g+4) lambda = g xi_0 + sum_j (j+1)(g-j) xi_j
//                              + 4 sum_h h(g-h) delta_h
// in the hyperelliptic basis (Cornalba-Harris), g >= 2.
struct DivisorRelation {
  DivisorClass lhs;
  DivisorClass rhs;
};
DivisorRelation cornalba_harris_relation(Genus g);

// Matches the Cornalba-Harris relation against the restriction ansatz
//   (8g+4) lambda = -r0 xi_0 + 4 sum_h h(g-h) delta_h + sum_{j>=1} c_j xi_j
// with r0 and the c_j unknown, and solves by coefficient comparison.
// The delta_h coefficients must cancel identically; a mismatch is a bug.
// The solved c_j are a byproduct, not independently verified.
struct R0Solution {
  mpq_class r0;                        // always -g
  std::map<std::string, mpq_class> c;  // keyed xi_1, xi_2, ..
};
R0Solution solve_r0_full(Genus g);
mpq_class solve_r0(Genus g);

// (8g+4) lambda on the interior, g >= 1.
DivisorClass morita_class(Genus g);

}  // namespace biext

#endif  // BIEXT_DIVISORS_HPP
