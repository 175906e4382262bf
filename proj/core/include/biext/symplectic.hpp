#ifndef BIEXT_SYMPLECTIC_HPP
#define BIEXT_SYMPLECTIC_HPP

#include <gmpxx.h>

#include <array>
#include <vector>

// Exact integer linear algebra of a rank-2g symplectic lattice H, its third
// exterior power L = Lambda^3 H, and the quotient V = L / (theta ^ H).
//
// Conventions, fixed here once and used by every module and file format:
//   * symplectic basis a_1..a_g, b_1..b_g, stored as coordinates 0..2g-1 in
//     the order (a_1, .., a_g, b_1, .., b_g);
//   * intersection pairing a_i.b_j = delta_ij, a_i.a_j = b_i.b_j = 0;
//   * theta = sum_j a_j ^ b_j, the element of Lambda^2 H dual to the pairing;
//   * Lambda^3 coefficients are indexed by the lexicographic order of index
//     triples i < j < k over the 2g basis vectors.
//
// All coefficients are arbitrary-precision integers: coefficient growth under
// repeated symplectic actions on Lambda^3 is unbounded.

namespace biext {

// Genus of the underlying surface; the lattice has rank 2g.
class Genus {
 public:
  explicit Genus(int g);
  int value() const { return g_; }
  friend bool operator==(const Genus&, const Genus&) = default;

 private:
  int g_;
};

// dim Lambda^3 H = C(2g, 3)
int wedge3_dim(Genus g);

// Lexicographic rank of the triple i < j < k among triples from {0..2g-1},
// and its inverse.
int triple_rank(Genus g, int i, int j, int k);
std::array<int, 3> triple_unrank(Genus g, int rank);

// Integer vector in H, coordinates ordered (a_1..a_g, b_1..b_g).
struct HVector {
  explicit HVector(Genus g);
  HVector(Genus g, std::vector<mpz_class> coords);

  static HVector basis(Genus g, int index);   // e_index, 0 <= index < 2g
  static HVector basis_a(Genus g, int i);     // a_{i+1}
  static HVector basis_b(Genus g, int i);     // b_{i+1}

  Genus genus;
  std::vector<mpz_class> coords;

  HVector& operator+=(const HVector& o);
  HVector& operator-=(const HVector& o);
  HVector& operator*=(const mpz_class& c);
  friend HVector operator+(HVector x, const HVector& y) { return x += y; }
  friend HVector operator-(HVector x, const HVector& y) { return x -= y; }
  friend HVector operator*(const mpz_class& c, HVector x) { return x *= c; }
  friend bool operator==(const HVector&, const HVector&) = default;
  bool is_zero() const;
};

// Integer vector in Lambda^3 H on the lexicographic triple basis.
struct Wedge3 {
  explicit Wedge3(Genus g);
  Wedge3(Genus g, std::vector<mpz_class> coeffs);

  Genus genus;
  std::vector<mpz_class> coeffs;

  Wedge3& operator+=(const Wedge3& o);
  Wedge3& operator-=(const Wedge3& o);
  Wedge3& operator*=(const mpz_class& c);
  friend Wedge3 operator+(Wedge3 x, const Wedge3& y) { return x += y; }
  friend Wedge3 operator-(Wedge3 x, const Wedge3& y) { return x -= y; }
  friend Wedge3 operator*(const mpz_class& c, Wedge3 x) { return x *= c; }
  friend bool operator==(const Wedge3&, const Wedge3&) = default;
  bool is_zero() const;
};

// Class of a Lambda^3 vector in V = Lambda^3 H / (theta ^ H), carried by an
// explicit lift.  Equality of classes is decidable (vclass_equal); everything
// computed from a VClass is independent of the chosen lift.
struct VClass {
  explicit VClass(Wedge3 lift);
  Genus genus;
  Wedge3 lift;
};

// Intersection number x.y (bilinear, skew; a_i.b_j = delta_ij).
mpz_class intersection(const HVector& x, const HVector& y);

// x ^ theta, expanded on the lexicographic Lambda^3 basis.  Requires g >= 2.
Wedge3 wedge_with_theta(const HVector& x);

// x ^ (a_1^b_1 + .. + a_pairs^b_pairs), the partial theta over the first
// `pairs` symplectic pairs.  Requires g >= 2 and 0 <= pairs <= g.
Wedge3 wedge_with_theta_block(const HVector& x, int pairs);

// Trilinear expansion of x ^ y ^ z.
Wedge3 wedge3_of(const HVector& x, const HVector& y, const HVector& z);

// c : Lambda^3 H -> H,  x^y^z |-> (x.y)z + (y.z)x + (z.x)y.
HVector contraction_c(const Wedge3& w);

// <x1^x2^x3, y1^y2^y3> = det(x_i.y_j), extended bilinearly.
mpz_class wedge3_pairing(const Wedge3& u, const Wedge3& v);

// j : V -> Lambda^3 H,  class(w) |-> (g-1)w - theta ^ c(w).
// Lift-independent; identically zero when g = 2.
Wedge3 j_map(const VClass& v);

// q(u, v) = <j(u), j(v)> / (g-1).  Integral skew form on V; the division is
// always exact, and an inexact division aborts loudly.  Requires g >= 3.
mpz_class q_form(const VClass& u, const VClass& v);

// Coset equality in V, decided by exact integer echelon reduction over the
// 2g generators theta^e_i of the sublattice theta^H.
bool vclass_equal(const VClass& u, const VClass& v);

// Dense integer 2g x 2g matrix, row-major; acts on coordinate columns.
using IntMatrix = std::vector<std::vector<mpz_class>>;

// Gram matrix J of the intersection pairing: x.y = x^T J y.
IntMatrix intersection_gram(Genus g);

// A finite generating set of Sp_g(Z): the rotation J (a_i -> b_i, b_i -> -a_i)
// together with the translations [[I, S], [0, I]] where S runs over the
// standard basis E_ii, E_ij + E_ji of symmetric g x g integer matrices.
// This is the classical Siegel generating set of the symplectic modular
// group; it has 1 + g(g+1)/2 elements.
std::vector<IntMatrix> sp_generators(Genus g);

bool is_symplectic(const IntMatrix& m, Genus g);

HVector act(const IntMatrix& m, const HVector& x);

// Induced action on Lambda^3 H: e_i^e_j^e_k |-> (M e_i)^(M e_j)^(M e_k).
Wedge3 act(const IntMatrix& m, const Wedge3& w);

}  // namespace biext

#endif  // BIEXT_SYMPLECTIC_HPP
