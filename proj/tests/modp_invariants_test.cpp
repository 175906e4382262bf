#include "biext/modp_invariants.hpp"

#include <random>

#include "doctest.h"
#include "test_util.hpp"

using namespace biext;

namespace {

// Determinant over F_p by fraction-free elimination on a copy.
long modp_det(const ModPMatrix& m) {
  std::vector<std::vector<long>> a(m.dim, std::vector<long>(m.dim));
  for (int r = 0; r < m.dim; ++r)
    for (int c = 0; c < m.dim; ++c) a[r][c] = m.at(r, c);
  long det = 1;
  for (int c = 0; c < m.dim; ++c) {
    int pivot = -1;
    for (int r = c; r < m.dim; ++r)
      if (a[r][c] % m.p != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != c) {
      std::swap(a[pivot], a[c]);
      det = (m.p - det) % m.p;
    }
    det = (det * a[c][c]) % m.p;
    // inverse of the pivot via Fermat
    long inv = 1, x = a[c][c] % m.p;
    for (long e = m.p - 2; e > 0; e >>= 1) {
      if (e & 1) inv = (inv * x) % m.p;
      x = (x * x) % m.p;
    }
    for (int r = c + 1; r < m.dim; ++r) {
      const long f = (a[r][c] * inv) % m.p;
      if (f == 0) continue;
      for (int cc = c; cc < m.dim; ++cc)
        a[r][cc] = ((a[r][cc] - f * a[c][cc]) % m.p + m.p) % m.p;
    }
  }
  return ((det % m.p) + m.p) % m.p;
}

}  // namespace

TEST_CASE("wedge3 action mod p: identity, functoriality, unimodularity") {
  const Genus g3(3);
  const int n = 6;
  IntMatrix id(n, std::vector<mpz_class>(n));
  for (int i = 0; i < n; ++i) id[i][i] = 1;

  const ModPMatrix rho_id = wedge3_action_modp(id, g3, 2);
  CHECK(rho_id.entries == modp_identity(2, wedge3_dim(g3)).entries);

  std::mt19937 rng(9001);
  const auto gens = sp_generators(g3);
  std::uniform_int_distribution<size_t> pick(0, gens.size() - 1);
  for (int rep = 0; rep < 5; ++rep) {
    const IntMatrix& a = gens[pick(rng)];
    const IntMatrix& b = gens[pick(rng)];
    const ModPMatrix lhs = wedge3_action_modp(testutil::mat_mul(a, b), g3, 2);
    const ModPMatrix rhs =
        modp_mul(wedge3_action_modp(a, g3, 2), wedge3_action_modp(b, g3, 2));
    CHECK(lhs.entries == rhs.entries);
  }

  for (long p : {2L, 3L, 5L})
    for (const auto& m : sp_generators(Genus(2))) {
      const ModPMatrix rho = wedge3_action_modp(m, Genus(2), p);
      CHECK(modp_rank(rho) == wedge3_dim(Genus(2)));
      const long det = modp_det(rho);
      CHECK((det == 1 % p || det == (p - 1)));  // +-1 mod p
    }

  CHECK_THROWS_AS(wedge3_action_modp(id, g3, 6), std::invalid_argument);

  IntMatrix doubled = id;
  for (auto& row : doubled)
    for (auto& x : row) x *= 2;
  CHECK_THROWS_AS(wedge3_action_modp(doubled, g3, 2), std::invalid_argument);
}

TEST_CASE("no invariants mod p on the module or its dual") {
  CHECK(invariant_dim(Genus(2), 2, InvariantSide::invariants) == 0);
  CHECK(invariant_dim(Genus(3), 2, InvariantSide::coinvariant_dual) == 0);
  CHECK(invariant_dim(Genus(3), 3, InvariantSide::invariants) == 0);
  CHECK(invariant_dim(Genus(2), 5, InvariantSide::coinvariant_dual) == 0);
}

TEST_CASE("fixed spaces shrink as generators are added") {
  const Genus g(3);
  const auto gens = sp_generators(g);
  std::vector<IntMatrix> prefix;
  int prev = wedge3_dim(g);
  for (const auto& m : gens) {
    prefix.push_back(m);
    const int dim = fixed_space_dim(prefix, g, 2, InvariantSide::invariants);
    CHECK(dim <= prev);
    prev = dim;
  }
  CHECK(prev == 0);
}

TEST_CASE("dimension identity C(2g,3) = 2g(g-1) + 8 C(g,3)") {
  CHECK(dimension_identity(Genus(3)));  // 20 = 12 + 8
  CHECK(dimension_identity(Genus(4)));  // 56 = 24 + 32
  CHECK(dimension_identity(Genus(5)));  // 120 = 40 + 80
  for (int g = 6; g <= 8; ++g) CHECK(dimension_identity(Genus(g)));
  CHECK_THROWS_AS(dimension_identity(Genus(2)), std::invalid_argument);
}
