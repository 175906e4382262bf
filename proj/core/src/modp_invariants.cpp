#include "biext/modp_invariants.hpp"

#include <stdexcept>

namespace biext {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

ModPMatrix modp_identity(long p, int dim) {
  ModPMatrix m{p, dim, std::vector<long>(static_cast<size_t>(dim) * dim, 0)};
  for (int i = 0; i < dim; ++i) m.at(i, i) = 1 % p;
  return m;
}

ModPMatrix modp_mul(const ModPMatrix& a, const ModPMatrix& b) {
  if (a.p != b.p || a.dim != b.dim)
    throw std::invalid_argument("modp_mul: shape or modulus mismatch");
  ModPMatrix out{a.p, a.dim,
                 std::vector<long>(static_cast<size_t>(a.dim) * a.dim, 0)};
  for (int i = 0; i < a.dim; ++i)
    for (int k = 0; k < a.dim; ++k) {
      const long aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < a.dim; ++j)
        out.at(i, j) = (out.at(i, j) + aik * b.at(k, j)) % a.p;
    }
  return out;
}

namespace {

// Row echelon rank over F_p; destroys the rows.
int rank_of_rows(std::vector<std::vector<long>>& rows, long p, int cols) {
  int rank = 0;
  for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    int pivot = -1;
    for (size_t r = rank; r < rows.size(); ++r)
      if (rows[r][c] % p != 0) {
        pivot = static_cast<int>(r);
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    // Normalize pivot to 1 via the inverse mod p.
    long inv = 1;
    {
      const long a = ((rows[rank][c] % p) + p) % p;
      long t = 1, x = a;
      for (long e = p - 2; e > 0; e >>= 1) {  // Fermat, p prime
        if (e & 1) t = (t * x) % p;
        x = (x * x) % p;
      }
      inv = t;
    }
    for (int cc = c; cc < cols; ++cc)
      rows[rank][cc] = (((rows[rank][cc] % p) * inv) % p + p) % p;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<size_t>(rank)) continue;
      const long f = ((rows[r][c] % p) + p) % p;
      if (f == 0) continue;
      for (int cc = c; cc < cols; ++cc)
        rows[r][cc] = ((rows[r][cc] - f * rows[rank][cc]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

long reduce(const mpz_class& x, long p) {
  mpz_class r = x % p;
  long v = r.get_si();
  return (v % p + p) % p;
}

}  // namespace

int modp_rank(ModPMatrix m) {
  std::vector<std::vector<long>> rows(m.dim, std::vector<long>(m.dim));
  for (int r = 0; r < m.dim; ++r)
    for (int c = 0; c < m.dim; ++c) rows[r][c] = m.at(r, c);
  return rank_of_rows(rows, m.p, m.dim);
}

ModPMatrix wedge3_action_modp(const IntMatrix& m, Genus g, long p) {
  if (!is_prime(p)) throw std::invalid_argument("wedge3_action_modp: p not prime");
  const int n = 2 * g.value();
  if (m.size() != static_cast<size_t>(n))
    throw std::invalid_argument("wedge3_action_modp: matrix size mismatch");
  const int dim = wedge3_dim(g);
  ModPMatrix out{p, dim, std::vector<long>(static_cast<size_t>(dim) * dim, 0)};
  for (int c = 0; c < dim; ++c) {
    Wedge3 basis_vec(g);
    basis_vec.coeffs[c] = 1;
    const Wedge3 image = act(m, basis_vec);
    for (int r = 0; r < dim; ++r) out.at(r, c) = reduce(image.coeffs[r], p);
  }
  if (modp_rank(out) != dim)
    throw std::invalid_argument("wedge3_action_modp: matrix singular mod p");
  return out;
}

int fixed_space_dim(const std::vector<IntMatrix>& generators, Genus g, long p,
                    InvariantSide side) {
  if (!is_prime(p)) throw std::invalid_argument("fixed_space_dim: p not prime");
  if (g.value() < 2) throw std::invalid_argument("fixed_space_dim: need g >= 2");
  const int dim = wedge3_dim(g);
  // Stack rho(M) - I (or its transpose) over all generators; the fixed space
  // is the kernel, of dimension dim - rank.
  std::vector<std::vector<long>> rows;
  rows.reserve(generators.size() * static_cast<size_t>(dim));
  for (const auto& m : generators) {
    const ModPMatrix rho = wedge3_action_modp(m, g, p);
    for (int r = 0; r < dim; ++r) {
      std::vector<long> row(dim);
      for (int c = 0; c < dim; ++c) {
        long v = side == InvariantSide::invariants ? rho.at(r, c) : rho.at(c, r);
        if (r == c) v -= 1;
        row[c] = ((v % p) + p) % p;
      }
      rows.push_back(std::move(row));
    }
  }
  return dim - rank_of_rows(rows, p, dim);
}

int invariant_dim(Genus g, long p, InvariantSide side) {
  return fixed_space_dim(sp_generators(g), g, p, side);
}

bool dimension_identity(Genus g) {
  const long gv = g.value();
  if (gv < 3) throw std::invalid_argument("dimension_identity: need g >= 3");
  const long n = 2 * gv;
  const long lhs = n * (n - 1) * (n - 2) / 6;
  const long rhs = 2 * gv * (gv - 1) + 8 * (gv * (gv - 1) * (gv - 2) / 6);
  return lhs == rhs;
}

}  // namespace biext
