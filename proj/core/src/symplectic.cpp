#include "biext/symplectic.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace biext {

namespace {

// Pairing of basis vectors: e_i.e_{i+g} = 1, e_{i+g}.e_i = -1, else 0.
int basis_pairing(int i, int j, int g) {
  if (j == i + g) return 1;
  if (i == j + g) return -1;
  return 0;
}

// Sorts (t[0], t[1], t[2]) ascending; returns the sign of the permutation,
// or 0 if two indices coincide.
int sort_triple(std::array<int, 3>& t) {
  int sign = 1;
  if (t[0] > t[1]) { std::swap(t[0], t[1]); sign = -sign; }
  if (t[1] > t[2]) { std::swap(t[1], t[2]); sign = -sign; }
  if (t[0] > t[1]) { std::swap(t[0], t[1]); sign = -sign; }
  if (t[0] == t[1] || t[1] == t[2]) return 0;
  return sign;
}

void check_same_genus(Genus a, Genus b) {
  if (!(a == b)) throw std::invalid_argument("genus mismatch");
}

long binom3(long n) { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; }

}  // namespace

Genus::Genus(int g) : g_(g) {
  if (g < 1) throw std::invalid_argument("genus must be >= 1");
}

int wedge3_dim(Genus g) { return static_cast<int>(binom3(2L * g.value())); }

int triple_rank(Genus g, int i, int j, int k) {
  const int n = 2 * g.value();
  if (!(0 <= i && i < j && j < k && k < n))
    throw std::invalid_argument("triple_rank: need 0 <= i < j < k < 2g");
  long r = binom3(n) - binom3(n - i);      // triples starting below i
  r += static_cast<long>(n - 1 - i) * (n - 2 - i) / 2 -
       static_cast<long>(n - 1 - j) * (n - j) / 2;  // (i, b, *) for i < b < j
  r += k - j - 1;
  return static_cast<int>(r);
}

std::array<int, 3> triple_unrank(Genus g, int rank) {
  const int n = 2 * g.value();
  if (rank < 0 || rank >= wedge3_dim(g))
    throw std::invalid_argument("triple_unrank: rank out of range");
  int i = 0;
  long r = rank;
  while (r >= static_cast<long>(n - 1 - i) * (n - 2 - i) / 2) {
    r -= static_cast<long>(n - 1 - i) * (n - 2 - i) / 2;
    ++i;
  }
  int j = i + 1;
  while (r >= n - 1 - j) {
    r -= n - 1 - j;
    ++j;
  }
  int k = j + 1 + static_cast<int>(r);
  return {i, j, k};
}

HVector::HVector(Genus g) : genus(g), coords(2 * g.value()) {}

HVector::HVector(Genus g, std::vector<mpz_class> c) : genus(g), coords(std::move(c)) {
  if (coords.size() != static_cast<size_t>(2 * g.value()))
    throw std::invalid_argument("HVector: expected 2g coordinates");
}

HVector HVector::basis(Genus g, int index) {
  if (index < 0 || index >= 2 * g.value())
    throw std::invalid_argument("HVector::basis: index out of range");
  HVector x(g);
  x.coords[index] = 1;
  return x;
}

HVector HVector::basis_a(Genus g, int i) { return basis(g, i); }
HVector HVector::basis_b(Genus g, int i) { return basis(g, g.value() + i); }

HVector& HVector::operator+=(const HVector& o) {
  check_same_genus(genus, o.genus);
  for (size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
  return *this;
}

HVector& HVector::operator-=(const HVector& o) {
  check_same_genus(genus, o.genus);
  for (size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
  return *this;
}

HVector& HVector::operator*=(const mpz_class& c) {
  for (auto& x : coords) x *= c;
  return *this;
}

bool HVector::is_zero() const {
  return std::all_of(coords.begin(), coords.end(),
                     [](const mpz_class& x) { return x == 0; });
}

Wedge3::Wedge3(Genus g) : genus(g), coeffs(wedge3_dim(g)) {
  if (g.value() < 2) throw std::invalid_argument("Wedge3: need g >= 2");
}

Wedge3::Wedge3(Genus g, std::vector<mpz_class> c) : genus(g), coeffs(std::move(c)) {
  if (g.value() < 2) throw std::invalid_argument("Wedge3: need g >= 2");
  if (coeffs.size() != static_cast<size_t>(wedge3_dim(g)))
    throw std::invalid_argument("Wedge3: expected C(2g,3) coefficients");
}

Wedge3& Wedge3::operator+=(const Wedge3& o) {
  check_same_genus(genus, o.genus);
  for (size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
  return *this;
}

Wedge3& Wedge3::operator-=(const Wedge3& o) {
  check_same_genus(genus, o.genus);
  for (size_t i = 0; i < coeffs.size(); ++i) coeffs[i] -= o.coeffs[i];
  return *this;
}

Wedge3& Wedge3::operator*=(const mpz_class& c) {
  for (auto& x : coeffs) x *= c;
  return *this;
}

bool Wedge3::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(),
                     [](const mpz_class& x) { return x == 0; });
}

VClass::VClass(Wedge3 l) : genus(l.genus), lift(std::move(l)) {}

mpz_class intersection(const HVector& x, const HVector& y) {
  check_same_genus(x.genus, y.genus);
  const int g = x.genus.value();
  mpz_class s = 0;
  for (int i = 0; i < g; ++i) {
    s += x.coords[i] * y.coords[g + i];
    s -= x.coords[g + i] * y.coords[i];
  }
  return s;
}

namespace {

// out += c * e_i ^ e_j ^ e_k (indices in any order; no-op on repeats).
void add_wedge_term(Wedge3& out, const mpz_class& c, int i, int j, int k) {
  std::array<int, 3> t{i, j, k};
  const int sign = sort_triple(t);
  if (sign == 0) return;
  mpz_class& slot = out.coeffs[triple_rank(out.genus, t[0], t[1], t[2])];
  if (sign > 0)
    slot += c;
  else
    slot -= c;
}

}  // namespace

Wedge3 wedge_with_theta_block(const HVector& x, int pairs) {
  const int g = x.genus.value();
  if (g < 2) throw std::invalid_argument("wedge_with_theta: need g >= 2");
  if (pairs < 0 || pairs > g)
    throw std::invalid_argument("wedge_with_theta_block: bad pair count");
  Wedge3 out(x.genus);
  for (int i = 0; i < 2 * g; ++i) {
    if (x.coords[i] == 0) continue;
    for (int j = 0; j < pairs; ++j) add_wedge_term(out, x.coords[i], i, j, g + j);
  }
  return out;
}

Wedge3 wedge_with_theta(const HVector& x) {
  return wedge_with_theta_block(x, x.genus.value());
}

Wedge3 wedge3_of(const HVector& x, const HVector& y, const HVector& z) {
  check_same_genus(x.genus, y.genus);
  check_same_genus(x.genus, z.genus);
  const int n = 2 * x.genus.value();
  Wedge3 out(x.genus);
  mpz_class cij;
  for (int i = 0; i < n; ++i) {
    if (x.coords[i] == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (j == i || y.coords[j] == 0) continue;
      cij = x.coords[i] * y.coords[j];
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j || z.coords[k] == 0) continue;
        add_wedge_term(out, cij * z.coords[k], i, j, k);
      }
    }
  }
  return out;
}

HVector contraction_c(const Wedge3& w) {
  const int g = w.genus.value();
  HVector out(w.genus);
  for (size_t r = 0; r < w.coeffs.size(); ++r) {
    if (w.coeffs[r] == 0) continue;
    const auto [i, j, k] = triple_unrank(w.genus, static_cast<int>(r));
    // c(e_i ^ e_j ^ e_k) = (e_i.e_j) e_k + (e_j.e_k) e_i + (e_k.e_i) e_j
    if (int p = basis_pairing(i, j, g)) out.coords[k] += p * w.coeffs[r];
    if (int p = basis_pairing(j, k, g)) out.coords[i] += p * w.coeffs[r];
    if (int p = basis_pairing(k, i, g)) out.coords[j] += p * w.coeffs[r];
  }
  return out;
}

mpz_class wedge3_pairing(const Wedge3& u, const Wedge3& v) {
  check_same_genus(u.genus, v.genus);
  const int g = u.genus.value();
  // <e_T, e_S> = det of basis pairings; nonzero only when S is the set of
  // symplectic partners of T, in which case the det collapses to a signed
  // product.
  mpz_class s = 0;
  for (size_t r = 0; r < u.coeffs.size(); ++r) {
    if (u.coeffs[r] == 0) continue;
    const auto [i, j, k] = triple_unrank(u.genus, static_cast<int>(r));
    std::array<int, 3> partner{};
    int sign = 1;
    const std::array<int, 3> t{i, j, k};
    for (int a = 0; a < 3; ++a) {
      if (t[a] < g) {
        partner[a] = t[a] + g;
      } else {
        partner[a] = t[a] - g;
        sign = -sign;
      }
    }
    sign *= sort_triple(partner);
    const mpz_class& other =
        v.coeffs[triple_rank(u.genus, partner[0], partner[1], partner[2])];
    if (other == 0) continue;
    if (sign > 0)
      s += u.coeffs[r] * other;
    else
      s -= u.coeffs[r] * other;
  }
  return s;
}

Wedge3 j_map(const VClass& v) {
  const int g = v.genus.value();
  Wedge3 out = v.lift;
  out *= mpz_class(g - 1);
  out -= wedge_with_theta(contraction_c(v.lift));
  return out;
}

mpz_class q_form(const VClass& u, const VClass& v) {
  check_same_genus(u.genus, v.genus);
  const int g = u.genus.value();
  if (g < 3) throw std::invalid_argument("q_form: need g >= 3");
  const mpz_class num = wedge3_pairing(j_map(u), j_map(v));
  const mpz_class den = g - 1;
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
    throw std::logic_error("q_form: <j(u), j(v)> not divisible by g-1");
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

namespace {

// Integer column echelon form of the sublattice generated by the columns.
// Column operations are unimodular, so the column lattice is preserved.
struct EchelonLattice {
  std::vector<std::vector<mpz_class>> cols;  // pivot rows strictly increasing
  std::vector<int> pivot_rows;
};

EchelonLattice echelonize(std::vector<std::vector<mpz_class>> cols, size_t rows) {
  EchelonLattice out;
  size_t active = cols.size();  // cols[0..active) not yet placed
  for (size_t r = 0; r < rows && active > 0; ++r) {
    // Euclidean reduction among the active columns at row r.
    for (;;) {
      size_t best = active;
      for (size_t c = 0; c < active; ++c) {
        if (cols[c][r] == 0) continue;
        if (best == active ||
            mpz_cmpabs(cols[c][r].get_mpz_t(), cols[best][r].get_mpz_t()) < 0)
          best = c;
      }
      if (best == active) break;  // row r is zero on all active columns
      bool reduced_all = true;
      for (size_t c = 0; c < active; ++c) {
        if (c == best || cols[c][r] == 0) continue;
        mpz_class f = cols[c][r] / cols[best][r];  // truncated quotient
        if (f != 0)
          for (size_t rr = r; rr < rows; ++rr) cols[c][rr] -= f * cols[best][rr];
        if (cols[c][r] != 0) reduced_all = false;
      }
      if (reduced_all) {
        if (cols[best][r] < 0)
          for (size_t rr = r; rr < rows; ++rr) cols[best][rr] = -cols[best][rr];
        out.cols.push_back(std::move(cols[best]));
        out.pivot_rows.push_back(static_cast<int>(r));
        cols[best] = std::move(cols[--active]);
        cols.pop_back();
        break;
      }
    }
  }
  return out;
}

bool lattice_contains(const EchelonLattice& lat, std::vector<mpz_class> w) {
  size_t next = 0;
  for (size_t r = 0; r < w.size(); ++r) {
    while (next < lat.pivot_rows.size() &&
           static_cast<size_t>(lat.pivot_rows[next]) < r)
      ++next;
    if (w[r] == 0) continue;
    if (next >= lat.pivot_rows.size() ||
        static_cast<size_t>(lat.pivot_rows[next]) != r)
      return false;
    const auto& col = lat.cols[next];
    if (!mpz_divisible_p(w[r].get_mpz_t(), col[r].get_mpz_t())) return false;
    mpz_class f;
    mpz_divexact(f.get_mpz_t(), w[r].get_mpz_t(), col[r].get_mpz_t());
    for (size_t rr = r; rr < w.size(); ++rr) w[rr] -= f * col[rr];
  }
  return true;
}

}  // namespace

bool vclass_equal(const VClass& u, const VClass& v) {
  check_same_genus(u.genus, v.genus);
  const Genus g = u.genus;
  const int n = 2 * g.value();
  const size_t dim = static_cast<size_t>(wedge3_dim(g));
  std::vector<std::vector<mpz_class>> gens;
  gens.reserve(n);
  for (int i = 0; i < n; ++i)
    gens.push_back(wedge_with_theta(HVector::basis(g, i)).coeffs);
  const EchelonLattice lat = echelonize(std::move(gens), dim);
  Wedge3 diff = u.lift - v.lift;
  return lattice_contains(lat, std::move(diff.coeffs));
}

IntMatrix intersection_gram(Genus g) {
  const int n = 2 * g.value();
  IntMatrix m(n, std::vector<mpz_class>(n));
  for (int i = 0; i < g.value(); ++i) {
    m[i][g.value() + i] = 1;
    m[g.value() + i][i] = -1;
  }
  return m;
}

std::vector<IntMatrix> sp_generators(Genus g) {
  const int gv = g.value();
  const int n = 2 * gv;
  std::vector<IntMatrix> gens;
  const IntMatrix zero(n, std::vector<mpz_class>(n));

  // Rotation J: a_i -> b_i, b_i -> -a_i.
  IntMatrix rot = zero;
  for (int i = 0; i < gv; ++i) {
    rot[gv + i][i] = 1;
    rot[i][gv + i] = -1;
  }
  gens.push_back(std::move(rot));

  // Translations [[I, S], [0, I]], S over the symmetric basis.
  auto translation = [&](int i, int j) {
    IntMatrix m = zero;
    for (int d = 0; d < n; ++d) m[d][d] = 1;
    m[i][gv + j] = 1;
    if (i != j) m[j][gv + i] = 1;
    return m;
  };
  for (int i = 0; i < gv; ++i)
    for (int j = i; j < gv; ++j) gens.push_back(translation(i, j));

  return gens;
}

bool is_symplectic(const IntMatrix& m, Genus g) {
  const int n = 2 * g.value();
  if (m.size() != static_cast<size_t>(n)) return false;
  for (const auto& row : m)
    if (row.size() != static_cast<size_t>(n)) return false;
  const IntMatrix jm = intersection_gram(g);
  // (M^T J M)[r][c] = sum_{s,t} M[s][r] J[s][t] M[t][c]
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      mpz_class acc = 0;
      for (int s = 0; s < n; ++s) {
        if (m[s][r] == 0) continue;
        for (int t = 0; t < n; ++t) {
          if (jm[s][t] == 0) continue;
          acc += m[s][r] * jm[s][t] * m[t][c];
        }
      }
      if (acc != jm[r][c]) return false;
    }
  return true;
}

HVector act(const IntMatrix& m, const HVector& x) {
  const int n = 2 * x.genus.value();
  if (m.size() != static_cast<size_t>(n))
    throw std::invalid_argument("act: matrix size does not match genus");
  HVector out(x.genus);
  for (int r = 0; r < n; ++r) {
    mpz_class acc = 0;
    for (int c = 0; c < n; ++c) acc += m[r][c] * x.coords[c];
    out.coords[r] = std::move(acc);
  }
  return out;
}

Wedge3 act(const IntMatrix& m, const Wedge3& w) {
  const int n = 2 * w.genus.value();
  if (m.size() != static_cast<size_t>(n))
    throw std::invalid_argument("act: matrix size does not match genus");
  // Columns of M as H vectors.
  std::vector<HVector> cols(n, HVector(w.genus));
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < n; ++r) cols[c].coords[r] = m[r][c];
  Wedge3 out(w.genus);
  for (size_t r = 0; r < w.coeffs.size(); ++r) {
    if (w.coeffs[r] == 0) continue;
    const auto [i, j, k] = triple_unrank(w.genus, static_cast<int>(r));
    Wedge3 image = wedge3_of(cols[i], cols[j], cols[k]);
    image *= w.coeffs[r];
    out += image;
  }
  return out;
}

}  // namespace biext
