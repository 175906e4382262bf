#include "biext/divisors.hpp"

#include <stdexcept>

namespace biext {

DivisorClass::DivisorClass(std::vector<std::string> basis) : basis_(std::move(basis)) {
  for (const auto& label : basis_) coeffs_[label] = 0;
  if (coeffs_.size() != basis_.size())
    throw std::invalid_argument("DivisorClass: duplicate basis label");
}

const mpq_class& DivisorClass::coeff(const std::string& label) const {
  const auto it = coeffs_.find(label);
  if (it == coeffs_.end())
    throw std::invalid_argument("DivisorClass: unknown label " + label);
  return it->second;
}

void DivisorClass::set_coeff(const std::string& label, mpq_class value) {
  const auto it = coeffs_.find(label);
  if (it == coeffs_.end())
    throw std::invalid_argument("DivisorClass: unknown label " + label);
  value.canonicalize();
  it->second = std::move(value);
}

std::vector<std::string> compactified_basis(Genus g) {
  std::vector<std::string> basis{"lambda"};
  for (int h = 0; h <= g.value() / 2; ++h)
    basis.push_back("delta_" + std::to_string(h));
  return basis;
}

std::vector<std::string> hyperelliptic_basis(Genus g) {
  std::vector<std::string> basis{"lambda"};
  for (int j = 0; j <= (g.value() - 1) / 2; ++j)
    basis.push_back("xi_" + std::to_string(j));
  for (int h = 1; h <= g.value() / 2; ++h)
    basis.push_back("delta_" + std::to_string(h));
  return basis;
}

std::vector<std::string> interior_basis() { return {"lambda"}; }

DivisorClass chern_biextension(Genus g) {
  const long gv = g.value();
  if (gv < 3) throw std::invalid_argument("chern_biextension: need g >= 3");
  DivisorClass c(compactified_basis(g));
  c.set_coeff("lambda", mpq_class(8 * gv + 4));
  c.set_coeff("delta_0", mpq_class(-gv));
  for (long h = 1; h <= gv / 2; ++h)
    c.set_coeff("delta_" + std::to_string(h), mpq_class(-4 * h * (gv - h)));
  return c;
}

DivisorRelation cornalba_harris_relation(Genus g) {
  const long gv = g.value();
  if (gv < 2) throw std::invalid_argument("cornalba_harris_relation: need g >= 2");
  DivisorClass lhs(hyperelliptic_basis(g));
  lhs.set_coeff("lambda", mpq_class(8 * gv + 4));
  DivisorClass rhs(hyperelliptic_basis(g));
  rhs.set_coeff("xi_0", mpq_class(gv));
  for (long j = 1; j <= (gv - 1) / 2; ++j)
    rhs.set_coeff("xi_" + std::to_string(j), mpq_class((j + 1) * (gv - j)));
  for (long h = 1; h <= gv / 2; ++h)
    rhs.set_coeff("delta_" + std::to_string(h), mpq_class(4 * h * (gv - h)));
  return {std::move(lhs), std::move(rhs)};
}

R0Solution solve_r0_full(Genus g) {
  const long gv = g.value();
  if (gv < 3) throw std::invalid_argument("solve_r0: need g >= 3");
  // Both (8g+4)lambda expansions over the hyperelliptic basis must agree
  // label by label:
  //   known:   g xi_0 + sum_j (j+1)(g-j) xi_j + 4 sum_h h(g-h) delta_h
  //   ansatz: -r0 xi_0 + sum_{j>=1} c_j xi_j  + 4 sum_h h(g-h) delta_h
  // xi_0 determines r0; the xi_j (j >= 1) determine the c_j; the delta_h
  // coefficients carry no unknown and must cancel exactly.
  const DivisorRelation rel = cornalba_harris_relation(g);
  R0Solution out;
  for (const auto& label : rel.rhs.basis()) {
    const mpq_class& coeff = rel.rhs.coeff(label);
    if (label == "xi_0") {
      out.r0 = -coeff;
    } else if (label.rfind("xi_", 0) == 0) {
      out.c[label] = coeff;
    } else if (label.rfind("delta_", 0) == 0) {
      const long h = std::stol(label.substr(6));
      if (coeff != mpq_class(4 * h * (gv - h)))
        throw std::logic_error("solve_r0: delta coefficients do not cancel");
    }
  }
  return out;
}

mpq_class solve_r0(Genus g) { return solve_r0_full(g).r0; }

DivisorClass morita_class(Genus g) {
  DivisorClass c(interior_basis());
  c.set_coeff("lambda", mpq_class(8 * g.value() + 4));
  return c;
}

}  // namespace biext
