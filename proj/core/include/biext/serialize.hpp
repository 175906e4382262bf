#ifndef BIEXT_SERIALIZE_HPP
#define BIEXT_SERIALIZE_HPP

#include <string>
#include <vector>

#include "biext/degeneration.hpp"
#include "biext/divisors.hpp"
#include "biext/heisenberg.hpp"
#include "biext/modular.hpp"
#include "biext/symplectic.hpp"

// JSON and CSV wire formats.  Integers and rationals travel as decimal
// strings so nothing is clipped; doubles are printed with 17 significant
// digits so they round-trip exactly.
//
//   HVector      {"genus": g, "coords": ["...", ...]}          (2g entries)
//   Wedge3       {"genus": g, "coeffs": ["...", ...]}          (C(2g,3) entries)
//   GZElement    {"v": <Wedge3>, "n": "..."}
//   DivisorClass {"basis": [...], "coeffs": {label: "p/q"}}
//   AsymptoticFit {"coeff_log": x, "coeff_loglog": x, "coeff_const": x,
//                  "residual": x}
//   ModularValue {"omega": [[[re,im], ...], ...], "value": [re,im],
//                 "norm": x, "weight": "k"}
//   samples CSV  optional leading '#' metadata lines, then a header
//                t,log_t,loglog_t,value.  log_t is authoritative: on the
//                wide windows t itself underflows a double and prints as 0.

namespace biext {

std::string to_json(const HVector& x);
HVector hvector_from_json(const std::string& text);

std::string to_json(const Wedge3& w);
Wedge3 wedge3_from_json(const std::string& text);

std::string to_json(const GZElement& e);
GZElement gz_from_json(const std::string& text);

std::string to_json(const DivisorClass& d);
std::string to_json(const AsymptoticFit& f);
std::string to_json(const ModularValue& v);

std::string samples_to_csv(const std::vector<Sample>& samples,
                           const std::string& metadata_json);
std::vector<Sample> samples_from_csv(const std::string& text);

}  // namespace biext

#endif  // BIEXT_SERIALIZE_HPP
