#include "biext/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace biext {

namespace {

using nlohmann::json;

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

json integer_strings(const std::vector<mpz_class>& v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(x.get_str());
  return arr;
}

std::vector<mpz_class> parse_integer_strings(const json& arr) {
  if (!arr.is_array()) throw std::invalid_argument("expected an array of strings");
  std::vector<mpz_class> out;
  out.reserve(arr.size());
  for (const auto& s : arr) {
    if (!s.is_string()) throw std::invalid_argument("expected decimal strings");
    out.emplace_back(s.get<std::string>());  // throws on malformed digits
  }
  return out;
}

Genus parse_genus(const json& j) {
  if (!j.contains("genus") || !j["genus"].is_number_integer())
    throw std::invalid_argument("missing integer \"genus\" field");
  return Genus(j["genus"].get<int>());
}

}  // namespace

std::string to_json(const HVector& x) {
  json j;
  j["genus"] = x.genus.value();
  j["coords"] = integer_strings(x.coords);
  return j.dump();
}

HVector hvector_from_json(const std::string& text) {
  const json j = json::parse(text);
  return HVector(parse_genus(j), parse_integer_strings(j.at("coords")));
}

std::string to_json(const Wedge3& w) {
  json j;
  j["genus"] = w.genus.value();
  j["coeffs"] = integer_strings(w.coeffs);
  return j.dump();
}

Wedge3 wedge3_from_json(const std::string& text) {
  const json j = json::parse(text);
  return Wedge3(parse_genus(j), parse_integer_strings(j.at("coeffs")));
}

std::string to_json(const GZElement& e) {
  json j;
  j["v"] = json::parse(to_json(e.v.lift));
  j["n"] = e.n.get_str();
  return j.dump();
}

GZElement gz_from_json(const std::string& text) {
  const json j = json::parse(text);
  Wedge3 lift = wedge3_from_json(j.at("v").dump());
  if (!j.contains("n") || !j["n"].is_string())
    throw std::invalid_argument("missing string \"n\" field");
  return {VClass(std::move(lift)), mpz_class(j["n"].get<std::string>())};
}

std::string to_json(const DivisorClass& d) {
  json j;
  j["basis"] = d.basis();
  json coeffs = json::object();
  for (const auto& label : d.basis()) coeffs[label] = d.coeff(label).get_str();
  j["coeffs"] = coeffs;
  return j.dump();
}

std::string to_json(const AsymptoticFit& f) {
  json j;
  j["coeff_log"] = f.coeff_log;
  j["coeff_loglog"] = f.coeff_loglog;
  j["coeff_const"] = f.coeff_const;
  j["residual"] = f.residual;
  return j.dump();
}

std::string to_json(const ModularValue& v) {
  json omega = json::array();
  const int g = v.point.g();
  for (int r = 0; r < g; ++r) {
    json row = json::array();
    for (int c = 0; c < g; ++c)
      row.push_back({v.point.at(r, c).real(), v.point.at(r, c).imag()});
    omega.push_back(row);
  }
  json j;
  j["omega"] = omega;
  j["value"] = {v.value.real(), v.value.imag()};
  j["weight"] = v.weight.get_str();
  j["norm"] = modular_norm(v);
  return j.dump();
}

std::string samples_to_csv(const std::vector<Sample>& samples,
                           const std::string& metadata_json) {
  std::ostringstream out;
  if (!metadata_json.empty()) out << "# " << metadata_json << "\n";
  out << "t,log_t,loglog_t,value\n";
  for (const auto& s : samples) {
    out << format_double(std::exp(s.log_abs_t)) << ','
        << format_double(s.log_abs_t) << ','
        << format_double(std::log(-s.log_abs_t)) << ','
        << format_double(s.value) << '\n';
  }
  return out.str();
}

std::vector<Sample> samples_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<Sample> out;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      if (line.rfind("t,log_t,loglog_t,value", 0) != 0)
        throw std::invalid_argument("samples_from_csv: unexpected header: " + line);
      header_seen = true;
      continue;
    }
    std::istringstream cells(line);
    std::string cell;
    std::vector<std::string> fields;
    while (std::getline(cells, cell, ',')) fields.push_back(cell);
    if (fields.size() != 4)
      throw std::invalid_argument("samples_from_csv: expected 4 columns");
    // log_t is the authoritative parameter column; t may have underflowed.
    out.push_back({std::stod(fields[1]), std::stod(fields[3])});
  }
  if (!header_seen) throw std::invalid_argument("samples_from_csv: no header");
  return out;
}

}  // namespace biext
