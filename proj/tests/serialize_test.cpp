#include "biext/serialize.hpp"

#include <random>

#include "doctest.h"
#include "json.hpp"
#include "test_util.hpp"

using namespace biext;
using nlohmann::json;

TEST_CASE("lattice vectors round-trip through JSON with full precision") {
  const Genus g3(3);
  std::mt19937 rng(11001);

  for (int rep = 0; rep < 10; ++rep) {
    const HVector x = testutil::random_hvector(g3, rng);
    CHECK(hvector_from_json(to_json(x)) == x);
    const Wedge3 w = testutil::random_wedge3(g3, rng);
    CHECK(wedge3_from_json(to_json(w)) == w);
  }

  SUBCASE("coefficients beyond 64 bits survive") {
    Wedge3 w(g3);
    mpz_class big;
    mpz_ui_pow_ui(big.get_mpz_t(), 2, 200);
    w.coeffs[0] = big;
    w.coeffs[1] = -big - 1;
    const Wedge3 back = wedge3_from_json(to_json(w));
    CHECK(back == w);

    const json j = json::parse(to_json(w));
    CHECK(j["genus"] == 3);
    CHECK(j["coeffs"].size() == static_cast<size_t>(wedge3_dim(g3)));
    CHECK(j["coeffs"][0].get<std::string>() == big.get_str());
  }

  SUBCASE("malformed documents are rejected") {
    CHECK_THROWS(wedge3_from_json("{\"genus\": 3, \"coeffs\": [\"x\"]}"));
    CHECK_THROWS(wedge3_from_json("{\"coeffs\": []}"));
    CHECK_THROWS_AS(wedge3_from_json("{\"genus\": 3, \"coeffs\": [\"1\"]}"),
                    std::invalid_argument);  // wrong length
    CHECK_THROWS_AS(hvector_from_json("{\"genus\": 3, \"coords\": [\"1\",\"2\"]}"),
                    std::invalid_argument);  // wrong length
    CHECK_THROWS(hvector_from_json("{\"genus\": 0, \"coords\": []}"));
  }
}

TEST_CASE("group elements serialize with a nested lift") {
  const Genus g3(3);
  std::mt19937 rng(11002);
  const GZElement e{VClass(testutil::random_wedge3(g3, rng)), mpz_class("-987654321098765432109")};
  const GZElement back = gz_from_json(to_json(e));
  CHECK(back.n == e.n);
  CHECK(back.v.lift == e.v.lift);

  const json j = json::parse(to_json(e));
  CHECK(j["n"].is_string());
  CHECK(j["v"]["genus"] == 3);
}

TEST_CASE("divisor classes serialize exact rationals") {
  DivisorClass d(hyperelliptic_basis(Genus(3)));
  d.set_coeff("xi_1", mpq_class(7, 3));
  d.set_coeff("lambda", mpq_class(-28));
  const json j = json::parse(to_json(d));
  CHECK(j["basis"] ==
        json::array({"lambda", "xi_0", "xi_1", "delta_1"}));
  CHECK(j["coeffs"]["xi_1"] == "7/3");
  CHECK(j["coeffs"]["lambda"] == "-28");
  CHECK(j["coeffs"]["delta_1"] == "0");
}

TEST_CASE("fit reports serialize numerically") {
  const json j = json::parse(to_json(AsymptoticFit{-2.0, -10.0, 3.25, 1e-9}));
  CHECK(j["coeff_log"] == -2.0);
  CHECK(j["coeff_loglog"] == -10.0);
  CHECK(j["coeff_const"] == 3.25);
  CHECK(j["residual"] == 1e-9);
}

TEST_CASE("modular values carry omega, value, weight and norm") {
  const SiegelPoint om = SiegelPoint::diagonal({Complex(0, 2), Complex(0, 3)});
  const ModularValue v{Complex(0.5, -0.25), mpq_class(10), om};
  const json j = json::parse(to_json(v));
  CHECK(j["omega"].size() == 2);
  CHECK(j["omega"][0][0] == json::array({0.0, 2.0}));
  CHECK(j["value"] == json::array({0.5, -0.25}));
  CHECK(j["weight"] == "10");
  CHECK(j["norm"].get<double>() ==
        doctest::Approx(std::abs(Complex(0.5, -0.25)) * std::pow(6.0, 5.0))
            .epsilon(1e-12));
}

TEST_CASE("sample CSV round trip preserves the parameter column") {
  std::vector<Sample> samples;
  for (int k = 3; k <= 12; ++k)
    samples.push_back({-k * std::log(10.0), 0.123456789012345 * k});
  samples.push_back({-2000.0, 42.0});  // far below double range for t itself

  const std::string csv = samples_to_csv(samples, "{\"tool\":\"biext\"}");
  CHECK(csv.rfind("# {\"tool\":\"biext\"}\n", 0) == 0);
  CHECK(csv.find("t,log_t,loglog_t,value\n") != std::string::npos);

  const auto back = samples_from_csv(csv);
  REQUIRE(back.size() == samples.size());
  for (size_t i = 0; i < samples.size(); ++i) {
    CHECK(back[i].log_abs_t == samples[i].log_abs_t);
    CHECK(back[i].value == samples[i].value);
  }

  CHECK_THROWS_AS(samples_from_csv("a,b\n1,2\n"), std::invalid_argument);
  CHECK_THROWS_AS(samples_from_csv(""), std::invalid_argument);
}
