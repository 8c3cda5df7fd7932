#include <doctest.h>

#include <cmath>

#include "starlike/error.hpp"
#include "starlike/serialization.hpp"

using namespace starlike;

TEST_CASE("parameters round trip") {
  const auto p = ParameterSet::make(3, 1, 1.5, 0.6);
  const auto q = parameter_set_from_json(to_json(p));
  CHECK(q.mu == p.mu);
  CHECK(q.xi == p.xi);
  CHECK_THROWS_AS(parameter_set_from_json(json{{"alpha", 1}}), Error);
}

TEST_CASE("weights round trip") {
  for (const auto& w : {Weight::bernardi(2), Weight::komatu(0.5, 2), Weight::hohlov(0.5, 1, 2.5),
                        Weight::carlson_shaffer(1, 3), Weight::two_param(0.5, 1.5), Weight::ali_singh(0.8),
                        Weight::uniform()}) {
    const json j = to_json(w);
    CHECK(j.at("kind") == std::string(to_string(w.kind())));
    const auto back = weight_from_json(j);
    CHECK(back.kind() == w.kind());
    CHECK(back.params() == w.params());
  }
  CHECK_THROWS_AS(weight_from_json(json{{"kind", "nope"}}), Error);
  CHECK_THROWS_AS(weight_from_json(json{{"kind", "custom"}}), Error);
}

TEST_CASE("beta result") {
  const json j = to_json(BetaResult{-0.5, -1.0 / 3.0, BetaMethod::series_termwise, 1e-9});
  CHECK(j.at("method") == "series_termwise");
  CHECK(j.at("beta") == -0.5);
  CHECK(j.at("err") == 1e-9);
}

TEST_CASE("condition report maps NaN to null") {
  ConditionReport r;
  r.theorem_id = "T4_2_gamma_zero";
  r.margin = NAN;
  r.covered = false;
  const json j = to_json(r);
  CHECK(j.at("margin").is_null());
  CHECK(j.at("covered") == false);
  CHECK(j.contains("witness"));
}

TEST_CASE("verification report") {
  VerificationReport r;
  r.quantity = Quantity::sharpness;
  r.ray_values = {0.1, 0.01};
  const json j = to_json(r);
  CHECK(j.at("quantity") == "sharpness");
  CHECK(j.at("ray_values").size() == 2);
}

TEST_CASE("series round trip") {
  const PowerSeries s(std::vector<cplx>{1.0, {0.5, -0.25}, {0.0, 2.0}});
  const auto back = power_series_from_json(to_json(s));
  CHECK(max_coeff_distance(s, back) == 0.0);
  CHECK(power_series_from_json(json::array({1, 0.5})).size() == 2);
  CHECK_THROWS_AS(power_series_from_json(json::array({"x"})), Error);
  CHECK_THROWS_AS(power_series_from_json(json::object()), Error);
}
