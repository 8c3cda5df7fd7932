#include "starlike/serialization.hpp"

#include <cmath>

#include "starlike/error.hpp"

namespace starlike {

json finite_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

json to_json(cplx z) { return json::array({finite_or_null(z.real()), finite_or_null(z.imag())}); }

json to_json(const ParameterSet& p) {
  return {{"alpha", p.alpha}, {"gamma", p.gamma}, {"delta", p.delta}, {"zeta", p.zeta},
          {"mu", p.mu},       {"nu", p.nu},       {"xi", p.xi},       {"warnings", p.warnings}};
}

ParameterSet parameter_set_from_json(const json& j) {
  try {
    return ParameterSet::make(j.at("alpha").get<double>(), j.at("gamma").get<double>(),
                              j.at("delta").get<double>(), j.at("zeta").get<double>());
  } catch (const json::exception& e) {
    throw Error(ErrorCode::invalid_argument, std::string("parameter JSON: ") + e.what());
  }
}

json to_json(const Weight& w) {
  json params = json::object();
  for (const auto& [k, v] : w.params()) params[k] = v;
  return {{"kind", std::string(to_string(w.kind()))}, {"params", params}};
}

Weight weight_from_json(const json& j) {
  std::map<std::string, double> params;
  std::string kind;
  try {
    kind = j.at("kind").get<std::string>();
    if (j.contains("params")) {
      for (const auto& [k, v] : j.at("params").items()) params[k] = v.get<double>();
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::invalid_argument, std::string("weight JSON: ") + e.what());
  }
  if (kind == "custom") throw Error(ErrorCode::unknown_operator, "custom weights cannot be read from JSON");
  return make_weight(kind, params);
}

json to_json(const BetaResult& b) {
  return {{"beta", finite_or_null(b.beta)},
          {"ratio", finite_or_null(b.ratio)},
          {"method", std::string(to_string(b.method))},
          {"err", finite_or_null(b.err_estimate)}};
}

json to_json(const Constraint& c) {
  return {{"name", c.name},
          {"slack", finite_or_null(c.slack)},
          {"satisfied", c.satisfied},
          {"hypothesis", c.hypothesis}};
}

json to_json(const ConditionReport& r) {
  json j = {{"theorem_id", r.theorem_id},
            {"branch", r.branch},
            {"passed", r.passed},
            {"covered", r.covered},
            {"margin", finite_or_null(r.margin)},
            {"tolerance", r.tolerance}};
  j["witness"] = {{"t", finite_or_null(r.witness_t)},
                  {"z", to_json(r.witness_z)},
                  {"epsilon", to_json(r.witness_epsilon)},
                  {"value", finite_or_null(r.witness_value)}};
  json cs = json::array();
  for (const auto& c : r.constraints) cs.push_back(to_json(c));
  j["constraints"] = cs;
  json d = json::object();
  for (const auto& [k, v] : r.diagnostics) d[k] = finite_or_null(v);
  j["diagnostics"] = d;
  j["notes"] = r.notes;
  return j;
}

json to_json(const VerificationReport& r) {
  json j = {{"quantity", std::string(to_string(r.quantity))},
            {"min_value", finite_or_null(r.min_value)},
            {"argmin_z", to_json(r.argmin_z)},
            {"passed", r.passed},
            {"tolerance", r.tolerance},
            {"grid", {{"radii", r.grid.radii}, {"angles", r.grid.angles}}},
            {"notes", r.notes}};
  if (r.quantity == Quantity::w_membership) j["best_phi"] = r.best_phi;
  if (r.quantity == Quantity::sharpness) {
    json rv = json::array();
    for (double v : r.ray_values) rv.push_back(finite_or_null(v));
    j["ray_values"] = rv;
  }
  return j;
}

json to_json(const PowerSeries& s) {
  json a = json::array();
  for (const cplx& c : s.coeffs()) a.push_back(to_json(c));
  return a;
}

PowerSeries power_series_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw Error(ErrorCode::invalid_series, "series JSON must be a nonempty array");
  std::vector<cplx> c;
  c.reserve(j.size());
  for (const auto& e : j) {
    if (e.is_number()) {
      c.emplace_back(e.get<double>(), 0.0);
    } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
      c.emplace_back(e[0].get<double>(), e[1].get<double>());
    } else {
      throw Error(ErrorCode::invalid_series, "series entries must be numbers or [re, im] pairs");
    }
  }
  return PowerSeries(std::move(c));
}

}  // namespace starlike
