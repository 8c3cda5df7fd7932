#pragma once

#include <nlohmann/json.hpp>

#include "starlike/beta.hpp"
#include "starlike/conditions.hpp"
#include "starlike/params.hpp"
#include "starlike/power_series.hpp"
#include "starlike/verifier.hpp"
#include "starlike/weights.hpp"

namespace starlike {

using json = nlohmann::json;

/// Non-finite doubles become null.
json finite_or_null(double x);

json to_json(const ParameterSet& p);
/// Reads alpha, gamma, delta, zeta and rebuilds the derived fields.
ParameterSet parameter_set_from_json(const json& j);

/// {"kind": string, "params": {...}}. Custom weights serialize but cannot be
/// read back (Error{unknown_operator}).
json to_json(const Weight& w);
Weight weight_from_json(const json& j);

json to_json(const BetaResult& b);
json to_json(const Constraint& c);
json to_json(const ConditionReport& r);
json to_json(const VerificationReport& r);

/// Array of [re, im] pairs.
json to_json(const PowerSeries& s);
/// Accepts [re, im] pairs or plain numbers. Error{invalid_series} otherwise.
PowerSeries power_series_from_json(const json& j);

json to_json(cplx z);

}  // namespace starlike
