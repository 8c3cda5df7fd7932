#include "starlike/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>

#include "starlike/beta.hpp"
#include "starlike/conditions.hpp"
#include "starlike/error.hpp"
#include "starlike/serialization.hpp"
#include "starlike/transform.hpp"
#include "starlike/verifier.hpp"
#include "starlike/weights.hpp"

namespace starlike::cli {

namespace {

constexpr const char* kSchemaVersion = "1";

struct Options {
  double alpha = 0.0;
  double gamma = 0.0;
  double delta = 1.0;
  double zeta = 0.0;
  std::string weight = "bernardi";
  std::optional<double> c, k, p, a, b;
  std::string weight_json;
  std::size_t grid_radii = 24;
  std::size_t grid_angles = 128;
  double grid_rmax = 0.99;
  std::size_t phi_grid = 360;
  std::optional<double> tol;
  std::string theorem = "all";
  std::string method = "auto";
  std::optional<std::size_t> terms;
  std::optional<double> class_beta;
  std::string input;
  std::string quantity = "starlike_margin";
  std::vector<double> sharp_radii{0.9, 0.99, 0.999};
  std::string csv;
  std::string output;
};

int exit_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument:
    case ErrorCode::complex_roots:
    case ErrorCode::negative_root:
    case ErrorCode::invalid_series:
    case ErrorCode::non_unit_constant_term:
    case ErrorCode::non_zero_constant_term:
    case ErrorCode::param_out_of_range:
    case ErrorCode::precondition_violated:
    case ErrorCode::unknown_operator:
      return exit_usage;
    default:
      return exit_numeric;
  }
}

json error_json(const Error& e) {
  return {{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::invalid_argument, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::invalid_argument, what + ": " + e.what());
  }
}

Weight weight_of(const Options& o) {
  if (!o.weight_json.empty()) {
    const bool inline_doc = o.weight_json.find('{') != std::string::npos;
    return weight_from_json(parse_json_text(inline_doc ? o.weight_json : slurp(o.weight_json), "--weight-json"));
  }
  std::map<std::string, double> params;
  if (o.c) params["c"] = *o.c;
  if (o.k) params["k"] = *o.k;
  if (o.p) params["p"] = *o.p;
  if (o.a) params["a"] = *o.a;
  if (o.b) params["b"] = *o.b;
  return make_weight(o.weight, params);
}

DiskGrid grid_of(const Options& o) {
  if (o.grid_radii == 0 || o.grid_angles == 0) throw Error(ErrorCode::invalid_argument, "grid sizes must be positive");
  if (!(o.grid_rmax > 0.0 && o.grid_rmax < 1.0)) throw Error(ErrorCode::invalid_argument, "--grid-rmax must lie in (0, 1)");
  return default_disk_grid(o.grid_rmax, o.grid_radii, o.grid_angles);
}

// Enough terms that r^N is below 1e-11 at the largest radius in play.
std::size_t auto_terms(double rmax) {
  const double n = std::ceil(25.0 / -std::log(rmax));
  return static_cast<std::size_t>(std::clamp(n, 512.0, 65536.0));
}

json base_inputs(const std::string& command, const ParameterSet& p, const Weight& w) {
  return {{"command", command}, {"params", to_json(p)}, {"weight", to_json(w)}};
}

json document(json inputs, json results, bool certified) {
  return {{"version", kSchemaVersion}, {"inputs", std::move(inputs)}, {"results", std::move(results)},
          {"certified", certified}};
}

void emit(const json& doc, const Options& o, std::ostream& out) {
  const std::string text = doc.dump(2) + "\n";
  if (o.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.output);
  if (!f) throw Error(ErrorCode::invalid_argument, "cannot write " + o.output);
  f << text;
}

void write_csv(const VerificationReport& r, const Options& o) {
  if (o.csv.empty()) return;
  std::ofstream f(o.csv);
  if (!f) throw Error(ErrorCode::invalid_argument, "cannot write " + o.csv);
  write_samples_csv(r, f);
}

// ---- beta ------------------------------------------------------------------

int cmd_beta(const Options& o, std::ostream& out) {
  const ParameterSet p = ParameterSet::make(o.alpha, o.gamma, o.delta, o.zeta);
  const Weight w = weight_of(o);
  BetaResult r;
  if (o.method == "auto" || o.method == "quadrature") {
    r = solve_beta(w, p, o.tol.value_or(1e-10));
  } else if (o.method == "series") {
    r = solve_beta_series(w, p, o.terms.value_or(100000));
  } else if (o.method == "5F4") {
    if (w.kind() != WeightKind::carlson_shaffer) {
      throw Error(ErrorCode::invalid_argument, "--method 5F4 needs --weight carlson_shaffer");
    }
    r = solve_beta_5F4(w.param("b"), w.param("c"), p);
  } else {
    const auto cf = closed_form_beta(w, p);
    if (!cf) throw Error(ErrorCode::invalid_argument, "no closed form is known for this configuration");
    r = *cf;
  }
  json inputs = base_inputs("beta", p, w);
  inputs["method"] = o.method;
  json results = to_json(r);
  const auto cf = closed_form_beta(w, p);
  results["closed_form"] = cf ? to_json(*cf) : json(nullptr);
  emit(document(inputs, results, true), o, out);
  return exit_ok;
}

// ---- check -----------------------------------------------------------------

struct StageOutcome {
  json doc;
  bool ran = false;
  bool passed = false;
  bool numeric_error = false;
};

json limits_json(const LimitConditions& l) {
  return {{"theorem_id", "limit_conditions"},
          {"passed", l.lambda_vanishes && l.pi_vanishes},
          {"lambda_vanishes", l.lambda_vanishes},
          {"pi_vanishes", l.pi_vanishes},
          {"sample_t", l.sample_t},
          {"lambda_samples", l.lambda_samples},
          {"pi_samples", l.pi_samples}};
}

// Runs one check. In lenient mode failures to apply are recorded in the
// outcome instead of thrown.
template <class F>
StageOutcome stage(const std::string& id, bool lenient, F&& body) {
  StageOutcome s;
  try {
    s.doc = body(s.passed);
    s.ran = true;
  } catch (const Error& e) {
    if (!lenient) throw;
    const bool usage = exit_for(e.code()) == exit_usage;
    s.doc = {{"theorem_id", id}, {"status", usage ? "not_applicable" : "error"}, {"error", error_json(e)}};
    s.numeric_error = !usage;
  }
  if (s.ran) s.doc["status"] = s.passed ? "passed" : "failed";
  return s;
}

std::vector<StageOutcome> run_checks(const std::string& theorem, const Weight& w, const ParameterSet& p) {
  const bool all = theorem == "all";
  std::vector<StageOutcome> out;
  auto report = [](const ConditionReport& r, bool& passed) {
    passed = r.passed;
    return to_json(r);
  };
  if (all || theorem == "T3_3") {
    out.push_back(stage("T3_3_monotone", all, [&](bool& ok) { return report(check_monotone_T33(w, p), ok); }));
  }
  if (theorem == "T4_1" && !p.gamma_positive()) {
    throw Error(ErrorCode::invalid_argument, "T4_1 is the gamma > 0 theorem; use --theorem T4_2");
  }
  if (theorem == "T4_2" && p.gamma_positive()) {
    throw Error(ErrorCode::invalid_argument, "T4_2 is the gamma = 0 theorem; use --theorem T4_1");
  }
  if (all || theorem == "T4_1" || theorem == "T4_2") {
    const std::string id = p.gamma_positive() ? "T4_1_gamma_pos" : "T4_2_gamma_zero";
    out.push_back(stage(id, all, [&](bool& ok) { return report(check_differential_bound(w, p), ok); }));
  }
  if (all || theorem == "ops") {
    out.push_back(stage("op_bound", all, [&](bool& ok) {
      return report(check_operator_bounds(to_string(w.kind()), w.params(), p), ok);
    }));
  }
  if (all || theorem == "N") {
    out.push_back(stage("N_functional", all, [&](bool& ok) { return report(minimize_N(w, p), ok); }));
  }
  if (all || theorem == "limits") {
    out.push_back(stage("limit_conditions", all, [&](bool& ok) {
      const LimitConditions l = limit_conditions(w, p);
      ok = l.lambda_vanishes && l.pi_vanishes;
      return limits_json(l);
    }));
  }
  return out;
}

int cmd_check(const Options& o, std::ostream& out) {
  const ParameterSet p = ParameterSet::make(o.alpha, o.gamma, o.delta, o.zeta);
  const Weight w = weight_of(o);
  const auto stages = run_checks(o.theorem, w, p);
  json reports = json::array();
  bool all_passed = true, numeric = false, any_ran = false;
  for (const auto& s : stages) {
    reports.push_back(s.doc);
    if (s.ran) {
      any_ran = true;
      all_passed = all_passed && s.passed;
    }
    numeric = numeric || s.numeric_error;
  }
  const bool certified = any_ran && all_passed && !numeric;
  json inputs = base_inputs("check", p, w);
  inputs["theorem"] = o.theorem;
  emit(document(inputs, {{"reports", reports}}, certified), o, out);
  if (numeric) return exit_numeric;
  return certified ? exit_ok : exit_condition_failed;
}

// ---- transform / verify ------------------------------------------------------

struct Source {
  PowerSeries fz_delta;
  double class_beta = 0.0;
  bool extremal = false;
};

Source source_of(const Options& o, const Weight& w, const ParameterSet& p, std::size_t default_terms) {
  Source s;
  if (!o.input.empty()) {
    s.fz_delta = power_series_from_json(parse_json_text(slurp(o.input), "--input"));
    s.class_beta = o.class_beta.value_or(0.0);
    return s;
  }
  s.class_beta = o.class_beta ? *o.class_beta : solve_beta(w, p).beta;
  s.fz_delta = make_member({{1.0, 0.0}, {-1.0, 0.0}, s.class_beta}, p, o.terms.value_or(default_terms));
  s.extremal = true;
  return s;
}

int cmd_transform(const Options& o, std::ostream& out) {
  const ParameterSet p = ParameterSet::make(o.alpha, o.gamma, o.delta, o.zeta);
  const Weight w = weight_of(o);
  const Source s = source_of(o, w, p, kDefaultTruncation);
  const PowerSeries T = apply_transform(s.fz_delta, w);
  json inputs = base_inputs("transform", p, w);
  inputs["source"] = s.extremal ? "extremal_member" : "input";
  if (!o.input.empty()) inputs["input"] = o.input;
  json results = {{"class_beta", s.class_beta},
                  {"fz_delta", to_json(s.fz_delta)},
                  {"Fz_delta", to_json(T)},
                  {"F", to_json(recover_F(T, p.delta))},
                  {"G", to_json(G_series(T))}};
  emit(document(inputs, results, true), o, out);
  return exit_ok;
}

Quantity quantity_of(const std::string& q) {
  if (q == "starlike_margin") return Quantity::starlike_margin;
  if (q == "W_membership") return Quantity::w_membership;
  if (q == "third_order") return Quantity::third_order;
  return Quantity::sharpness;
}

bool is_bernardi_zero(const Weight& w) {
  return w.kind() == WeightKind::uniform || (w.kind() == WeightKind::bernardi && w.param("c") == 0.0);
}

VerificationReport run_quantity(Quantity q, const Options& o, const Source& s, const Weight& w,
                                const ParameterSet& p) {
  const bool keep = !o.csv.empty();
  const double tol = o.tol.value_or(s.extremal ? 1e-3 : 1e-6);
  const DiskGrid grid = grid_of(o);
  switch (q) {
    case Quantity::starlike_margin:
      return starlike_margin(G_series(apply_transform(s.fz_delta, w)), p.xi, grid, tol, keep);
    case Quantity::w_membership:
      return w_membership(s.fz_delta, p, s.class_beta, grid, o.phi_grid, keep);
    case Quantity::third_order: {
      const PowerSeries F = recover_F(apply_transform(s.fz_delta, w), p.delta);
      auto r = third_order_functional(F, p, s.class_beta, grid, tol, keep);
      if (!is_bernardi_zero(w)) r.notes.push_back("the third-order characterization is stated for the c = 0 Bernardi weight");
      return r;
    }
    case Quantity::sharpness:
      return sharpness_probe(G_series(apply_transform(s.fz_delta, w)), p.xi, o.sharp_radii);
  }
  throw Error(ErrorCode::invalid_argument, "unknown quantity");
}

double rmax_for(Quantity q, const Options& o) {
  if (q == Quantity::sharpness) return *std::max_element(o.sharp_radii.begin(), o.sharp_radii.end());
  return o.grid_rmax;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const ParameterSet p = ParameterSet::make(o.alpha, o.gamma, o.delta, o.zeta);
  const Weight w = weight_of(o);
  const Quantity q = quantity_of(o.quantity);
  if (o.sharp_radii.empty()) throw Error(ErrorCode::invalid_argument, "--sharp-radii must be nonempty");
  const Source s = source_of(o, w, p, auto_terms(rmax_for(q, o)));
  const VerificationReport r = run_quantity(q, o, s, w, p);
  write_csv(r, o);
  json inputs = base_inputs("verify", p, w);
  inputs["quantity"] = o.quantity;
  inputs["source"] = s.extremal ? "extremal_member" : "input";
  inputs["terms"] = s.fz_delta.order();
  inputs["class_beta"] = s.class_beta;
  emit(document(inputs, to_json(r), r.passed), o, out);
  return r.passed ? exit_ok : exit_condition_failed;
}

// ---- report ----------------------------------------------------------------

int cmd_report(const Options& o, std::ostream& out) {
  const ParameterSet p = ParameterSet::make(o.alpha, o.gamma, o.delta, o.zeta);
  const Weight w = weight_of(o);
  json results = json::object();
  bool certified = true, numeric = false;

  std::optional<BetaResult> beta;
  try {
    beta = solve_beta(w, p, o.tol.value_or(1e-10));
    results["beta"] = to_json(*beta);
    results["beta"]["status"] = "ok";
  } catch (const Error& e) {
    results["beta"] = {{"status", "error"}, {"error", error_json(e)}};
    certified = false;
    numeric = numeric || exit_for(e.code()) == exit_numeric;
  }
  const auto cf = closed_form_beta(w, p);
  results["closed_form"] = cf ? to_json(*cf) : json(nullptr);

  json reports = json::array();
  bool any_ran = false;
  for (const auto& s : run_checks("all", w, p)) {
    reports.push_back(s.doc);
    any_ran = any_ran || s.ran;
    if (s.ran && !s.passed) certified = false;
    numeric = numeric || s.numeric_error;
  }
  if (!any_ran) certified = false;
  results["conditions"] = reports;

  if (!beta) {
    results["transform"] = {{"status", "skipped"}};
  } else {
    Options local = o;
    local.class_beta = beta->beta;
    local.input.clear();
    const double rmax = std::max(o.grid_rmax, *std::max_element(o.sharp_radii.begin(), o.sharp_radii.end()));
    try {
      const Source s = source_of(local, w, p, auto_terms(rmax));
      results["transform"] = {{"status", "ok"}, {"terms", s.fz_delta.order()}, {"class_beta", s.class_beta}};
      for (Quantity q : {Quantity::starlike_margin, Quantity::sharpness}) {
        const std::string key(to_string(q));
        try {
          const VerificationReport r = run_quantity(q, local, s, w, p);
          results[key] = to_json(r);
          results[key]["status"] = r.passed ? "passed" : "failed";
          certified = certified && r.passed;
        } catch (const Error& e) {
          results[key] = {{"status", "error"}, {"error", error_json(e)}};
          certified = false;
          numeric = true;
        }
      }
    } catch (const Error& e) {
      results["transform"] = {{"status", "error"}, {"error", error_json(e)}};
      certified = false;
      numeric = true;
    }
  }
  emit(document(base_inputs("report", p, w), results, certified), o, out);
  if (certified) return exit_ok;
  return numeric ? exit_numeric : exit_condition_failed;
}

// ---- parsing ---------------------------------------------------------------

void add_model_options(CLI::App* sub, Options& o) {
  sub->add_option("--alpha", o.alpha, "alpha >= 0")->required();
  sub->add_option("--gamma", o.gamma, "gamma >= 0")->required();
  sub->add_option("--delta", o.delta, "delta > 0")->capture_default_str();
  sub->add_option("--zeta", o.zeta, "order parameter zeta")->capture_default_str();
  sub->add_option("--weight", o.weight, "bernardi, komatu, hohlov, carlson_shaffer, two_param, ali_singh, uniform")
      ->capture_default_str();
  sub->add_option("--c", o.c, "weight parameter c");
  sub->add_option("--k", o.k, "weight parameter k");
  sub->add_option("--p", o.p, "weight parameter p");
  sub->add_option("--a", o.a, "weight parameter a");
  sub->add_option("--b", o.b, "weight parameter b");
  sub->add_option("--weight-json", o.weight_json, "weight as JSON text or a path to a JSON file");
  sub->add_option("--tol", o.tol, "tolerance override");
  sub->add_option("--output", o.output, "write the JSON document here instead of stdout");
}

void add_grid_options(CLI::App* sub, Options& o) {
  sub->add_option("--grid-radii", o.grid_radii, "number of radii")->capture_default_str();
  sub->add_option("--grid-angles", o.grid_angles, "number of angles")->capture_default_str();
  sub->add_option("--grid-rmax", o.grid_rmax, "largest radius")->capture_default_str();
  sub->add_option("--terms", o.terms, "truncation order of the member series");
  sub->add_option("--class-beta", o.class_beta, "beta of the source class (default: the sharp beta)");
  sub->add_option("--input", o.input, "JSON file with the series of (f/z)^delta as [re, im] pairs");
  sub->add_option("--sharp-radii", o.sharp_radii, "increasing radii for the sharpness probe");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Sharp beta, admissibility checks and disk verification for the generalized integral transform",
               "starlike"};
  app.require_subcommand(1, 1);

  auto* beta = app.add_subcommand("beta", "sharp beta for a weight and parameter set");
  add_model_options(beta, o);
  beta->add_option("--method", o.method, "auto, quadrature, series, 5F4 or closed")
      ->check(CLI::IsMember({"auto", "quadrature", "series", "5F4", "closed"}))
      ->capture_default_str();
  beta->add_option("--terms", o.terms, "terms of the termwise series");

  auto* check = app.add_subcommand("check", "admissibility and sufficiency conditions");
  add_model_options(check, o);
  check->add_option("--theorem", o.theorem, "T3_3, T4_1, T4_2, ops, N, limits or all")
      ->check(CLI::IsMember({"T3_3", "T4_1", "T4_2", "ops", "N", "limits", "all"}))
      ->capture_default_str();

  auto* transform = app.add_subcommand("transform", "apply the transform to a series");
  add_model_options(transform, o);
  transform->add_option("--input", o.input, "JSON file with the series of (f/z)^delta as [re, im] pairs");
  transform->add_option("--terms", o.terms, "truncation order of the extremal member");
  transform->add_option("--class-beta", o.class_beta, "beta of the extremal member (default: the sharp beta)");

  auto* verify = app.add_subcommand("verify", "grid verification of one quantity");
  add_model_options(verify, o);
  add_grid_options(verify, o);
  verify->add_option("--quantity", o.quantity, "starlike_margin, W_membership, third_order or sharpness")
      ->check(CLI::IsMember({"starlike_margin", "W_membership", "third_order", "sharpness"}))
      ->capture_default_str();
  verify->add_option("--phi-grid", o.phi_grid, "rotations tried for W_membership")->capture_default_str();
  verify->add_option("--csv", o.csv, "dump grid samples as CSV");

  auto* report = app.add_subcommand("report", "full pipeline for one weight and parameter set");
  add_model_options(report, o);
  report->add_option("--grid-radii", o.grid_radii, "number of radii")->capture_default_str();
  report->add_option("--grid-angles", o.grid_angles, "number of angles")->capture_default_str();
  report->add_option("--grid-rmax", o.grid_rmax, "largest radius")->capture_default_str();
  report->add_option("--sharp-radii", o.sharp_radii, "increasing radii for the sharpness probe");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (beta->parsed()) return cmd_beta(o, out);
    if (check->parsed()) return cmd_check(o, out);
    if (transform->parsed()) return cmd_transform(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    return cmd_report(o, out);
  } catch (const Error& e) {
    err << "starlike: " << to_string(e.code()) << ": " << e.what() << '\n';
    return exit_for(e.code());
  } catch (const json::exception& e) {
    err << "starlike: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    err << "starlike: " << e.what() << '\n';
    return exit_numeric;
  }
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace starlike::cli
