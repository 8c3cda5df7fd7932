// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "starlike/beta.hpp"
#include "starlike/conditions.hpp"
#include "starlike/kernels.hpp"
#include "starlike/quadrature.hpp"
#include "starlike/transform.hpp"
#include "starlike/verifier.hpp"
#include "starlike/weights.hpp"

using namespace starlike;
using testing_support::from_mu_nu;
using testing_support::random_unit_series;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Outcome c1_bernardi_beta() {
  const auto p = ParameterSet::make(1, 0, 1, 0);
  const double ln2 = std::numbers::ln2;
  const double want = (1 - 2 * ln2) / (2 - 2 * ln2);
  const auto t0 = Clock::now();
  const double beta = solve_beta(Weight::bernardi(0), p).beta;
  const double dt = seconds_since(t0);
  const auto cf = closed_form_beta(Weight::bernardi(0), p);
  const double cf_err = cf ? std::abs(cf->beta - want) : INFINITY;
  const double err = std::abs(beta - want);
  return {err <= 1e-6 && cf_err <= 1e-12 && dt < 1.0,
          fmt("beta=%.12f |err|=%.2e closed-form |err|=%.2e time=%.3fs", beta, err, cf_err, dt)};
}

Outcome c2_uniform_beta() {
  const auto p = from_mu_nu(1, 1, 1, 0);
  const double pi2 = std::numbers::pi * std::numbers::pi;
  const double want_ratio = 1 - pi2 / 6;
  const double want_beta = (pi2 - 6) / (pi2 - 12);
  const auto q = solve_beta(Weight::uniform(), p);
  const auto s = solve_beta_series(Weight::uniform(), p);
  const auto a = closed_form_beta(Weight::uniform(), p);
  if (!a) return {false, "no analytic value"};
  const double pair = std::max({std::abs(q.beta - s.beta), std::abs(q.beta - a->beta), std::abs(s.beta - a->beta)});
  const double er = std::abs(q.ratio - want_ratio), eb = std::abs(q.beta - want_beta);
  return {er <= 1e-6 && eb <= 1e-6 && pair <= 1e-6,
          fmt("ratio |err|=%.2e beta=%.9f |err|=%.2e pairwise=%.2e", er, q.beta, eb, pair)};
}

Outcome c3_5F4() {
  const auto p = from_mu_nu(1, 1, 1, 0);
  double worst = 0;
  for (auto [b, c] : {std::pair{1.0, 2.0}, {1.0, 3.0}}) {
    const double d = std::abs(solve_beta_5F4(b, c, p).beta - solve_beta(Weight::carlson_shaffer(b, c), p).beta);
    worst = std::max(worst, d);
  }
  return {worst <= 1e-6, fmt("max |5F4 - quadrature|=%.2e", worst)};
}

Outcome c4_kernels() {
  double worst = 0;
  bool origin = true;
  for (const auto& p : {from_mu_nu(1, 1, 1, 0), from_mu_nu(1, 1, 1, 0.5), from_mu_nu(2, 3, 1.5, 0.25)}) {
    for (double t : {0.1, 0.25, 0.5, 0.75, 0.9}) {
      worst = std::max(worst, std::abs(g_series_eval(p, t) - g_integral_eval(p, t)));
    }
    origin = origin && g_series_eval(p, 0.0) == 1.0;
  }
  return {worst <= 1e-8 && origin, fmt("max |series - integral|=%.2e g(0)==1: %s", worst, origin ? "yes" : "no")};
}

Outcome c5_normalization() {
  std::vector<Weight> ws;
  for (double c : {-0.5, 0.0, 1.0, 3.0}) ws.push_back(Weight::bernardi(c));
  for (auto [k, p] : {std::pair{0.0, 1.0}, {0.0, 2.0}, {1.0, 2.0}}) ws.push_back(Weight::komatu(k, p));
  for (double k : {0.0, 0.5, 0.9}) ws.push_back(Weight::ali_singh(k));
  ws.push_back(Weight::hohlov(1, 1, 3));
  ws.push_back(Weight::hohlov(0.5, 1, 2.5));
  ws.push_back(Weight::carlson_shaffer(1, 2));
  ws.push_back(Weight::two_param(0.5, 1.5));
  ws.push_back(Weight::two_param(1, 1));
  ws.push_back(Weight::uniform());
  double worst = 0;
  for (const auto& w : ws) {
    const double m =
        integrate(Integrand{[&](double t, double omt) { return w.value(t, omt); }, w.hint()}, 0.0, 1.0, 1e-13).value;
    worst = std::max(worst, std::abs(m - 1.0));
  }
  return {worst <= 1e-9, fmt("%zu weights, max |mass - 1|=%.2e", ws.size(), worst)};
}

Outcome c6_series() {
  double worst = 0;
  bool exact = true;
  const auto one = PowerSeries::geometric(64);
  for (std::uint32_t seed = 0; seed < 100; ++seed) {
    const auto s = random_unit_series(seed, 64);
    const auto t = random_unit_series(seed + 500, 64);
    worst = std::max({worst, max_coeff_distance(series_exp(series_log(s)), s),
                      max_coeff_distance(series_pow(series_pow(s, 0.37), 1 / 0.37), s),
                      max_coeff_distance(series_log(series_exp(s - PowerSeries::constant(1.0, 64))),
                                         s - PowerSeries::constant(1.0, 64))});
    exact = exact && max_coeff_distance(hadamard(s, one), s) == 0.0 &&
            max_coeff_distance(hadamard(s, t), hadamard(t, s)) == 0.0;
  }
  return {worst <= 1e-12 && exact, fmt("max round-trip error=%.2e Hadamard exact: %s", worst, exact ? "yes" : "no")};
}

Outcome c7_H_identity() {
  double worst = 0;
  for (const auto& p : {from_mu_nu(1, 1, 1, 0), from_mu_nu(2, 3, 1.5, 0.25), from_mu_nu(0.5, 4, 0.8, 0.3)}) {
    for (std::uint32_t seed = 0; seed < 20; ++seed) {
      const auto P = random_unit_series(seed, 32);
      const auto H = H_series(P, p);
      for (double r : {0.0, 0.3, 0.6, 0.9}) {
        for (int k = 0; k < 16; ++k) {
          const cplx z = std::polar(r, 2 * std::numbers::pi * k / 16);
          worst = std::max(worst, std::abs(eval(H, z) - H_definition(P, p, z)));
        }
      }
    }
  }
  return {worst <= 1e-9, fmt("max |definition - coefficient form|=%.2e", worst)};
}

Outcome c8_end_to_end() {
  const auto p = from_mu_nu(1, 1, 1, 0);
  const auto w = Weight::bernardi(0);
  const double beta = solve_beta(w, p).beta;
  // r^N below 1e-11 at r = 0.999
  const auto G = G_series(apply_transform(make_member({1, -1, beta}, p, 24988), w));
  const auto m = starlike_margin(G, p.xi, default_disk_grid(0.99));
  const auto s = sharpness_probe(G, p.xi, {0.9, 0.99, 0.999});
  const auto& R = s.ray_values;
  const bool decreasing = R[0] > R[1] && R[1] > R[2];
  return {m.min_value >= -1e-3 && decreasing && R[2] < 0.01,
          fmt("margin=%.4g R=(%.3g, %.3g, %.3g)", m.min_value, R[0], R[1], R[2])};
}

Outcome c9_tables() {
  const auto pg = from_mu_nu(1, 1, 1, 0);
  const auto p0 = ParameterSet::make(2, 0, 1, 0);
  struct Case {
    const char* kind;
    std::map<std::string, double> params;
    ParameterSet p;
    bool expect;
  };
  const std::vector<Case> cases{
      {"bernardi", {{"c", 2}}, pg, true},
      {"bernardi", {{"c", 4}}, pg, false},
      {"komatu", {{"k", 0}, {"p", 2}}, p0, true},
      {"komatu", {{"k", 0.5}, {"p", 2}}, p0, false},
      {"hohlov", {{"a", 1}, {"b", 1}, {"c", 3}}, p0, true},
      {"ali_singh", {{"k", 0.5}}, p0, false},
      {"ali_singh", {{"k", 0.8}}, p0, true},
  };
  int ok = 0;
  std::string bad;
  for (const auto& c : cases) {
    const auto r = check_operator_bounds(c.kind, c.params, c.p);
    if (r.passed == c.expect) {
      ++ok;
    } else {
      bad += std::string(" ") + c.kind;
    }
  }
  // c = 4 against the bound 3
  const double m4 = check_operator_bounds("bernardi", {{"c", 4}}, pg).margin;
  const bool pass = ok == static_cast<int>(cases.size()) && m4 == -1.0;
  return {pass, fmt("%d/%zu rows match, Bernardi c=4 margin=%g%s", ok, cases.size(), m4, bad.c_str())};
}

Outcome c10_monotone(Clock::time_point suite_start) {
  const auto p = from_mu_nu(1, 1, 1, 0);
  bool all = true;
  double worst = INFINITY;
  for (double c : {0.0, 1.0, 2.0, 3.0}) {
    const auto r = check_monotone_T33(Weight::bernardi(c), p, 2001);
    all = all && r.passed;
    worst = std::min(worst, r.margin);
  }
  const double dt = seconds_since(suite_start);
  return {all && dt < 60.0, fmt("min margin=%.3g acceptance runtime=%.2fs", worst, dt)};
}

}  // namespace

int main() {
  const auto start = Clock::now();
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"1 sharp beta, Bernardi c=0", c1_bernardi_beta},
      {"2 sharp beta, uniform weight", c2_uniform_beta},
      {"3 5F4 corollary", c3_5F4},
      {"4 kernel cross-oracle", c4_kernels},
      {"5 normalization sweep", c5_normalization},
      {"6 series engine", c6_series},
      {"7 H identity", c7_H_identity},
      {"8 end-to-end starlikeness and sharpness", c8_end_to_end},
      {"9 operator tables", c9_tables},
      {"10 monotonicity sweep", [start] { return c10_monotone(start); }},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
