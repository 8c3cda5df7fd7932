#include "starlike/conditions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "starlike/error.hpp"
#include "starlike/kernels.hpp"

namespace starlike {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kNodeFloor = 1e-30;
// Nodes closer to 1 than this carry M(t) ~ Pi(t) below rounding; they are
// also too close together for the cumulative tables to separate.
constexpr double kComplementFloor = 1e-12;

const char* branch_name(const ParameterSet& p) {
  return p.gamma_positive() ? "gamma_positive" : "gamma_zero";
}

double get(const std::map<std::string, double>& m, const char* key, double fallback) {
  const auto it = m.find(key);
  return it == m.end() ? fallback : it->second;
}

// Tables are read literally: x <= bound, x < bound, and so on.
Constraint le(std::string name, double x, double bound, bool hypothesis = false) {
  return {std::move(name), bound - x, x <= bound, hypothesis};
}
Constraint lt(std::string name, double x, double bound, bool hypothesis = false) {
  return {std::move(name), bound - x, x < bound, hypothesis};
}

// alpha in (0, delta/3] or [delta, inf).
Constraint alpha_window(const ParameterSet& p, bool hypothesis) {
  const double a = p.alpha, d = p.delta;
  const bool ok = (a > 0.0 && a <= d / 3.0) || a >= d;
  const double slack = std::max(std::min(a, d / 3.0 - a), a - d);
  return {"alpha in (0, delta/3] or [delta, inf)", slack, ok, hypothesis};
}

void add_general_hypotheses(std::vector<Constraint>& cs, const ParameterSet& p) {
  cs.push_back(le("delta >= 1", 1.0, p.delta, true));
  cs.push_back(le("xi >= 0", 0.0, p.xi, true));
  cs.push_back(le("xi <= 1/2", p.xi, 0.5, true));
}

void add_gamma_positive_hypotheses(std::vector<Constraint>& cs, const ParameterSet& p) {
  cs.push_back(le("delta <= mu", p.delta, p.mu, true));
  cs.push_back(le("delta <= nu", p.delta, p.nu, true));
}

ConditionReport finish(ConditionReport r) {
  bool ok = true;
  double margin = std::numeric_limits<double>::infinity();
  for (const auto& c : r.constraints) {
    ok = ok && c.satisfied;
    if (!c.hypothesis) margin = std::min(margin, c.slack);
  }
  r.passed = ok;
  r.margin = margin;
  return r;
}

}  // namespace

std::vector<double> chebyshev_grid(std::size_t n, double eps) {
  std::vector<double> t(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double c = std::cos(std::numbers::pi * (static_cast<double>(j) + 0.5) / static_cast<double>(n));
    t[j] = eps + (1.0 - 2.0 * eps) * 0.5 * (1.0 - c);
  }
  return t;
}

std::vector<double> monotone_function_samples(const Weight& w, const ParameterSet& p,
                                              const std::vector<double>& grid) {
  const bool pos = p.gamma_positive();
  if (!pos && !(p.alpha > 0.0)) {
    throw Error(ErrorCode::precondition_violated, "the gamma = 0 condition needs alpha > 0");
  }
  const auto tab = build_cumulative_tables(w, p, grid);
  const double lead = pos ? p.delta / p.mu - 1.0 : p.delta / p.alpha - 1.0;
  const double expo = monotone_exponent(p);
  std::vector<double> k(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double t = tab.grid[j];
    k[j] = std::pow(t, lead) * tab.pi_cap[j] / ((1.0 + t) * std::pow(1.0 - t, expo));
  }
  return k;
}

ConditionReport check_monotone_T33(const Weight& w, const ParameterSet& p, std::size_t grid_size) {
  if (grid_size < 2) throw Error(ErrorCode::invalid_argument, "grid_size must be >= 2");
  ConditionReport r;
  r.theorem_id = "T3_3_monotone";
  r.branch = branch_name(p);
  r.tolerance = 1e-9;
  const auto grid = chebyshev_grid(grid_size);
  const auto k = monotone_function_samples(w, p, grid);
  double scale = 0.0;
  for (double v : k) scale = std::max(scale, std::abs(v));
  double worst = -std::numeric_limits<double>::infinity();
  std::size_t at = 0;
  for (std::size_t j = 0; j + 1 < k.size(); ++j) {
    const double d = k[j + 1] - k[j];
    if (d > worst) {
      worst = d;
      at = j;
    }
  }
  r.margin = scale > 0.0 ? -worst / scale : -worst;
  r.passed = r.margin >= -r.tolerance;
  r.witness_t = grid[at];
  r.witness_value = k[at];
  r.diagnostics = {{"grid_size", static_cast<double>(grid_size)},
                   {"k_first", k.front()},
                   {"k_last", k.back()},
                   {"scale", scale},
                   {"exponent", monotone_exponent(p)}};
  return r;
}

ConditionReport check_differential_bound(const Weight& w, const ParameterSet& p) {
  ConditionReport r;
  r.branch = branch_name(p);
  r.tolerance = 1e-12;
  double bound = 0.0;
  if (p.gamma_positive()) {
    r.theorem_id = "T4_1_gamma_pos";
    if (!(p.delta >= 1.0 && p.delta <= std::min(p.mu, p.nu))) {
      std::ostringstream msg;
      msg << "T4_1 needs 1 <= delta <= min(mu, nu) (delta = " << p.delta << ", mu = " << p.mu
          << ", nu = " << p.nu << ")";
      throw Error(ErrorCode::precondition_violated, msg.str());
    }
    bound = 5.0 - p.delta / p.mu - p.delta / p.nu;
  } else {
    r.theorem_id = "T4_2_gamma_zero";
    if (!alpha_window(p, true).satisfied) {
      std::ostringstream msg;
      msg << "T4_2 needs alpha in (0, delta/3] or [delta, inf) (alpha = " << p.alpha
          << ", delta = " << p.delta << ")";
      throw Error(ErrorCode::precondition_violated, msg.str());
    }
    if (p.xi != 0.0) {
      r.covered = false;
      r.passed = false;
      r.margin = kNaN;
      r.notes.push_back("NotCovered: the gamma = 0 differential bound is stated for xi = 0 only");
      return r;
    }
    bound = 3.0 - p.delta / p.alpha;
  }
  constexpr int kGrid = 2001;
  double sup = -std::numeric_limits<double>::infinity();
  for (int j = 1; j <= kGrid; ++j) {
    const double t = static_cast<double>(j) / (kGrid + 1);
    const double v = w.log_derivative(t);
    if (v > sup) {
      sup = v;
      r.witness_t = t;
    }
  }
  r.witness_value = sup;
  r.margin = bound - sup;
  r.passed = r.margin >= -r.tolerance;
  r.diagnostics = {{"bound", bound}, {"sup", sup}};
  return r;
}

ConditionReport check_operator_bounds(std::string_view kind,
                                      const std::map<std::string, double>& params,
                                      const ParameterSet& p) {
  const WeightKind wk = weight_kind_from_string(kind);
  if (wk == WeightKind::custom) {
    throw Error(ErrorCode::unknown_operator, "custom weights have no parameter table");
  }
  ConditionReport r;
  r.theorem_id = "op_bound:" + std::string(to_string(wk));
  r.branch = branch_name(p);
  auto& cs = r.constraints;
  add_general_hypotheses(cs, p);
  const bool pos = p.gamma_positive();
  const double B = pos ? 5.0 - p.delta / p.mu - p.delta / p.nu : kNaN;
  if (pos) add_gamma_positive_hypotheses(cs, p);

  switch (wk) {
    case WeightKind::uniform:
    case WeightKind::bernardi: {
      const double c = wk == WeightKind::uniform ? 0.0 : get(params, "c", 0.0);
      cs.push_back(lt("c > -1", -1.0, c, true));
      if (pos) {
        cs.push_back(le("c <= 5 - delta/mu - delta/nu", c, B));
      } else {
        cs.push_back(alpha_window(p, true));
        cs.push_back({"xi = 0", -std::abs(p.xi), p.xi == 0.0, true});
        cs.push_back(le("c <= 3 - delta/alpha", c, 3.0 - p.delta / p.alpha));
      }
      break;
    }
    case WeightKind::komatu: {
      const double k = get(params, "k", 0.0), pp = get(params, "p", 1.0);
      cs.push_back(lt("k > -1", -1.0, k));
      if (pos) {
        cs.push_back(le("p >= 1", 1.0, pp));
        cs.push_back(le("k <= 5 - delta/mu - delta/nu", k, B));
      } else {
        cs.push_back(le("delta <= alpha", p.delta, p.alpha, true));
        cs.push_back(le("p >= 2", 2.0, pp));
        cs.push_back(le("k <= 0", k, 0.0));
      }
      break;
    }
    case WeightKind::hohlov:
    case WeightKind::carlson_shaffer: {
      const bool cs_kind = wk == WeightKind::carlson_shaffer;
      const double a = cs_kind ? 1.0 : get(params, "a", 1.0);
      const double b = get(params, "b", 1.0), c = get(params, "c", 2.0);
      if (!cs_kind) cs.push_back(lt("a > 0", 0.0, a, true));
      cs.push_back(lt("c > 0", 0.0, c, true));
      cs.push_back(lt("b > 0", 0.0, b));
      // Carlson-Shaffer is Hohlov with a = 1, so c - a - b >= m reads c - b >= m + 1.
      const std::string gap = cs_kind ? "c - b" : "c - a - b";
      const double shift = cs_kind ? 1.0 : 0.0;
      if (pos) {
        cs.push_back(le(gap + " >= " + std::to_string(static_cast<int>(shift)), shift, c - a - b + shift));
        cs.push_back(le("b <= 6 - delta/mu - delta/nu", b, B + 1.0));
      } else {
        cs.push_back(le("delta <= alpha", p.delta, p.alpha, true));
        cs.push_back(le(gap + " >= " + std::to_string(static_cast<int>(1.0 + shift)), 1.0 + shift,
                        c - a - b + shift));
        cs.push_back(le("b <= 1", b, 1.0));
      }
      break;
    }
    case WeightKind::two_param: {
      // Symmetric in (a, b): the table is written for b <= a.
      const double a = std::max(get(params, "a", 0.0), get(params, "b", 0.0));
      const double b = std::min(get(params, "a", 0.0), get(params, "b", 0.0));
      cs.push_back(lt("b > -1", -1.0, b));
      const bool equal = std::abs(a - b) < 1e-9;
      if (pos) {
        if (equal) {
          cs.push_back(le("a <= 5 - delta/mu - delta/nu", a, B));
        } else {
          cs.push_back(le("b >= 0", 0.0, b));
          cs.push_back(le("b <= 5 - delta/mu - delta/nu", b, B));
        }
      } else {
        cs.push_back(le("alpha >= delta", p.delta, p.alpha, true));
        if (equal) {
          cs.push_back(le("a <= 0", a, 0.0));
        } else {
          cs.push_back(lt("b < a", b, a));
        }
      }
      r.notes.push_back(equal ? "branch b = a" : "branch b < a (parameters ordered)");
      break;
    }
    case WeightKind::ali_singh: {
      const double k = get(params, "k", 0.0);
      cs.push_back(le("k >= 0", 0.0, k));
      if (!pos) {
        cs.push_back(le("delta <= alpha", p.delta, p.alpha, true));
        const bool ok = (k >= 2.0 / 3.0 && k <= 1.0) || k >= 3.0;
        const double slack = std::max(std::min(k - 2.0 / 3.0, 1.0 - k), k - 3.0);
        cs.push_back({"k in [2/3, 1] or [3, inf)", slack, ok, false});
      }
      break;
    }
    case WeightKind::custom: break;
  }
  return finish(std::move(r));
}

cplx h_xi_over_w(cplx w, double xi, cplx epsilon) {
  const cplx c = (epsilon + 2.0 * xi - 1.0) / (2.0 * (1.0 - xi));
  const cplx d = 1.0 - w;
  return (1.0 + c * w) / (d * d);
}

namespace {

double n_lead_exponent(const ParameterSet& p) {
  if (p.gamma_positive()) return p.delta / p.mu - 1.0;
  if (!(p.alpha > 0.0)) {
    throw Error(ErrorCode::precondition_violated, "the N functional needs alpha > 0 when gamma = 0");
  }
  return p.delta / p.alpha - 1.0;
}

}  // namespace

double eval_N_functional(const Weight& w, const ParameterSet& p, cplx z, cplx epsilon, double tol) {
  if (!(std::abs(z) < 1.0)) throw Error(ErrorCode::invalid_argument, "N functional needs |z| < 1");
  const double lead = n_lead_exponent(p);
  const double xi = p.xi;
  auto f = [&](double t) {
    // Below 1e-30 the factor t^{lead} Pi(t) dt is negligible.
    if (t < kNodeFloor) return 0.0;
    const double m = std::pow(t, lead) * pi_cap(w, p, t, tol / 10.0);
    return m * (h_xi_over_w(t * z, xi, epsilon).real() - g_kernel(xi, t));
  };
  return integrate(f, 0.0, 1.0, tol).value;
}

NFunctional::NFunctional(const Weight& w, const ParameterSet& p, int level) : xi_(p.xi) {
  const double lead = n_lead_exponent(p);
  const FixedRule rule = tanh_sinh_rule(level, kNodeFloor);
  std::vector<double> weights;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    if (rule.complements[i] < kComplementFloor) continue;
    t_.push_back(rule.nodes[i]);
    weights.push_back(rule.weights[i]);
  }
  const auto tab = build_cumulative_tables(w, p, t_);
  wm_.resize(t_.size());
  base_.resize(t_.size());
  for (std::size_t i = 0; i < t_.size(); ++i) {
    wm_[i] = weights[i] * std::pow(t_[i], lead) * tab.pi_cap[i];
    base_[i] = g_kernel(xi_, t_[i]);
  }
}

double NFunctional::operator()(cplx z, cplx epsilon) const {
  const cplx c = (epsilon + 2.0 * xi_ - 1.0) / (2.0 * (1.0 - xi_));
  double sum = 0.0;
  for (std::size_t i = 0; i < t_.size(); ++i) {
    const cplx w = t_[i] * z;
    const cplx d = 1.0 - w;
    sum += wm_[i] * (((1.0 + c * w) / (d * d)).real() - base_[i]);
  }
  return sum;
}

std::vector<double> chebyshev_radii(std::size_t n, double rmax) {
  std::vector<double> r(n);
  for (std::size_t j = 0; j < n; ++j) {
    r[j] = rmax * std::sin(std::numbers::pi * (static_cast<double>(j) + 1.0) / (2.0 * static_cast<double>(n)));
  }
  return r;
}

ConditionReport minimize_N(const Weight& w, const ParameterSet& p, const NGrid& grid) {
  if (grid.radii.empty() || grid.angles == 0 || grid.epsilons == 0) {
    throw Error(ErrorCode::invalid_argument, "minimize_N needs nonempty grids");
  }
  for (double r : grid.radii) {
    if (!(r >= 0.0 && r < 1.0)) throw Error(ErrorCode::invalid_argument, "radii must lie in [0, 1)");
  }
  const NFunctional N(w, p);
  ConditionReport rep;
  rep.theorem_id = "N_functional";
  rep.branch = branch_name(p);
  rep.tolerance = 1e-6;
  double best = std::numeric_limits<double>::infinity();
  for (double r : grid.radii) {
    if (r == 0.0) continue;
    for (std::size_t a = 0; a < grid.angles; ++a) {
      const cplx z = std::polar(r, 2.0 * std::numbers::pi * static_cast<double>(a) / static_cast<double>(grid.angles));
      for (std::size_t e = 0; e < grid.epsilons; ++e) {
        const cplx eps = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(e) /
                                             static_cast<double>(grid.epsilons));
        const double v = N(z, eps);
        if (v < best) {
          best = v;
          rep.witness_z = z;
          rep.witness_epsilon = eps;
        }
      }
    }
  }
  rep.margin = best;
  rep.witness_value = best;
  rep.passed = best >= -rep.tolerance;
  rep.diagnostics = {{"radii", static_cast<double>(grid.radii.size())},
                     {"angles", static_cast<double>(grid.angles)},
                     {"epsilons", static_cast<double>(grid.epsilons)},
                     {"rule_nodes", static_cast<double>(N.nodes())}};
  return rep;
}

}  // namespace starlike
