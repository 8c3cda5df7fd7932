#include "starlike/weights.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "starlike/error.hpp"
#include "starlike/special_functions.hpp"

namespace starlike {

namespace {

[[noreturn]] void out_of_range(const std::string& what) {
  throw Error(ErrorCode::param_out_of_range, what);
}

double get(const std::map<std::string, double>& m, const char* key, double fallback) {
  const auto it = m.find(key);
  return it == m.end() ? fallback : it->second;
}

// log(1/t) without losing digits next to t = 1.
double log_inv(double t, double omt) {
  return omt < 0.5 ? -std::log1p(-omt) : -std::log(t);
}

// coef * x^e, zero when coef is zero (so 0 * inf never appears).
double term(double coef, double x, double e) { return coef == 0.0 ? 0.0 : coef * std::pow(x, e); }

}  // namespace

std::string_view to_string(WeightKind kind) noexcept {
  switch (kind) {
    case WeightKind::bernardi: return "bernardi";
    case WeightKind::komatu: return "komatu";
    case WeightKind::hohlov: return "hohlov";
    case WeightKind::carlson_shaffer: return "carlson_shaffer";
    case WeightKind::two_param: return "two_param";
    case WeightKind::ali_singh: return "ali_singh";
    case WeightKind::uniform: return "uniform";
    case WeightKind::custom: return "custom";
  }
  return "custom";
}

WeightKind weight_kind_from_string(std::string_view name) {
  for (auto k : {WeightKind::bernardi, WeightKind::komatu, WeightKind::hohlov,
                 WeightKind::carlson_shaffer, WeightKind::two_param, WeightKind::ali_singh,
                 WeightKind::uniform, WeightKind::custom}) {
    if (to_string(k) == name) return k;
  }
  throw Error(ErrorCode::unknown_operator, "unknown weight kind '" + std::string(name) + "'");
}

double Weight::param(const std::string& name) const {
  const auto it = params_.find(name);
  if (it == params_.end()) {
    throw Error(ErrorCode::invalid_argument,
                std::string(to_string(kind_)) + " weight has no parameter '" + name + "'");
  }
  return it->second;
}

Weight Weight::bernardi(double c) {
  if (!(c > -1.0)) out_of_range("bernardi: c > -1 required");
  Weight w;
  w.kind_ = WeightKind::bernardi;
  w.params_ = {{"c", c}};
  w.c_ = c;
  w.K_ = 1.0 + c;
  w.hint_ = c < 0.0 ? Singularity::left_power : Singularity::none;
  return w;
}

Weight Weight::komatu(double k, double p) {
  if (!(k > -1.0)) out_of_range("komatu: k > -1 required");
  if (!(p >= 1.0)) out_of_range("komatu: p >= 1 required");
  Weight w;
  w.kind_ = WeightKind::komatu;
  w.params_ = {{"k", k}, {"p", p}};
  w.k_ = k;
  w.p_ = p;
  w.K_ = std::exp(p * std::log1p(k) - log_gamma(p));
  w.hint_ = Singularity::left_log;
  return w;
}

Weight Weight::hohlov(double a, double b, double c) {
  if (!(a > 0.0)) out_of_range("hohlov: a > 0 required");
  if (!(b > 0.0)) out_of_range("hohlov: b > 0 required");
  if (!(c > 0.0)) out_of_range("hohlov: c > 0 required");
  if (!(c - a - b > -1.0)) out_of_range("hohlov: c - a - b > -1 required for integrability");
  Weight w;
  w.kind_ = WeightKind::hohlov;
  w.params_ = {{"a", a}, {"b", b}, {"c", c}};
  w.a_ = a;
  w.b_ = b;
  w.c_ = c;
  w.K_ = gamma_fn(c) * reciprocal_gamma(a) * reciprocal_gamma(b) * reciprocal_gamma(c - a - b + 1.0);
  w.hint_ = Singularity::both;
  if (a > 1.0) {
    // The 2F1 factor has mixed-sign terms; check positivity on a grid.
    for (int i = 1; i <= 1001; ++i) {
      const double t = static_cast<double>(i) / 1002.0;
      if (w.value(t) < 0.0) {
        std::ostringstream msg;
        msg << "hohlov weight is negative at t = " << t << " (a > 1)";
        w.warnings_.push_back(msg.str());
        break;
      }
    }
  }
  return w;
}

Weight Weight::carlson_shaffer(double b, double c) {
  if (!(b > 0.0)) out_of_range("carlson_shaffer: b > 0 required");
  if (!(c > b)) out_of_range("carlson_shaffer: c > b required");
  Weight w;
  w.kind_ = WeightKind::carlson_shaffer;
  w.params_ = {{"b", b}, {"c", c}};
  w.b_ = b;
  w.c_ = c;
  w.K_ = std::exp(log_gamma(c) - log_gamma(b) - log_gamma(c - b));
  w.hint_ = Singularity::both;
  return w;
}

Weight Weight::two_param(double a, double b) {
  if (!(a > -1.0)) out_of_range("two_param: a > -1 required");
  if (!(b > -1.0)) out_of_range("two_param: b > -1 required");
  Weight w;
  w.kind_ = WeightKind::two_param;
  w.params_ = {{"a", a}, {"b", b}};
  w.a_ = a;
  w.b_ = b;
  w.K_ = (a + 1.0) * (b + 1.0);
  w.hint_ = std::min(a, b) < 0.0 ? Singularity::left_power : Singularity::left_log;
  return w;
}

Weight Weight::ali_singh(double k) {
  if (!(k >= 0.0 && k < 1.0)) out_of_range("ali_singh: 0 <= k < 1 required");
  Weight w;
  w.kind_ = WeightKind::ali_singh;
  w.params_ = {{"k", k}};
  w.k_ = k;
  w.K_ = 0.5 * (1.0 - k) * (3.0 - k);
  w.hint_ = k > 0.0 ? Singularity::left_power : Singularity::none;
  return w;
}

Weight Weight::uniform() {
  Weight w;
  w.kind_ = WeightKind::uniform;
  return w;
}

Weight Weight::custom(CustomWeight spec) {
  if (!spec.value) throw Error(ErrorCode::invalid_argument, "custom weight needs a value function");
  Weight w;
  w.kind_ = WeightKind::custom;
  w.hint_ = spec.hint;
  w.custom_ = std::make_shared<const CustomWeight>(std::move(spec));
  const auto mass = integrate(Integrand{w.custom_->value, w.hint_}, 0.0, 1.0, 1e-13);
  if (!(mass.value > 0.0)) {
    throw Error(ErrorCode::param_out_of_range, "custom weight has nonpositive mass");
  }
  w.K_ = 1.0 / mass.value;
  return w;
}

double Weight::value(double t, double omt) const {
  switch (kind_) {
    case WeightKind::uniform: return 1.0;
    case WeightKind::bernardi: return K_ * std::pow(t, c_);
    case WeightKind::komatu:
      return K_ * std::pow(t, k_) * std::pow(log_inv(t, omt), p_ - 1.0);
    case WeightKind::hohlov: {
      const double a = a_, b = b_, c = c_;
      const double e = c - a - b;
      return K_ * std::pow(t, b - 1.0) * std::pow(omt, e) * hyp2f1(c - a, 1.0 - a, e + 1.0, omt, t);
    }
    case WeightKind::carlson_shaffer: {
      const double b = b_, c = c_;
      return K_ * std::pow(t, b - 1.0) * std::pow(omt, c - b - 1.0);
    }
    case WeightKind::two_param: {
      const double a = a_, b = b_;
      const double L = log_inv(t, omt);
      if (std::abs(b - a) < 1e-9) return K_ * std::pow(t, a) * L;
      // t^a (1 - t^{b-a}) / (b - a) without cancellation for b close to a.
      return K_ * std::pow(t, a) * (-std::expm1(-(b - a) * L)) / (b - a);
    }
    case WeightKind::ali_singh:
      return K_ * std::pow(t, -k_) * omt * (1.0 + t);
    case WeightKind::custom: return K_ * custom_->value(t, omt);
  }
  return 0.0;
}

double Weight::derivative(double t) const {
  const double omt = 1.0 - t;
  switch (kind_) {
    case WeightKind::uniform: return 0.0;
    case WeightKind::bernardi: {
      const double c = c_;
      return term(K_ * c, t, c - 1.0);
    }
    case WeightKind::komatu: {
      const double k = k_, p = p_;
      const double L = log_inv(t, omt);
      return K_ * std::pow(t, k - 1.0) * (term(k, L, p - 1.0) - term(p - 1.0, L, p - 2.0));
    }
    case WeightKind::hohlov: {
      const double a = a_, b = b_, c = c_;
      const double e = c - a - b;
      const double A = c - a, B = 1.0 - a, C = e + 1.0;
      const double om = hyp2f1(A, B, C, omt, t);
      const double om1 = A * B / C * hyp2f1(A + 1.0, B + 1.0, C + 1.0, omt, t);
      return K_ * std::pow(t, b - 2.0) * std::pow(omt, e - 1.0) *
             (((b - 1.0) * omt - e * t) * om - t * omt * om1);
    }
    case WeightKind::carlson_shaffer: {
      const double b = b_, c = c_;
      return value(t, omt) * ((b - 1.0) / t - (c - b - 1.0) / omt);
    }
    case WeightKind::two_param: {
      const double a = a_, b = b_;
      if (std::abs(b - a) < 1e-9) {
        return K_ * std::pow(t, a - 1.0) * (a * log_inv(t, omt) - 1.0);
      }
      return K_ * (term(a, t, a - 1.0) - term(b, t, b - 1.0)) / (b - a);
    }
    case WeightKind::ali_singh: {
      const double k = k_;
      return K_ * std::pow(t, -k - 1.0) * (-k - (2.0 - k) * t * t);
    }
    case WeightKind::custom:
      if (!custom_->derivative) {
        throw Error(ErrorCode::precondition_violated, "custom weight has no derivative");
      }
      return K_ * custom_->derivative(t);
  }
  return 0.0;
}

double Weight::second_derivative(double t) const {
  const double omt = 1.0 - t;
  switch (kind_) {
    case WeightKind::uniform: return 0.0;
    case WeightKind::bernardi: {
      const double c = c_;
      return term(K_ * c * (c - 1.0), t, c - 2.0);
    }
    case WeightKind::komatu: {
      const double k = k_, p = p_;
      const double L = log_inv(t, omt);
      return K_ * std::pow(t, k - 2.0) *
             (term(k * (k - 1.0), L, p - 1.0) - term((p - 1.0) * (2.0 * k - 1.0), L, p - 2.0) +
              term((p - 1.0) * (p - 2.0), L, p - 3.0));
    }
    case WeightKind::hohlov: {
      const double a = a_, b = b_, c = c_;
      const double e = c - a - b;
      const double A = c - a, B = 1.0 - a, C = e + 1.0;
      const double om = hyp2f1(A, B, C, omt, t);
      const double om1 = A * B / C * hyp2f1(A + 1.0, B + 1.0, C + 1.0, omt, t);
      const double om2 = A * (A + 1.0) * B * (B + 1.0) / (C * (C + 1.0)) *
                         hyp2f1(A + 2.0, B + 2.0, C + 2.0, omt, t);
      // lambda = K P(t) omega(1 - t) with P = t^{b-1} (1-t)^e.
      const double P = std::pow(t, b - 1.0) * std::pow(omt, e);
      const double r = (b - 1.0) / t - e / omt;
      const double P1 = P * r;
      const double P2 = P * (r * r - (b - 1.0) / (t * t) - e / (omt * omt));
      return K_ * (P2 * om - 2.0 * P1 * om1 + P * om2);
    }
    case WeightKind::carlson_shaffer: {
      const double b = b_, c = c_;
      const double e = c - b - 1.0;
      const double r = (b - 1.0) / t - e / omt;
      return value(t, omt) * (r * r - (b - 1.0) / (t * t) - e / (omt * omt));
    }
    case WeightKind::two_param: {
      const double a = a_, b = b_;
      if (std::abs(b - a) < 1e-9) {
        return K_ * std::pow(t, a - 2.0) * (a * (a - 1.0) * log_inv(t, omt) - (2.0 * a - 1.0));
      }
      return K_ * (term(a * (a - 1.0), t, a - 2.0) - term(b * (b - 1.0), t, b - 2.0)) / (b - a);
    }
    case WeightKind::ali_singh: {
      const double k = k_;
      return K_ * std::pow(t, -k - 2.0) * (k * (k + 1.0) - (2.0 - k) * (1.0 - k) * t * t);
    }
    case WeightKind::custom:
      if (!custom_->second_derivative) {
        throw Error(ErrorCode::precondition_violated, "custom weight has no second derivative");
      }
      return K_ * custom_->second_derivative(t);
  }
  return 0.0;
}

double Weight::log_derivative(double t) const {
  const double omt = 1.0 - t;
  switch (kind_) {
    case WeightKind::uniform: return 0.0;
    case WeightKind::bernardi: return c_;
    case WeightKind::komatu: {
      const double p = p_;
      return k_ - (p == 1.0 ? 0.0 : (p - 1.0) / log_inv(t, omt));
    }
    case WeightKind::carlson_shaffer: {
      const double b = b_, c = c_;
      return (b - 1.0) - (c - b - 1.0) * t / omt;
    }
    case WeightKind::hohlov: {
      const double a = a_, b = b_, c = c_;
      const double e = c - a - b;
      const double A = c - a, B = 1.0 - a, C = e + 1.0;
      const double om = hyp2f1(A, B, C, omt, t);
      const double om1 = A * B / C * hyp2f1(A + 1.0, B + 1.0, C + 1.0, omt, t);
      return (b - 1.0) - e * t / omt - t * om1 / om;
    }
    case WeightKind::two_param: {
      const double a = a_, b = b_;
      if (std::abs(b - a) < 1e-9) return a - 1.0 / log_inv(t, omt);
      break;
    }
    case WeightKind::ali_singh: {
      const double k = k_;
      return (-k - (2.0 - k) * t * t) / (omt * (1.0 + t));
    }
    case WeightKind::custom: break;
  }
  return t * derivative(t) / value(t, omt);
}

Weight make_weight(std::string_view kind, const std::map<std::string, double>& params) {
  switch (weight_kind_from_string(kind)) {
    case WeightKind::bernardi: return Weight::bernardi(get(params, "c", 0.0));
    case WeightKind::komatu: return Weight::komatu(get(params, "k", 0.0), get(params, "p", 1.0));
    case WeightKind::hohlov:
      return Weight::hohlov(get(params, "a", 1.0), get(params, "b", 1.0), get(params, "c", 2.0));
    case WeightKind::carlson_shaffer:
      return Weight::carlson_shaffer(get(params, "b", 1.0), get(params, "c", 2.0));
    case WeightKind::two_param:
      return Weight::two_param(get(params, "a", 0.0), get(params, "b", 0.0));
    case WeightKind::ali_singh: return Weight::ali_singh(get(params, "k", 0.0));
    case WeightKind::uniform: return Weight::uniform();
    case WeightKind::custom: break;
  }
  throw Error(ErrorCode::unknown_operator, "custom weights cannot be built from a name");
}

double moment(const Weight& w, unsigned n) {
  const double nn = n;
  switch (w.kind()) {
    case WeightKind::uniform: return 1.0 / (nn + 1.0);
    case WeightKind::bernardi: {
      const double c = w.param("c");
      return (1.0 + c) / (nn + c + 1.0);
    }
    case WeightKind::komatu: {
      const double k = w.param("k");
      return std::pow((1.0 + k) / (nn + k + 1.0), w.param("p"));
    }
    case WeightKind::hohlov: {
      const double a = w.param("a"), b = w.param("b"), c = w.param("c");
      double tau = 1.0;
      for (unsigned j = 0; j < n; ++j) tau *= (a + j) * (b + j) / ((c + j) * (j + 1.0));
      return tau;
    }
    case WeightKind::carlson_shaffer: {
      const double b = w.param("b"), c = w.param("c");
      double tau = 1.0;
      for (unsigned j = 0; j < n; ++j) tau *= (b + j) / (c + j);
      return tau;
    }
    case WeightKind::two_param: {
      const double a = w.param("a"), b = w.param("b");
      return (a + 1.0) * (b + 1.0) / ((nn + a + 1.0) * (nn + b + 1.0));
    }
    case WeightKind::ali_singh: {
      const double k = w.param("k");
      return w.normalization() * (1.0 / (nn + 1.0 - k) - 1.0 / (nn + 3.0 - k));
    }
    case WeightKind::custom: break;
  }
  const auto r = integrate(
      Integrand{[&](double t, double omt) { return std::pow(t, nn) * w.value(t, omt); }, w.hint()},
      0.0, 1.0, 1e-13);
  return r.value;
}

std::vector<double> moments(const Weight& w, std::size_t N) {
  std::vector<double> tau(N + 1);
  if (w.kind() == WeightKind::hohlov || w.kind() == WeightKind::carlson_shaffer) {
    const bool cs = w.kind() == WeightKind::carlson_shaffer;
    const double a = cs ? 1.0 : w.param("a");
    const double b = w.param("b");
    const double c = w.param("c");
    tau[0] = 1.0;
    for (std::size_t j = 0; j < N; ++j) {
      const double jj = static_cast<double>(j);
      tau[j + 1] = tau[j] * (a + jj) * (b + jj) / ((c + jj) * (jj + 1.0));
    }
    return tau;
  }
  for (std::size_t n = 0; n <= N; ++n) tau[n] = moment(w, static_cast<unsigned>(n));
  return tau;
}

double weighted_tail(const Weight& w, double exponent, double t, double tol) {
  if (!(t > 0.0)) {
    throw Error(ErrorCode::invalid_argument, "cumulative transforms need t > 0");
  }
  if (t >= 1.0) return 0.0;
  const auto r = integrate(
      Integrand{[&](double s, double oms) { return w.value(s, oms) * std::pow(s, -exponent); },
                w.hint()},
      t, 1.0, tol, 12, 1e-13);
  return r.value;
}

double lambda_cap(const Weight& w, const ParameterSet& p, double t, double tol) {
  if (!(p.nu > 0.0)) {
    throw Error(ErrorCode::precondition_violated, "Lambda_nu needs nu > 0");
  }
  return weighted_tail(w, p.delta / p.nu, t, tol);
}

namespace {

// Pieces next to t = 1 are tiny and only resolved to a few digits there; an
// absolute floor keeps the relative test from chasing rounding.
constexpr double kPieceAbsTol = 1e-18;

// int_a^u s^{-e} ds for 0 < a <= u, without cancellation when u is near a.
double power_integral(double a, double u, double e) {
  const double l = std::log1p((u - a) / a);
  const double q = 1.0 - e;
  if (q == 0.0) return l;
  return std::pow(a, q) * std::expm1(q * l) / q;
}

}  // namespace

double pi_cap(const Weight& w, const ParameterSet& p, double t, double tol) {
  if (!p.gamma_positive()) return lambda_cap(w, p, t, tol);
  if (!(t > 0.0)) throw Error(ErrorCode::invalid_argument, "pi_cap needs t > 0");
  if (t >= 1.0) return 0.0;
  const double e1 = p.delta / p.nu;
  const double e2 = p.delta / p.mu - p.delta / p.nu + 1.0;
  // Fubini: int_t^1 lambda(u) u^{-e1} int_t^u s^{-e2} ds du.
  auto f = [&](double u, double omu) { return w.value(u, omu) * std::pow(u, -e1) * power_integral(t, u, e2); };
  return integrate(Integrand{f, w.hint()}, t, 1.0, tol, 12, 1e-13).value;
}

CumulativeTables build_cumulative_tables(const Weight& w, const ParameterSet& p,
                                         std::vector<double> grid) {
  if (!(p.nu > 0.0)) {
    throw Error(ErrorCode::precondition_violated, "cumulative tables need nu > 0");
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  if (grid.empty() || !(grid.front() > 0.0) || grid.back() > 1.0) {
    throw Error(ErrorCode::invalid_argument, "table grid must lie in (0, 1]");
  }
  if (grid.back() < 1.0) grid.push_back(1.0);

  const bool nested = p.gamma_positive();
  const double e1 = p.delta / p.nu;
  const double e2 = nested ? p.delta / p.mu - p.delta / p.nu + 1.0 : 0.0;
  auto lam = [&](double s, double oms) { return w.value(s, oms) * std::pow(s, -e1); };

  const std::size_t n = grid.size();
  CumulativeTables tab;
  tab.grid = grid;
  tab.lambda_cap.assign(n, 0.0);
  tab.pi_cap.assign(n, 0.0);
  for (std::size_t i = n - 1; i-- > 0;) {
    const double a = grid[i];
    const double b = grid[i + 1];
    const double piece = integrate(Integrand{lam, w.hint()}, a, b, kPieceAbsTol, 12, 1e-14).value;
    tab.lambda_cap[i] = tab.lambda_cap[i + 1] + piece;
    if (!nested) {
      tab.pi_cap[i] = tab.lambda_cap[i];
      continue;
    }
    // Swapping the order of the inner and outer integrals on [a, b] leaves
    // a single quadrature against the closed-form power integral.
    auto inner = [&](double u, double omu) { return lam(u, omu) * power_integral(a, u, e2); };
    tab.pi_cap[i] = tab.pi_cap[i + 1] + tab.lambda_cap[i + 1] * power_integral(a, b, e2) +
                    integrate(Integrand{inner, w.hint()}, a, b, kPieceAbsTol, 12, 1e-13).value;
  }
  return tab;
}

LimitConditions limit_conditions(const Weight& w, const ParameterSet& p) {
  if (!p.gamma_positive()) {
    throw Error(ErrorCode::precondition_violated, "limit conditions are stated for gamma > 0");
  }
  LimitConditions out;
  out.sample_t = {1e-2, 1e-3, 1e-4};
  const auto tab = build_cumulative_tables(w, p, out.sample_t);
  for (std::size_t i = 0; i < out.sample_t.size(); ++i) {
    // The table is ascending; the samples are listed descending.
    const std::size_t j = out.sample_t.size() - 1 - i;
    const double t = out.sample_t[i];
    out.lambda_samples.push_back(std::pow(t, p.delta / p.nu) * tab.lambda_cap[j]);
    out.pi_samples.push_back(std::pow(t, p.delta / p.mu) * tab.pi_cap[j]);
  }
  auto vanishing = [](const std::vector<double>& v) {
    for (std::size_t i = 1; i < v.size(); ++i) {
      if (!(std::abs(v[i]) < 0.5 * std::abs(v[i - 1]))) return false;
    }
    return std::abs(v.back()) < 0.1 * std::abs(v.front());
  };
  out.lambda_vanishes = vanishing(out.lambda_samples);
  out.pi_vanishes = vanishing(out.pi_samples);
  return out;
}

}  // namespace starlike
