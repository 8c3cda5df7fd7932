#include "starlike/beta.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "starlike/error.hpp"
#include "starlike/kernels.hpp"
#include "starlike/quadrature.hpp"
#include "starlike/special_functions.hpp"

namespace starlike {

std::string_view to_string(BetaMethod m) noexcept {
  switch (m) {
    case BetaMethod::quadrature: return "quadrature";
    case BetaMethod::series_termwise: return "series_termwise";
    case BetaMethod::closed_form_5F4: return "closed_form_5F4";
    case BetaMethod::closed_form_analytic: return "closed_form_analytic";
  }
  return "quadrature";
}

BetaResult beta_from_ratio(double ratio, BetaMethod method, double err) {
  if (!(ratio > -1.0 + 1e-12)) {
    std::ostringstream msg;
    msg << "beta/(1-beta) = " << ratio << " <= -1: no admissible beta";
    throw Error(ErrorCode::ratio_is_minus_one, msg.str());
  }
  return {ratio / (1.0 + ratio), ratio, method, err};
}

BetaResult solve_beta(const Weight& w, const ParameterSet& p, double tol) {
  const bool series = p.gamma_positive();
  const double g_tol = tol / 10.0;
  auto integrand = [&](double t, double omt) {
    const double g = series ? g_series_eval(p, t, g_tol) : g_integral_eval(p, t, g_tol);
    return w.value(t, omt) * g;
  };
  const auto r = integrate(Integrand{integrand, w.hint()}, 0.0, 1.0, tol);
  return beta_from_ratio(-r.value, BetaMethod::quadrature, r.err_estimate + g_tol);
}

BetaResult solve_beta_series(const Weight& w, const ParameterSet& p, std::size_t N) {
  if (!p.gamma_positive()) {
    throw Error(ErrorCode::precondition_violated, "the termwise series is stated for gamma > 0");
  }
  const auto tau = moments(w, N + 1);
  auto term = [&](std::size_t n) {
    const double nn = static_cast<double>(n);
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    return sign * (nn + 1.0 - p.xi) * tau[n] / ((nn * p.nu + p.delta) * (nn * p.mu + p.delta));
  };
  // Summed from the small end so the tail is not swamped by rounding.
  double sum = 0.0;
  for (std::size_t n = N; n >= 1; --n) sum += term(n);
  const double pre = 2.0 * p.delta * p.delta / (1.0 - p.xi);
  const double ratio = -1.0 - pre * sum;
  return beta_from_ratio(ratio, BetaMethod::series_termwise, pre * std::abs(term(N + 1)));
}

BetaResult solve_beta_5F4(double b, double c, const ParameterSet& p) {
  if (!p.gamma_positive()) {
    throw Error(ErrorCode::precondition_violated, "the 5F4 form needs gamma > 0");
  }
  if (!(b > 0.0 && c > b)) {
    throw Error(ErrorCode::param_out_of_range, "the 5F4 form needs 0 < b < c");
  }
  const double dm = p.delta / p.mu;
  const double dn = p.delta / p.nu;
  const auto F = pFq({{1.0, b, 2.0 - p.xi, dm, dn}, {c, 1.0 - p.xi, 1.0 + dm, 1.0 + dn}, -1.0}, 1e-14);
  return beta_from_ratio(1.0 - 2.0 * F.value, BetaMethod::closed_form_5F4, 2.0 * F.err_estimate);
}

std::optional<BetaResult> closed_form_beta(const Weight& w, const ParameterSet& p) {
  const bool flat = w.kind() == WeightKind::uniform ||
                    (w.kind() == WeightKind::bernardi && w.param("c") == 0.0);
  if (!flat || p.xi != 0.0) return std::nullopt;
  if (!p.gamma_positive() && p.alpha == p.delta) {
    return beta_from_ratio(1.0 - 2.0 * std::numbers::ln2, BetaMethod::closed_form_analytic, 0.0);
  }
  if (p.gamma_positive() && p.mu == p.delta && p.nu == p.delta) {
    return beta_from_ratio(1.0 - std::numbers::pi * std::numbers::pi / 6.0,
                           BetaMethod::closed_form_analytic, 0.0);
  }
  return std::nullopt;
}

}  // namespace starlike
