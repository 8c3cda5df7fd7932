#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "starlike/params.hpp"
#include "starlike/weights.hpp"

namespace starlike {

enum class BetaMethod { quadrature, series_termwise, closed_form_5F4, closed_form_analytic };

std::string_view to_string(BetaMethod m) noexcept;

/// Sharp beta with ratio = beta / (1 - beta) = -int_0^1 lambda g dt.
struct BetaResult {
  double beta = 0.0;
  double ratio = 0.0;
  BetaMethod method = BetaMethod::quadrature;
  double err_estimate = 0.0;
};

/// beta = ratio / (1 + ratio). Throws Error{ratio_is_minus_one} when
/// ratio <= -1 + 1e-12 (beta would be -infinity or the inversion flips).
BetaResult beta_from_ratio(double ratio, BetaMethod method, double err);

/// Quadrature of lambda(t) g(t) with g from the series (gamma > 0) or from
/// the integral solution (gamma = 0).
BetaResult solve_beta(const Weight& w, const ParameterSet& p, double tol = 1e-10);

/// ratio = -1 - (2 delta^2/(1 - xi)) sum_{n=1}^{N} (-1)^n (n + 1 - xi) tau_n
///         / ((n nu + delta)(n mu + delta)).
/// err_estimate is the first omitted term. Requires gamma > 0.
BetaResult solve_beta_series(const Weight& w, const ParameterSet& p, std::size_t N = 100000);

/// beta_0 = 1 - 1 / (2 (1 - F)) with
/// F = 5F4(1, b, 2 - xi, delta/mu, delta/nu; c, 1 - xi, 1 + delta/mu, 1 + delta/nu; -1),
/// the closed form for the Carlson-Shaffer weight. Requires gamma > 0 and
/// 0 < b < c.
BetaResult solve_beta_5F4(double b, double c, const ParameterSet& p);

/// Known closed forms: the Bernardi c = 0 (or uniform) weight with
/// gamma = 0, delta = alpha, xi = 0 gives g = (1-t)/(1+t) and
/// ratio = 1 - 2 ln 2; the uniform weight with mu = nu = delta, xi = 0
/// gives ratio = 1 - pi^2/6. Returns nullopt for anything else.
std::optional<BetaResult> closed_form_beta(const Weight& w, const ParameterSet& p);

}  // namespace starlike
