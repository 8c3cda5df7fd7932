#pragma once

#include <cstddef>

#include "starlike/params.hpp"
#include "starlike/power_series.hpp"

namespace starlike {

/// delta^2 / ((delta + n nu)(delta + n mu)), the coefficients of psi. With
/// gamma = 0 (mu = 0) this is delta / (delta + n alpha).
double psi_coefficient(const ParameterSet& p, std::size_t n) noexcept;

/// Reciprocal of psi_coefficient: the factor by which the H functional
/// multiplies the n-th coefficient of (f/z)^delta.
double h_multiplier(const ParameterSet& p, std::size_t n) noexcept;

/// psi = sum_n psi_n z^n up to order N. Needs nu > 0.
PowerSeries psi_series(const ParameterSet& p, std::size_t N);

/// Phi = (z psi)', coefficients (n + 1) psi_n.
PowerSeries phi_series(const ParameterSet& p, std::size_t N);

/// phi(x) = (1 - xi(1 + x)) / ((1 - xi)(1 + x)^2), the integrand kernel of
/// both integral representations of g.
double g_kernel(double xi, double x) noexcept;

/// g(t) = 1 + (2 delta^2 / (1 - xi)) sum_{n>=1} (-1)^n (n + 1 - xi) t^n
///        / ((n nu + delta)(n mu + delta)),  0 <= t <= 1.
/// Direct summation for t <= 1/2, accelerated alternating summation above
/// (the series is only conditionally convergent at t = 1). Requires
/// gamma > 0 (Error{precondition_violated}); Error{divergent_series} if the
/// sum does not settle.
double g_series_eval(const ParameterSet& p, double t, double tol = 1e-13);

/// g(t) from the closed integral solution of its defining ODE:
///   gamma > 0: (1 + g)/2 = int_0^1 int_0^1 phi(t r^{nu/delta} s^{mu/delta}) dr ds,
///   gamma = 0: (1 + g)/2 = (delta/alpha) int_0^1 u^{delta/alpha - 1} phi(t u) du,
/// and g = 2 phi(t) - 1 when alpha = gamma = 0. g(0) = 1.
double g_integral_eval(const ParameterSet& p, double t, double tol = 1e-11);

}  // namespace starlike
