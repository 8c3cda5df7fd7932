#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace starlike {

/// Informational tag describing where an integrand is singular. The
/// tanh-sinh rule treats all cases the same way; the hint is carried along
/// for diagnostics and for callers choosing tolerances.
enum class Singularity { none, left_power, right_power, left_log, both };

/// f(t, 1 - t). The second argument is the complement computed without
/// cancellation, so factors such as (1 - t)^e stay accurate next to t = 1.
struct Integrand {
  std::function<double(double, double)> evaluate;
  Singularity hint = Singularity::none;
};

struct QuadratureResult {
  double value = 0.0;
  double err_estimate = 0.0;
  int levels = 0;
  std::size_t evaluations = 0;
};

/// Tanh-sinh quadrature of f over [lo, hi] with 0 <= lo < hi <= 1.
///
/// The step is halved from h = 1 (reusing nodes) until two successive levels
/// differ by at most max(tol, rel_tol * |value|) at level >= 3, or by less
/// than the rounding noise of the sum. err_estimate is that last difference.
/// Throws Error{no_convergence} after max_level or on a non-finite sample.
QuadratureResult integrate(const Integrand& f, double lo, double hi,
                           double tol = 1e-10, int max_level = 12,
                           double rel_tol = 0.0);

/// Same for an integrand that does not need the complement.
QuadratureResult integrate(const std::function<double(double)>& f, double lo,
                           double hi, double tol = 1e-10, int max_level = 12,
                           double rel_tol = 0.0);

/// A fixed tanh-sinh rule on [0, 1]: nodes t_i (nondecreasing; distinct
/// nodes can round to the same double next to 1), complements
/// 1 - t_i and weights w_i with sum_i w_i f(t_i) ~ int_0^1 f. Used where one
/// integrand family is evaluated many times with different parameters.
struct FixedRule {
  std::vector<double> nodes;
  std::vector<double> complements;
  std::vector<double> weights;
};

/// Rule with step h = 2^-level, dropping nodes closer than min_node to 0.
FixedRule tanh_sinh_rule(int level, double min_node = 0.0);

}  // namespace starlike
