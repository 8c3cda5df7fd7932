#include "starlike/quadrature.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "starlike/error.hpp"

namespace starlike {

namespace {

constexpr double kHalfPi = 0.5 * std::numbers::pi;
// Beyond t ~ 6.1 the complement 1/(1 + e^{2s}) underflows below 1e-300.
constexpr double kTMax = 6.1;

struct Node {
  double v;  // distance of the node from the nearer endpoint, as a fraction
  double w;  // dx/dt, already scaled by 1/2 for the map onto [0, 1]
};

Node node_at(double t) {
  const double s = kHalfPi * std::sinh(t);
  const double v = 1.0 / (1.0 + std::exp(2.0 * s));
  return {v, kHalfPi * std::cosh(t) * 2.0 * v * (1.0 - v)};
}

}  // namespace

QuadratureResult integrate(const Integrand& f, double lo, double hi, double tol,
                           int max_level, double rel_tol) {
  if (!(lo >= 0.0 && lo < hi && hi <= 1.0)) {
    std::ostringstream msg;
    msg << "integrate needs 0 <= lo < hi <= 1 (got [" << lo << ", " << hi << "])";
    throw Error(ErrorCode::invalid_argument, msg.str());
  }
  const double len = hi - lo;
  const double one_minus_hi = 1.0 - hi;
  const double one_minus_lo = 1.0 - lo;
  std::size_t evals = 0;
  double abs_sum = 0.0;

  auto call = [&](double t, double omt) {
    const double y = f.evaluate(t, omt);
    ++evals;
    if (!std::isfinite(y)) {
      std::ostringstream msg;
      msg << "integrand is not finite at t = " << t;
      throw Error(ErrorCode::no_convergence, msg.str());
    }
    return y;
  };
  // Both mirror nodes for parameter t > 0, weighted.
  auto pair = [&](double t) {
    const Node n = node_at(t);
    const double d = len * n.v;
    if (d == 0.0) return 0.0;
    const double right = call(hi - d, one_minus_hi + d);
    const double left = call(lo + d, one_minus_lo - d);
    const double s = n.w * (right + left);
    abs_sum += n.w * (std::abs(right) + std::abs(left));
    return s;
  };

  double h = 1.0;
  double sum = 0.5 * kHalfPi * call(lo + 0.5 * len, one_minus_lo - 0.5 * len);
  abs_sum = std::abs(sum);
  for (int k = 1; k <= static_cast<int>(kTMax); ++k) sum += pair(k);
  double estimate = len * h * sum;
  double diff = std::numeric_limits<double>::infinity();

  for (int level = 1; level <= max_level; ++level) {
    h *= 0.5;
    double fresh = 0.0;
    for (double t = h; t <= kTMax; t += 2.0 * h) fresh += pair(t);
    sum += fresh;
    const double next = len * h * sum;
    diff = std::abs(next - estimate);
    estimate = next;
    const double noise = 64.0 * std::numeric_limits<double>::epsilon() * len * h * abs_sum;
    if (level >= 3 &&
        (diff <= tol || diff <= rel_tol * std::abs(estimate) || diff <= noise)) {
      return {estimate, diff, level, evals};
    }
  }
  std::ostringstream msg;
  msg.precision(17);
  msg << "tanh-sinh did not converge on [" << lo << ", " << hi << "] after " << max_level
      << " levels (last change " << diff << ")";
  throw Error(ErrorCode::no_convergence, msg.str());
}

QuadratureResult integrate(const std::function<double(double)>& f, double lo, double hi,
                           double tol, int max_level, double rel_tol) {
  return integrate(Integrand{[&f](double t, double) { return f(t); }, Singularity::none}, lo,
                   hi, tol, max_level, rel_tol);
}

FixedRule tanh_sinh_rule(int level, double min_node) {
  const double h = std::ldexp(1.0, -level);
  FixedRule rule;
  auto push = [&](double t, double omt, double w) {
    if (t < min_node || t <= 0.0 || t >= 1.0 || omt <= 0.0) return;
    rule.nodes.push_back(t);
    rule.complements.push_back(omt);
    rule.weights.push_back(w);
  };
  const int kmax = static_cast<int>(kTMax / h);
  for (int k = kmax; k >= 1; --k) {
    const Node n = node_at(k * h);
    push(n.v, 1.0 - n.v, h * n.w);
  }
  push(0.5, 0.5, h * 0.5 * kHalfPi);
  for (int k = 1; k <= kmax; ++k) {
    const Node n = node_at(k * h);
    push(1.0 - n.v, n.v, h * n.w);
  }
  return rule;
}

}  // namespace starlike
