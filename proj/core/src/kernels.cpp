#include "starlike/kernels.hpp"

#include <cmath>
#include <vector>

#include "starlike/detail/alternating_sum.hpp"
#include "starlike/error.hpp"
#include "starlike/quadrature.hpp"

namespace starlike {

double psi_coefficient(const ParameterSet& p, std::size_t n) noexcept {
  const double nn = static_cast<double>(n);
  return p.delta * p.delta / ((p.delta + nn * p.nu) * (p.delta + nn * p.mu));
}

double h_multiplier(const ParameterSet& p, std::size_t n) noexcept {
  return 1.0 / psi_coefficient(p, n);
}

PowerSeries psi_series(const ParameterSet& p, std::size_t N) {
  std::vector<cplx> c(N + 1);
  for (std::size_t n = 0; n <= N; ++n) c[n] = psi_coefficient(p, n);
  return PowerSeries(std::move(c));
}

PowerSeries phi_series(const ParameterSet& p, std::size_t N) {
  std::vector<cplx> c(N + 1);
  for (std::size_t n = 0; n <= N; ++n) c[n] = static_cast<double>(n + 1) * psi_coefficient(p, n);
  return PowerSeries(std::move(c));
}

double g_kernel(double xi, double x) noexcept {
  const double q = 1.0 + x;
  return (1.0 - xi * q) / ((1.0 - xi) * q * q);
}

double g_series_eval(const ParameterSet& p, double t, double tol) {
  if (!p.gamma_positive()) {
    throw Error(ErrorCode::precondition_violated,
                "the g series is stated for gamma > 0; use g_integral_eval for gamma = 0");
  }
  if (!(t >= 0.0 && t <= 1.0)) {
    throw Error(ErrorCode::invalid_argument, "g_series_eval needs 0 <= t <= 1");
  }
  if (t == 0.0) return 1.0;
  const double xi = p.xi;
  // Term n of the sum, n >= 1, without the (2 delta^2 / (1 - xi)) prefactor.
  auto coef = [&](double n) { return (n + 1.0 - xi) / ((n * p.nu + p.delta) * (n * p.mu + p.delta)); };
  const double pre = 2.0 * p.delta * p.delta / (1.0 - xi);

  double sum = 0.0;
  if (t <= 0.5) {
    double tn = 1.0;
    for (std::size_t n = 1; n < 2000; ++n) {
      tn *= -t;
      const double a = coef(static_cast<double>(n)) * tn;
      sum += a;
      if (std::abs(a) < 0.1 * tol) return 1.0 + pre * sum;
    }
    return 1.0 + pre * sum;
  }
  const double logt = std::log(t);
  auto term = [&](std::size_t k) {
    const double n = static_cast<double>(k + 1);
    const double mag = coef(n) * std::exp(n * logt);
    return (k % 2 == 0) ? -mag : mag;
  };
  const auto s = detail::accelerated_alternating_sum(term, 0.1 * tol, 1000000, 16);
  if (!s.converged) {
    throw Error(ErrorCode::divergent_series, "g series did not settle");
  }
  return 1.0 + pre * s.value;
}

double g_integral_eval(const ParameterSet& p, double t, double tol) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw Error(ErrorCode::invalid_argument, "g_integral_eval needs 0 <= t <= 1");
  }
  if (t == 0.0) return 1.0;
  const double xi = p.xi;
  if (p.gamma_positive()) {
    const double en = p.nu / p.delta;
    const double em = p.mu / p.delta;
    const double inner_tol = tol / 10.0;
    auto outer = [&](double s) {
      const double ts = t * std::pow(s, em);
      return integrate([&](double r) { return g_kernel(xi, ts * std::pow(r, en)); }, 0.0, 1.0,
                       inner_tol)
          .value;
    };
    return 2.0 * integrate(outer, 0.0, 1.0, tol).value - 1.0;
  }
  if (p.alpha == 0.0) return 2.0 * g_kernel(xi, t) - 1.0;
  const double e = p.delta / p.alpha;
  const auto r = integrate([&](double u) { return e * std::pow(u, e - 1.0) * g_kernel(xi, t * u); },
                           0.0, 1.0, tol);
  return 2.0 * r.value - 1.0;
}

}  // namespace starlike
