#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "starlike/params.hpp"
#include "starlike/power_series.hpp"

namespace testing_support {

inline starlike::ParameterSet from_mu_nu(double mu, double nu, double delta, double xi) {
  // alpha - gamma = mu + nu, gamma = mu nu; zeta from xi = 1 - delta + delta zeta.
  return starlike::ParameterSet::make(mu + nu + mu * nu, mu * nu, delta, (xi - 1.0 + delta) / delta);
}

/// Series with constant term 1 and |a_n| <= scale / n^2, complex coefficients.
inline starlike::PowerSeries random_unit_series(std::uint32_t seed, std::size_t order, double scale = 0.2) {
  std::mt19937 gen(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<starlike::cplx> c(order + 1);
  c[0] = 1.0;
  for (std::size_t n = 1; n <= order; ++n) {
    const double s = scale / static_cast<double>(n * n);
    c[n] = {s * u(gen) / std::sqrt(2.0), s * u(gen) / std::sqrt(2.0)};
  }
  return starlike::PowerSeries(std::move(c));
}

inline double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

}  // namespace testing_support
