#include <doctest.h>

#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "oracle_values.hpp"
#include "starlike/error.hpp"
#include "starlike/kernels.hpp"

using namespace starlike;
using testing_support::from_mu_nu;

TEST_CASE("psi and Phi") {
  const auto p = from_mu_nu(1, 1, 1, 0);
  const auto psi = psi_series(p, 20);
  const auto phi = phi_series(p, 20);
  for (int n = 0; n <= 20; ++n) {
    CHECK(psi[n].real() == doctest::Approx(1.0 / ((n + 1.0) * (n + 1.0))));
    CHECK(phi[n].real() == doctest::Approx(1.0 / (n + 1.0)));
  }
  CHECK(eval(phi, 0.0) == 1.0);
  const auto q = from_mu_nu(0.7, 2.3, 1.4, 0.2);
  CHECK(psi_series(q, 5)[0] == 1.0);
  const double basel = eval(psi_series(p, 10000), 1.0 - 1e-12).real();
  CHECK(std::abs(basel - std::numbers::pi * std::numbers::pi / 6.0) < 1e-3);
}

TEST_CASE("psi and Phi are symmetric in mu and nu") {
  const auto p = from_mu_nu(0.5, 3.0, 1.2, 0.1);
  const auto s = p.swapped();
  CHECK(max_coeff_distance(psi_series(p, 40), psi_series(s, 40)) == 0.0);
  CHECK(max_coeff_distance(phi_series(p, 40), phi_series(s, 40)) == 0.0);
}

TEST_CASE("h multiplier inverts psi") {
  const auto p = from_mu_nu(0.5, 3.0, 1.2, 0.1);
  for (std::size_t n = 0; n < 30; ++n) CHECK(psi_coefficient(p, n) * h_multiplier(p, n) == doctest::Approx(1.0));
  const auto q = ParameterSet::make(2.0, 0.0, 1.0, 0.0);
  CHECK(h_multiplier(q, 3) == doctest::Approx(7.0));
}

TEST_CASE("g series") {
  const auto p = from_mu_nu(1, 1, 1, 0);
  CHECK(g_series_eval(p, 0.0) == 1.0);
  CHECK(g_series_eval(p, 1.0) == doctest::Approx(2.0 * std::log(2.0) - 1.0).epsilon(1e-12));
  CHECK_THROWS_AS(g_series_eval(ParameterSet::make(1, 0, 1, 0), 0.5), Error);

  const double ts[] = {0.3, 0.8, 1.0};
  const double a[] = {oracle::kGA0, oracle::kGA1, oracle::kGA2};
  const double b[] = {oracle::kGB0, oracle::kGB1, oracle::kGB2};
  const auto pb = ParameterSet::make(11, 6, 1.5, 0.5);
  for (int i = 0; i < 3; ++i) {
    CHECK(std::abs(g_series_eval(p, ts[i]) - a[i]) < 1e-12);
    CHECK(std::abs(g_series_eval(pb, ts[i]) - b[i]) < 1e-12);
  }
}

TEST_CASE("g integral") {
  const auto p = ParameterSet::make(1, 0, 1, 0);
  CHECK(g_integral_eval(p, 0.5) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(std::abs(g_integral_eval(p, 1e-9) - 1.0) < 1e-6);
  CHECK(g_integral_eval(p, 0.0) == 1.0);
  const auto q = ParameterSet::make(2, 0, 1, 0.25);
  const double ts[] = {0.3, 0.8, 1.0};
  const double want[] = {oracle::kGZero0, oracle::kGZero1, oracle::kGZero2};
  for (int i = 0; i < 3; ++i) CHECK(std::abs(g_integral_eval(q, ts[i]) - want[i]) < 1e-10);
  // alpha = gamma = 0
  const auto z = ParameterSet::make(0, 0, 1, 0.2);
  CHECK(g_integral_eval(z, 0.4) == doctest::Approx(2.0 * g_kernel(0.2, 0.4) - 1.0));
}

TEST_CASE("series and integral forms agree") {
  const auto sets = {from_mu_nu(1, 1, 1, 0), from_mu_nu(1, 1, 1, 0.5), from_mu_nu(2, 3, 1.5, 0.25)};
  for (const auto& p : sets) {
    for (double t : {0.1, 0.25, 0.5, 0.75, 0.9}) {
      CHECK(std::abs(g_series_eval(p, t) - g_integral_eval(p, t)) <= 1e-8);
    }
  }
}

TEST_CASE("g decreases on (0, 1) for xi in [0, 1/2]") {
  for (double xi : {0.0, 0.25, 0.5}) {
    const auto p = from_mu_nu(1, 2, 1, xi);
    double prev = g_series_eval(p, 0.0);
    for (int i = 1; i <= 50; ++i) {
      const double g = g_series_eval(p, i / 50.0);
      CHECK(g < prev);
      prev = g;
    }
  }
}
