#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "starlike/error.hpp"
#include "starlike/power_series.hpp"

using namespace starlike;
using testing_support::random_unit_series;

namespace {

PowerSeries real_series(std::initializer_list<double> c) {
  std::vector<double> v(c);
  return PowerSeries::from_real(v);
}

PowerSeries koebe(std::size_t N) {
  std::vector<double> c(N + 1);
  for (std::size_t n = 0; n <= N; ++n) c[n] = static_cast<double>(n);
  return PowerSeries::from_real(c);
}

}  // namespace

TEST_CASE("hadamard") {
  const auto a = real_series({1, 1, 1});
  const auto b = real_series({1, 2, 3});
  CHECK(max_coeff_distance(hadamard(a, b), b) == 0.0);

  const auto s = random_unit_series(3, 20);
  CHECK(max_coeff_distance(hadamard(s, PowerSeries::geometric(20)), s) == 0.0);

  const auto k = koebe(5);
  std::vector<double> inv(6);
  for (int n = 0; n <= 5; ++n) inv[n] = 1.0 / (n + 1.0);
  const auto h = hadamard(k, PowerSeries::from_real(inv));
  for (int n = 0; n <= 5; ++n) CHECK(h[n].real() == doctest::Approx(n / (n + 1.0)));
}

TEST_CASE("log") {
  const auto l = series_log(real_series({1, 1, 0, 0, 0}));
  const double want[] = {0, 1, -0.5, 1.0 / 3.0, -0.25};
  for (int n = 0; n < 5; ++n) CHECK(std::abs(l[n] - want[n]) < 1e-15);

  CHECK(max_coeff_distance(series_log(PowerSeries::constant(1.0, 6)), PowerSeries::zero(6)) == 0.0);

  const auto g = series_log(PowerSeries::geometric(12));
  for (int n = 1; n <= 12; ++n) CHECK(std::abs(g[n] - 1.0 / n) < 1e-14);

  CHECK_THROWS_AS(series_log(real_series({2, 1})), Error);
}

TEST_CASE("exp") {
  const auto e = series_exp(PowerSeries::identity(3));
  const double want[] = {1, 1, 0.5, 1.0 / 6.0};
  for (int n = 0; n < 4; ++n) CHECK(std::abs(e[n] - want[n]) < 1e-15);
  CHECK(max_coeff_distance(series_exp(PowerSeries::zero(5)), PowerSeries::constant(1.0, 5)) == 0.0);
  try {
    series_exp(real_series({1, 1}));
    FAIL("expected NonZeroConstantTerm");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::non_zero_constant_term);
  }
}

TEST_CASE("pow") {
  const auto sq = series_pow(real_series({1, 1, 0, 0}), 2.0);
  CHECK(max_coeff_distance(sq, real_series({1, 2, 1, 0})) < 1e-15);
  const auto s = random_unit_series(5, 30);
  CHECK(max_coeff_distance(series_pow(s, 1.0), s) < 1e-15);
  const auto r = series_pow(real_series({1, 1, 0, 0, 0, 0}), 0.5);
  CHECK(max_coeff_distance(r * r, real_series({1, 1, 0, 0, 0, 0})) < 1e-12);
}

TEST_CASE("pow is additive in the exponent") {
  for (std::uint32_t seed = 0; seed < 10; ++seed) {
    const auto s = random_unit_series(seed, 40);
    const auto lhs = series_pow(s, 0.7 + 1.9);
    const auto rhs = series_pow(s, 0.7) * series_pow(s, 1.9);
    CHECK(max_coeff_distance(lhs, rhs) < 1e-10);
  }
}

TEST_CASE("eval") {
  CHECK(std::abs(eval(PowerSeries::geometric(15), 0.5) - (2.0 - std::pow(0.5, 15))) < 1e-15);
  const auto s = random_unit_series(9, 10);
  CHECK(eval(s, 0.0) == s[0]);
  CHECK(std::abs(eval(koebe(80), -0.5) - (-0.5 / 2.25)) < 1e-14);
}

TEST_CASE("log derivative fraction") {
  CHECK(std::abs(log_derivative_fraction(PowerSeries::identity(4), {0.3, 0.2}) - 1.0) < 1e-15);
  CHECK(std::abs(log_derivative_fraction(koebe(200), 0.5) - 3.0) < 1e-12);
  std::vector<double> zg(80, 1.0);
  zg[0] = 0.0;
  CHECK(std::abs(log_derivative_fraction(PowerSeries::from_real(zg), 0.5) - 2.0) < 1e-12);
  CHECK_THROWS_AS(log_derivative_fraction(PowerSeries::zero(3), 0.5), Error);
}

TEST_CASE("derivative against central differences") {
  const auto s = random_unit_series(21, 30, 1.0);
  const double h = 1e-5;
  for (cplx z : {cplx{0.3, 0.1}, cplx{-0.5, 0.4}, cplx{0.0, -0.7}}) {
    const cplx fd = (eval(s, z + h) - eval(s, z - h)) / (2.0 * h);
    CHECK(std::abs(eval(derivative(s), z) - fd) <= 1e-6);
  }
}

TEST_CASE("shifts") {
  const auto s = random_unit_series(2, 6);
  CHECK(max_coeff_distance(shift_down(shift_up(s, 2), 2), s) == 0.0);
  CHECK_THROWS_AS(shift_down(s, 1), Error);
}

TEST_CASE("construction rejects non-finite coefficients") {
  CHECK_THROWS_AS(PowerSeries(std::vector<cplx>{1.0, {NAN, 0.0}}), Error);
}
