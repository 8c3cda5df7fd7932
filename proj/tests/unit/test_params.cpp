#include <doctest.h>

#include <cmath>
#include <random>

#include "starlike/error.hpp"
#include "starlike/params.hpp"

using namespace starlike;

TEST_CASE("mu and nu from alpha and gamma") {
  auto r = derive_mu_nu(3.0, 1.0);
  CHECK(r.mu == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.nu == doctest::Approx(1.0).epsilon(1e-12));

  r = derive_mu_nu(2.5, 0.0);
  CHECK(r.mu == 0.0);
  CHECK(r.nu == 2.5);

  r = derive_mu_nu(10.0, 5.0);
  CHECK(r.mu == doctest::Approx((5.0 - std::sqrt(5.0)) / 2.0).epsilon(1e-13));
  CHECK(r.nu == doctest::Approx((5.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-13));
}

TEST_CASE("complex roots are rejected") {
  for (auto [a, g] : {std::pair{5.0, 4.0}, {6.0, 4.0}, {6.0, 5.0}, {10.0, 9.0}}) {
    try {
      derive_mu_nu(a, g);
      FAIL("expected ComplexRoots");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::complex_roots);
    }
  }
}

TEST_CASE("negative roots and negative inputs are rejected") {
  // x^2 + 3x + 2: roots -1, -2.
  CHECK_THROWS_AS(derive_mu_nu(-1.0, 2.0), Error);
}

TEST_CASE("double root within float noise") {
  // (alpha - gamma)^2 - 4 gamma = 0 exactly in reals: gamma = 1, alpha = 3.
  const double g = 1.0 + 1e-15;
  auto r = derive_mu_nu(3.0 + 1e-15, g);
  CHECK(r.mu == doctest::Approx(1.0).epsilon(1e-7));
  CHECK(r.nu == doctest::Approx(1.0).epsilon(1e-7));
}

TEST_CASE("xi") {
  CHECK(derive_xi(1.0, 0.0) == 0.0);
  CHECK(derive_xi(2.0, 0.75) == doctest::Approx(0.5));
  CHECK(derive_xi(1.0, 0.25) == doctest::Approx(0.25));
  CHECK(xi_in_theorem_range(0.0));
  CHECK(xi_in_theorem_range(0.5));
  CHECK_FALSE(xi_in_theorem_range(0.6));
}

TEST_CASE("out-of-regime parameters only warn") {
  auto p = ParameterSet::make(1.0, 0.0, 0.5, 0.9);
  CHECK_FALSE(p.warnings.empty());
  auto q = ParameterSet::make(3.0, 1.0, 1.0, 0.0);
  CHECK(q.warnings.empty());
}

TEST_CASE("root identities on random draws") {
  std::mt19937 gen(7);
  std::uniform_real_distribution<double> u(0.0, 4.0);
  for (int i = 0; i < 200; ++i) {
    const double mu = u(gen), nu = u(gen);
    const double gamma = mu * nu, alpha = gamma + mu + nu;
    const auto r = derive_mu_nu(alpha, gamma);
    CHECK(r.mu <= r.nu);
    CHECK(std::abs(r.mu * r.nu - gamma) <= 1e-12 * std::max(1.0, gamma) * 16);
    CHECK(std::abs(r.mu + r.nu - (alpha - gamma)) <= 1e-12 * std::max(1.0, alpha));
  }
}

TEST_CASE("monotone exponent equals 1 + 2 xi") {
  std::mt19937 gen(11);
  std::uniform_real_distribution<double> d(1.0, 3.0), z(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const auto p = ParameterSet::make(3.0, 1.0, d(gen), z(gen));
    CHECK(std::abs(monotone_exponent(p) - (1.0 + 2.0 * p.xi)) <= 1e-14 * 8);
  }
  const auto p = ParameterSet::make(3.0, 1.0, 2.0, 0.75);
  CHECK(monotone_exponent(p) == doctest::Approx(2.0));
}
