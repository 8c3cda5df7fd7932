#include <doctest.h>

#include <cmath>
#include <numbers>

#include "starlike/error.hpp"
#include "starlike/quadrature.hpp"
#include "starlike/special_functions.hpp"

using namespace starlike;

TEST_CASE("basic integrals") {
  CHECK(std::abs(integrate([](double) { return 1.0; }, 0.0, 1.0).value - 1.0) < 1e-14);
  CHECK(std::abs(integrate([](double t) { return -std::log(t); }, 0.0, 1.0).value - 1.0) < 1e-12);
  const Integrand arc{[](double t, double omt) { return 1.0 / std::sqrt(t * omt); }, Singularity::both};
  CHECK(std::abs(integrate(arc, 0.0, 1.0).value - std::numbers::pi) < 1e-10);
}

TEST_CASE("beta function oracle") {
  for (auto [b, c] : {std::pair{1.0, 3.0}, {0.5, 2.0}, {2.0, 5.0}}) {
    const Integrand f{[b = b, c = c](double t, double omt) { return std::pow(t, b - 1.0) * std::pow(omt, c - b - 1.0); },
                      Singularity::both};
    const double want = std::exp(log_gamma(b) + log_gamma(c - b) - log_gamma(c));
    CHECK(std::abs(integrate(f, 0.0, 1.0).value - want) < 1e-9);
  }
}

TEST_CASE("linearity and additivity") {
  auto f = [](double t) { return std::pow(t, -0.3) * std::cos(t); };
  auto g = [](double t) { return std::log(1.0 / t) * t; };
  const auto F = integrate(f, 0.0, 1.0), G = integrate(g, 0.0, 1.0);
  const auto H = integrate([&](double t) { return 2.0 * f(t) - 3.0 * g(t); }, 0.0, 1.0);
  CHECK(std::abs(H.value - (2.0 * F.value - 3.0 * G.value)) <= 1e-10 + 2 * F.err_estimate + 3 * G.err_estimate);

  const double tol = 1e-10;
  const double whole = integrate(f, 0.0, 1.0, tol).value;
  const double parts = integrate(f, 0.0, 0.37, tol).value + integrate(f, 0.37, 1.0, tol).value;
  CHECK(std::abs(whole - parts) <= 2 * tol);
}

TEST_CASE("complement keeps accuracy at the right end") {
  // int_0^1 (1 - t)^{-0.9} dt = 10
  const Integrand f{[](double, double omt) { return std::pow(omt, -0.9); }, Singularity::right_power};
  CHECK(std::abs(integrate(f, 0.0, 1.0, 1e-10).value - 10.0) < 1e-8);
}

TEST_CASE("non-finite integrand is reported") {
  CHECK_THROWS_AS(integrate([](double) { return NAN; }, 0.0, 1.0), Error);
  CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 0.5, 0.5), Error);
}

TEST_CASE("fixed rule") {
  const FixedRule r = tanh_sinh_rule(6);
  double s = 0.0, m = 0.0;
  for (std::size_t i = 0; i < r.nodes.size(); ++i) {
    s += r.weights[i];
    m += r.weights[i] * std::pow(r.nodes[i], -0.5);
    CHECK(r.nodes[i] > 0.0);
    CHECK(r.nodes[i] < 1.0);
    if (i > 0) {
      CHECK(r.nodes[i] >= r.nodes[i - 1]);
      CHECK(r.complements[i] <= r.complements[i - 1]);
      CHECK((r.nodes[i] > r.nodes[i - 1] || r.complements[i] < r.complements[i - 1]));
    }
  }
  CHECK(std::abs(s - 1.0) < 1e-12);
  CHECK(std::abs(m - 2.0) < 1e-9);
}
