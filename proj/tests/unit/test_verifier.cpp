#include <doctest.h>

#include <cmath>
#include <sstream>

#include "helpers.hpp"
#include "starlike/beta.hpp"
#include "starlike/error.hpp"
#include "starlike/transform.hpp"
#include "starlike/verifier.hpp"

using namespace starlike;
using testing_support::from_mu_nu;
using testing_support::random_unit_series;

TEST_CASE("starlike margin of the identity") {
  for (double xi : {0.0, 0.3}) {
    const auto r = starlike_margin(PowerSeries::identity(8), xi, default_disk_grid(), 1e-6, true);
    for (const auto& s : r.samples) CHECK(s.value == 1.0 - xi);
    CHECK(r.passed);
  }
}

TEST_CASE("starlike margin of Koebe") {
  std::vector<double> c(4001);
  for (std::size_t n = 0; n < c.size(); ++n) c[n] = static_cast<double>(n);
  DiskGrid g{{0.99}, 128};
  const auto r = starlike_margin(PowerSeries::from_real(c), 0.0, g);
  CHECK(r.min_value == doctest::Approx((1 - 0.99 * 0.99) / (1.99 * 1.99)).epsilon(1e-9));
  CHECK(std::abs(r.argmin_z - cplx{-0.99, 0.0}) < 1e-12);
}

TEST_CASE("zero of G gives a failed report with witness") {
  // G = z (1 + 2z) vanishes at -1/2.
  const std::vector<double> c{0, 1, 2};
  DiskGrid g{{0.5}, 4};
  const auto r = starlike_margin(PowerSeries::from_real(c), 0.0, g);
  CHECK_FALSE(r.passed);
  CHECK(std::abs(r.argmin_z - cplx{-0.5, 0.0}) < 1e-15);
}

TEST_CASE("H from coefficients matches the definition") {
  for (const auto& p : {from_mu_nu(1, 1, 1, 0), from_mu_nu(0.5, 2.0, 1.5, 0.3), ParameterSet::make(1.7, 0, 1.2, 0.2)}) {
    for (std::uint32_t seed = 0; seed < 5; ++seed) {
      const auto P = random_unit_series(seed, 20);
      const auto H = H_series(P, p);
      for (cplx z : {cplx{0.0, 0.0}, cplx{0.5, 0.3}, cplx{-0.9, 0.0}, cplx{0.1, 0.85}}) {
        CHECK(std::abs(eval(H, z) - H_definition(P, p, z)) <= 1e-9);
      }
    }
  }
}

TEST_CASE("membership of the extremal member") {
  const auto p = from_mu_nu(1, 1, 1, 0);
  const auto P = make_member({1, -1, -1.5}, p, 3000);
  const auto r = w_membership(P, p, -1.5, default_disk_grid());
  CHECK(r.passed);
  CHECK(r.best_phi == 0.0);
}

TEST_CASE("membership of the identity") {
  const auto p = ParameterSet::make(1, 0, 1, 0);
  const auto r = w_membership(PowerSeries::constant(1.0, 4), p, 0.9, default_disk_grid());
  CHECK(r.passed);
  CHECK(r.min_value == doctest::Approx(0.1));
  CHECK_THROWS_AS(w_membership(PowerSeries::constant(1.0, 4), p, 1.0, default_disk_grid()), Error);
}

TEST_CASE("membership refuses a long tail") {
  const auto p = from_mu_nu(1, 1, 1, 0);
  try {
    w_membership(make_member({1, -1, 0.0}, p, 512), p, 0.0, default_disk_grid());
    FAIL("expected TailTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::tail_too_large);
  }
}

TEST_CASE("third-order functional: coefficient path against differentiation") {
  for (const auto& p : {from_mu_nu(1, 1, 1, 0), from_mu_nu(0.5, 2.0, 1.5, 0.3), ParameterSet::make(1, 0, 1, 0)}) {
    for (std::uint32_t seed = 10; seed < 15; ++seed) {
      const auto F = shift_up(random_unit_series(seed, 24), 1);
      CHECK(max_coeff_distance(third_order_series(F, p), third_order_series_direct(F, p)) < 1e-12);
    }
  }
}

TEST_CASE("third-order functional of the identity is 1") {
  const auto r = third_order_functional(PowerSeries::identity(20), from_mu_nu(1, 1, 1, 0), 0.5, default_disk_grid());
  CHECK(r.min_value == doctest::Approx(0.5));
  CHECK(r.passed);
}

TEST_CASE("third-order functional on the c = 0 Bernardi extremal") {
  const auto p = ParameterSet::make(1, 0, 1, 0);
  const double beta = solve_beta(Weight::bernardi(0), p).beta;
  const auto T = apply_transform(make_member({1, -1, beta}, p, 3000), Weight::bernardi(0));
  const auto r = third_order_functional(recover_F(T, 1.0), p, beta, default_disk_grid());
  CHECK(r.min_value >= -1e-4);
}

TEST_CASE("sharpness probe") {
  const auto p = from_mu_nu(1, 1, 1, 0);
  const double beta = solve_beta(Weight::uniform(), p).beta;
  const auto G = G_series(apply_transform(make_member({1, -1, beta}, p, 512), Weight::uniform()));
  const auto r = sharpness_probe(G, 0.0, {0.9, 0.99, 0.999});
  CHECK(r.passed);
  CHECK(r.ray_values.back() < 0.01);

  const auto id = sharpness_probe(PowerSeries::identity(3), 1.0, {0.5, 0.9});
  CHECK(id.ray_values[0] == 0.0);
  CHECK(id.ray_values[1] == 0.0);
  CHECK_FALSE(id.passed);
  CHECK_THROWS_AS(sharpness_probe(G, 0.0, {0.99, 0.9}), Error);
}

TEST_CASE("csv dump") {
  const auto r = starlike_margin(PowerSeries::identity(3), 0.0, {{0.5}, 2}, 1e-6, true);
  std::ostringstream os;
  write_samples_csv(r, os);
  CHECK(os.str() == "re,im,value\n0.5,0,1\n-0.5,6.123233995736766e-17,1\n");
}
