#include "starlike/transform.hpp"

#include <cmath>
#include <vector>

#include "starlike/error.hpp"
#include "starlike/kernels.hpp"

namespace starlike {

PowerSeries make_member(const TestFunctionSpec& spec, const ParameterSet& p, std::size_t N) {
  if (std::abs(std::abs(spec.x) - 1.0) > 1e-12 || std::abs(std::abs(spec.y) - 1.0) > 1e-12) {
    throw Error(ErrorCode::invalid_argument, "test function needs |x| = |y| = 1");
  }
  if (!(spec.beta < 1.0)) throw Error(ErrorCode::invalid_argument, "class parameter beta must be < 1");
  std::vector<cplx> c(N + 1);
  c[0] = 1.0;
  const cplx lead = (1.0 - spec.beta) * (spec.x - spec.y);
  cplx power{1.0, 0.0};  // (-y)^{n-1}
  for (std::size_t n = 1; n <= N; ++n) {
    c[n] = lead * power * psi_coefficient(p, n);
    power *= -spec.y;
  }
  return PowerSeries(std::move(c));
}

PowerSeries apply_transform(const PowerSeries& fz_delta, const Weight& w) {
  const auto tau = moments(w, fz_delta.order());
  std::vector<cplx> c(fz_delta.coeffs().begin(), fz_delta.coeffs().end());
  for (std::size_t n = 0; n < c.size(); ++n) c[n] *= tau[n];
  return PowerSeries(std::move(c));
}

PowerSeries recover_F(const PowerSeries& fz_delta_transformed, double delta) {
  if (!(delta > 0.0)) throw Error(ErrorCode::invalid_argument, "delta must be positive");
  return shift_up(series_pow(fz_delta_transformed, 1.0 / delta), 1);
}

PowerSeries G_series(const PowerSeries& fz_delta_transformed) {
  return shift_up(fz_delta_transformed, 1);
}

}  // namespace starlike
