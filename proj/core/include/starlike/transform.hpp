#pragma once

#include <cstddef>

#include "starlike/params.hpp"
#include "starlike/power_series.hpp"
#include "starlike/weights.hpp"

namespace starlike {

/// A member of the source class from the Moebius half-plane function
/// (1 + x z)/(1 + y z), |x| = |y| = 1. x = 1, y = -1 is the extremal one.
struct TestFunctionSpec {
  cplx x{1.0, 0.0};
  cplx y{-1.0, 0.0};
  double beta = 0.0;
};

/// Series of (f/z)^delta for the member whose H functional equals
/// beta + (1 - beta)(1 + x z)/(1 + y z):
///   c_0 = 1,  c_n = (1 - beta)(x - y)(-y)^{n-1} / m_n,
/// with m_n = (delta + n nu)(delta + n mu)/delta^2 the multiplier H applies
/// to the n-th coefficient. For gamma > 0 this is the psi convolution; for
/// gamma = 0 (m_n = 1 + n alpha/delta) it is the coefficient solution of the
/// first-order equation H = (1 - alpha) P + alpha P zf'/f.
/// Throws Error{invalid_argument} unless |x| = |y| = 1 within 1e-12 and
/// beta < 1.
PowerSeries make_member(const TestFunctionSpec& spec, const ParameterSet& p,
                        std::size_t N = kDefaultTruncation);

/// (F/z)^delta from (f/z)^delta: coefficient n times tau_n. Exactly the
/// Hadamard product with sum tau_n z^n.
PowerSeries apply_transform(const PowerSeries& fz_delta, const Weight& w);

/// F = z ((F/z)^delta)^{1/delta}.
PowerSeries recover_F(const PowerSeries& fz_delta_transformed, double delta);

/// G = z (F/z)^delta (a shift by one index).
PowerSeries G_series(const PowerSeries& fz_delta_transformed);

}  // namespace starlike
