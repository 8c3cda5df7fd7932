#include "starlike/power_series.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "starlike/error.hpp"

namespace starlike {

namespace {

bool finite(cplx c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

}  // namespace

PowerSeries::PowerSeries() : coeffs_(1, cplx{0.0, 0.0}) {}

PowerSeries::PowerSeries(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw Error(ErrorCode::invalid_series, "a power series needs at least one coefficient");
  }
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    if (!finite(coeffs_[n])) {
      std::ostringstream msg;
      msg << "non-finite coefficient at index " << n;
      throw Error(ErrorCode::invalid_series, msg.str());
    }
  }
}

PowerSeries PowerSeries::zero(std::size_t order) {
  return PowerSeries(std::vector<cplx>(order + 1, cplx{}));
}

PowerSeries PowerSeries::constant(cplx c, std::size_t order) {
  std::vector<cplx> v(order + 1, cplx{});
  v[0] = c;
  return PowerSeries(std::move(v));
}

PowerSeries PowerSeries::identity(std::size_t order) {
  std::vector<cplx> v(std::max<std::size_t>(order, 1) + 1, cplx{});
  v[1] = 1.0;
  return PowerSeries(std::move(v));
}

PowerSeries PowerSeries::geometric(std::size_t order) {
  return PowerSeries(std::vector<cplx>(order + 1, cplx{1.0, 0.0}));
}

PowerSeries PowerSeries::from_real(std::span<const double> coeffs) {
  return PowerSeries(std::vector<cplx>(coeffs.begin(), coeffs.end()));
}

PowerSeries PowerSeries::with_order(std::size_t order) const {
  std::vector<cplx> v(order + 1, cplx{});
  std::copy_n(coeffs_.begin(), std::min(coeffs_.size(), v.size()), v.begin());
  return PowerSeries(std::move(v));
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t n = std::max(a.size(), b.size());
  std::vector<cplx> v(n, cplx{});
  for (std::size_t i = 0; i < a.size(); ++i) v[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) v[i] += b[i];
  return PowerSeries(std::move(v));
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
  return a + cplx{-1.0, 0.0} * b;
}

PowerSeries operator*(cplx s, const PowerSeries& a) {
  std::vector<cplx> v(a.coeffs().begin(), a.coeffs().end());
  for (auto& c : v) c *= s;
  return PowerSeries(std::move(v));
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t n = std::min(a.size(), b.size());
  std::vector<cplx> v(n, cplx{});
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == cplx{}) continue;
    for (std::size_t j = 0; i + j < n; ++j) v[i + j] += a[i] * b[j];
  }
  return PowerSeries(std::move(v));
}

PowerSeries hadamard(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t n = std::min(a.size(), b.size());
  std::vector<cplx> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = a[i] * b[i];
  return PowerSeries(std::move(v));
}

PowerSeries derivative(const PowerSeries& s) {
  if (s.size() == 1) return PowerSeries::zero(0);
  std::vector<cplx> v(s.size() - 1);
  for (std::size_t n = 1; n < s.size(); ++n) v[n - 1] = static_cast<double>(n) * s[n];
  return PowerSeries(std::move(v));
}

PowerSeries shift_up(const PowerSeries& s, std::size_t k) {
  std::vector<cplx> v(s.size() + k, cplx{});
  std::copy(s.coeffs().begin(), s.coeffs().end(), v.begin() + static_cast<std::ptrdiff_t>(k));
  return PowerSeries(std::move(v));
}

PowerSeries shift_down(const PowerSeries& s, std::size_t k) {
  if (k >= s.size()) {
    throw Error(ErrorCode::invalid_argument, "shift_down past the truncation order");
  }
  for (std::size_t n = 0; n < k; ++n) {
    if (std::abs(s[n]) > 1e-14) {
      throw Error(ErrorCode::invalid_argument, "shift_down: leading coefficients must vanish");
    }
  }
  return PowerSeries(std::vector<cplx>(s.coeffs().begin() + static_cast<std::ptrdiff_t>(k),
                                       s.coeffs().end()));
}

PowerSeries series_log(const PowerSeries& s) {
  if (std::abs(s[0] - 1.0) > 1e-12) {
    throw Error(ErrorCode::non_unit_constant_term, "series_log requires c_0 = 1");
  }
  const std::size_t size = s.size();
  std::vector<cplx> L(size, cplx{});
  for (std::size_t n = 1; n < size; ++n) {
    cplx acc = static_cast<double>(n) * s[n];
    for (std::size_t k = 1; k < n; ++k) acc -= static_cast<double>(k) * L[k] * s[n - k];
    L[n] = acc / static_cast<double>(n);
  }
  return PowerSeries(std::move(L));
}

PowerSeries series_exp(const PowerSeries& s) {
  if (std::abs(s[0]) > 1e-12) {
    throw Error(ErrorCode::non_zero_constant_term, "series_exp requires c_0 = 0");
  }
  const std::size_t size = s.size();
  std::vector<cplx> E(size, cplx{});
  E[0] = 1.0;
  for (std::size_t n = 1; n < size; ++n) {
    cplx acc{};
    for (std::size_t k = 1; k <= n; ++k) acc += static_cast<double>(k) * s[k] * E[n - k];
    E[n] = acc / static_cast<double>(n);
  }
  return PowerSeries(std::move(E));
}

PowerSeries series_pow(const PowerSeries& s, double p) {
  if (std::abs(s[0] - 1.0) > 1e-12) {
    throw Error(ErrorCode::non_unit_constant_term, "series_pow requires c_0 = 1");
  }
  const std::size_t size = s.size();
  std::vector<cplx> P(size, cplx{});
  P[0] = 1.0;
  for (std::size_t n = 1; n < size; ++n) {
    cplx acc{};
    for (std::size_t k = 1; k <= n; ++k) {
      acc += ((p + 1.0) * static_cast<double>(k) - static_cast<double>(n)) * s[k] * P[n - k];
    }
    P[n] = acc / static_cast<double>(n);
  }
  return PowerSeries(std::move(P));
}

cplx eval(const PowerSeries& s, cplx z) {
  cplx acc{};
  for (std::size_t n = s.size(); n-- > 0;) acc = acc * z + s[n];
  return acc;
}

void eval_with_derivative(const PowerSeries& s, cplx z, cplx& value, cplx& deriv) {
  cplx v{};
  cplx d{};
  for (std::size_t n = s.size(); n-- > 0;) {
    d = d * z + v;
    v = v * z + s[n];
  }
  value = v;
  deriv = d;
}

cplx log_derivative_fraction(const PowerSeries& s, cplx z) {
  cplx value;
  cplx deriv;
  eval_with_derivative(s, z, value, deriv);
  if (std::abs(value) < 1e-14) {
    std::ostringstream msg;
    msg << "series vanishes at z = " << z;
    throw Error(ErrorCode::zero_denominator, msg.str());
  }
  return z * deriv / value;
}

double max_coeff_distance(const PowerSeries& a, const PowerSeries& b) {
  double d = 0.0;
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const cplx x = i < a.size() ? a[i] : cplx{};
    const cplx y = i < b.size() ? b[i] : cplx{};
    d = std::max(d, std::abs(x - y));
  }
  return d;
}

}  // namespace starlike
