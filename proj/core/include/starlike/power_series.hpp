#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace starlike {

using cplx = std::complex<double>;

inline constexpr std::size_t kDefaultTruncation = 64;

/// Truncated Taylor series sum_{n=0}^{N} c_n z^n with complex coefficients.
/// Immutable once built; every operation returns a new series. All
/// coefficients are finite (checked on construction).
class PowerSeries {
 public:
  /// The zero series of order 0.
  PowerSeries();
  explicit PowerSeries(std::vector<cplx> coeffs);

  static PowerSeries zero(std::size_t order);
  static PowerSeries constant(cplx c, std::size_t order);
  /// The series of z.
  static PowerSeries identity(std::size_t order);
  /// sum z^n; the identity element of the Hadamard product.
  static PowerSeries geometric(std::size_t order);
  static PowerSeries from_real(std::span<const double> coeffs);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  const cplx& operator[](std::size_t n) const { return coeffs_[n]; }
  std::span<const cplx> coeffs() const noexcept { return coeffs_; }

  /// Copy truncated (or zero-padded) to the given order.
  PowerSeries with_order(std::size_t order) const;

 private:
  std::vector<cplx> coeffs_;
};

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator*(cplx s, const PowerSeries& a);
/// Cauchy product truncated to min(order(a), order(b)). Direct O(N^2).
PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);

/// Termwise product a_n b_n (convolution of analytic functions).
PowerSeries hadamard(const PowerSeries& a, const PowerSeries& b);

PowerSeries derivative(const PowerSeries& s);
/// Multiply by z^k; the order grows by k.
PowerSeries shift_up(const PowerSeries& s, std::size_t k = 1);
/// Divide by z^k; requires the first k coefficients to vanish (1e-14).
PowerSeries shift_down(const PowerSeries& s, std::size_t k = 1);

/// L with exp(L) = s, via s L' = s'. Requires c_0 = 1 within 1e-12.
PowerSeries series_log(const PowerSeries& s);
/// E with E' = s' E, E_0 = 1. Requires c_0 = 0 within 1e-12.
PowerSeries series_exp(const PowerSeries& s);
/// s^p = exp(p log s) for c_0 = 1, computed with the J.C.P. Miller
/// recurrence n P_n = sum_k ((p+1)k - n) s_k P_{n-k}.
PowerSeries series_pow(const PowerSeries& s, double p);

/// Horner evaluation.
cplx eval(const PowerSeries& s, cplx z);
/// Value and first derivative in one Horner pass.
void eval_with_derivative(const PowerSeries& s, cplx z, cplx& value,
                          cplx& deriv);

/// z s'(z) / s(z). Throws Error{zero_denominator} when |s(z)| < 1e-14.
cplx log_derivative_fraction(const PowerSeries& s, cplx z);

/// max |c_n - d_n| over the common range, plus |c_n| beyond it.
double max_coeff_distance(const PowerSeries& a, const PowerSeries& b);

}  // namespace starlike
