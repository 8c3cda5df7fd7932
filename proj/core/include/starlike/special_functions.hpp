#pragma once

#include <cstddef>
#include <vector>

namespace starlike {

/// Rising factorial (x)_n = x (x+1) ... (x+n-1), (x)_0 = 1.
double pochhammer(double x, unsigned n);

/// ln Gamma(x) for x > 0 (Lanczos, g = 7, nine coefficients; absolute error
/// below 1e-13 on the tested range). Throws Error{non_positive_argument}.
double log_gamma(double x);

/// Gamma(x) for real x that is not a nonpositive integer, using the Lanczos
/// sum with reflection for x < 1/2.
double gamma_fn(double x);

/// 1 / Gamma(x); zero at the poles.
double reciprocal_gamma(double x);

struct HypergeometricSpec {
  std::vector<double> numerator;
  std::vector<double> denominator;
  double argument = 0.0;
};

struct HypergeometricValue {
  double value = 0.0;
  /// Bound on the neglected tail (last term magnitude for direct sums,
  /// the change between accelerated estimates for alternating ones).
  double err_estimate = 0.0;
  std::size_t terms = 0;
};

/// Generalized hypergeometric series pFq at a real argument with |x| <= 1.
///
/// Positive or small arguments are summed directly until two successive
/// terms fall below tol * |sum|. Negative arguments of modulus above 1/2 are
/// alternating and slowly convergent near -1; those use accelerated
/// alternating summation on the partial sums.
///
/// Errors: BadDenominator when a lower parameter is a nonpositive integer,
/// DivergentSeries when the series does not converge at the argument or the
/// 100000-term cap is reached.
HypergeometricValue pFq(const HypergeometricSpec& spec, double tol = 1e-12);

/// Gauss 2F1(a, b; c; x) for x in [0, 1), robust as x -> 1 (linear
/// transformation to 1 - x). Used for the Hohlov weight factor.
double hyp2f1(double a, double b, double c, double x);

/// Same with the complement 1 - x supplied separately, so arguments within
/// rounding of 1 keep their true distance from the singular point. x = 1 is
/// accepted when c - a - b > 0.
double hyp2f1(double a, double b, double c, double x, double one_minus_x);

}  // namespace starlike
