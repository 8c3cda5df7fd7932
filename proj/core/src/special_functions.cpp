#include "starlike/special_functions.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "starlike/detail/alternating_sum.hpp"
#include "starlike/error.hpp"

namespace starlike {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

// Lanczos partial sum A_g(x) for the shifted argument x = z - 1, z >= 1/2.
double lanczos_sum(double x) {
  double a = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) a += kLanczos[i] / (x + static_cast<double>(i));
  return a;
}

bool is_nonpositive_integer(double x) {
  return x <= 0.0 && std::abs(x - std::round(x)) < 1e-14;
}

constexpr std::size_t kMaxTerms = 100000;
constexpr std::size_t kMinTerms = 10;

double digamma(double x) {
  if (x <= 0.0) {
    if (x == std::floor(x)) throw Error(ErrorCode::non_positive_argument, "digamma pole");
    return digamma(1.0 - x) - std::numbers::pi / std::tan(std::numbers::pi * x);
  }
  double acc = 0.0;
  while (x < 10.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  const double r = 1.0 / (x * x);
  const double tail = r * (1.0 / 12 - r * (1.0 / 120 - r * (1.0 / 252 - r * (1.0 / 240 - r / 132))));
  return acc + std::log(x) - 0.5 / x - tail;
}

// 2F1(a, b; a + b + m; 1 - y) for integer m >= 0 and y in (0, 1/2]: the
// logarithmic connection formula.
double hyp2f1_integer_gap(double a, double b, int m, double y) {
  const double c = a + b + m;
  double finite = 0.0;
  if (m > 0) {
    double term = 1.0, sum = 0.0;
    for (int k = 0; k < m; ++k) {
      sum += term;
      if (k + 1 < m) term *= (a + k) * (b + k) / ((k + 1.0) * (1.0 - m + k)) * y;
    }
    finite = gamma_fn(m) * gamma_fn(c) * reciprocal_gamma(a + m) * reciprocal_gamma(b + m) * sum;
  }
  const double rg = reciprocal_gamma(a) * reciprocal_gamma(b);
  if (rg == 0.0 || y == 0.0) return finite;
  const double ly = std::log(y);
  double psi1 = digamma(1.0), psim = digamma(m + 1.0);
  double psia = digamma(a + m), psib = digamma(b + m);
  double term = std::pow(y, m) * reciprocal_gamma(m + 1.0);
  double sum = 0.0;
  for (int k = 0; k < 100000; ++k) {
    const double add = term * (ly - psi1 - psim + psia + psib);
    sum += add;
    if (std::abs(add) <= 1e-17 * std::abs(sum) && k > 2) break;
    term *= (a + m + k) * (b + m + k) / ((k + 1.0) * (k + m + 1.0)) * y;
    psi1 += 1.0 / (k + 1.0);
    psim += 1.0 / (k + m + 1.0);
    psia += 1.0 / (a + m + k);
    psib += 1.0 / (b + m + k);
  }
  const double sign = m % 2 == 0 ? 1.0 : -1.0;
  return finite - sign * gamma_fn(c) * rg * sum;
}

}  // namespace

double pochhammer(double x, unsigned n) {
  double r = 1.0;
  for (unsigned k = 0; k < n; ++k) r *= x + static_cast<double>(k);
  return r;
}

double log_gamma(double x) {
  if (!(x > 0.0)) {
    std::ostringstream msg;
    msg << "log_gamma requires x > 0 (got " << x << ")";
    throw Error(ErrorCode::non_positive_argument, msg.str());
  }
  if (x < 0.5) {
    // Reflection keeps the Lanczos sum in its accurate range.
    return std::log(std::numbers::pi / std::sin(std::numbers::pi * x)) - log_gamma(1.0 - x);
  }
  const double xm1 = x - 1.0;
  const double t = xm1 + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (xm1 + 0.5) * std::log(t) - t +
         std::log(lanczos_sum(xm1));
}

double gamma_fn(double x) {
  if (is_nonpositive_integer(x)) {
    throw Error(ErrorCode::non_positive_argument, "Gamma has a pole at a nonpositive integer");
  }
  if (x < 0.5) {
    return std::numbers::pi / (std::sin(std::numbers::pi * x) * gamma_fn(1.0 - x));
  }
  const double xm1 = x - 1.0;
  const double t = xm1 + kLanczosG + 0.5;
  return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, xm1 + 0.5) * std::exp(-t) *
         lanczos_sum(xm1);
}

double reciprocal_gamma(double x) {
  if (is_nonpositive_integer(x)) return 0.0;
  return 1.0 / gamma_fn(x);
}

HypergeometricValue pFq(const HypergeometricSpec& spec, double tol) {
  const auto& num = spec.numerator;
  const auto& den = spec.denominator;
  const double x = spec.argument;

  for (double d : den) {
    if (is_nonpositive_integer(d)) {
      std::ostringstream msg;
      msg << "pFq lower parameter " << d << " is a nonpositive integer";
      throw Error(ErrorCode::bad_denominator, msg.str());
    }
  }
  if (x == 0.0) return {1.0, 0.0, 1};

  bool terminating = false;
  for (double c : num) terminating = terminating || is_nonpositive_integer(c);

  const std::size_t p = num.size();
  const std::size_t q = den.size();
  if (!terminating) {
    if (p > q + 1) {
      throw Error(ErrorCode::divergent_series, "pFq with p > q + 1 diverges off the origin");
    }
    if (p == q + 1) {
      if (std::abs(x) > 1.0) {
        throw Error(ErrorCode::divergent_series, "pFq with p = q + 1 requires |x| <= 1");
      }
      const double excess = std::accumulate(den.begin(), den.end(), 0.0) -
                            std::accumulate(num.begin(), num.end(), 0.0);
      if (x == 1.0 && !(excess > 0.0)) {
        throw Error(ErrorCode::divergent_series,
                    "pFq at x = 1 requires sum(lower) - sum(upper) > 0");
      }
      if (x == -1.0 && !(excess > -1.0)) {
        throw Error(ErrorCode::divergent_series,
                    "pFq at x = -1 requires sum(lower) - sum(upper) > -1");
      }
    }
  }

  // term_{n+1} = term_n * prod(c + n) / prod(d + n) * x / (n + 1)
  auto ratio = [&](std::size_t n) {
    const double nn = static_cast<double>(n);
    double r = x / (nn + 1.0);
    for (double c : num) r *= c + nn;
    for (double d : den) r /= d + nn;
    return r;
  };

  if (x < -0.5 && !terminating) {
    double term = 1.0;
    std::size_t next = 0;
    auto term_at = [&](std::size_t n) {
      // Called with consecutive n starting at 0.
      if (n == 0) {
        term = 1.0;
        next = 1;
        return term;
      }
      while (next <= n) {
        term *= ratio(next - 1);
        ++next;
      }
      return term;
    };
    const auto s = detail::accelerated_alternating_sum(term_at, tol, kMaxTerms, kMinTerms);
    if (!s.converged) {
      throw Error(ErrorCode::divergent_series, "pFq: alternating series did not settle within the term cap");
    }
    return {s.value, s.err_estimate, s.terms};
  }

  double sum = 1.0;
  double term = 1.0;
  double prev_abs = 1.0;
  for (std::size_t n = 0; n < kMaxTerms; ++n) {
    term *= ratio(n);
    sum += term;
    const double cur_abs = std::abs(term);
    if (!std::isfinite(sum)) {
      throw Error(ErrorCode::divergent_series, "pFq partial sum overflowed");
    }
    if (term == 0.0 && terminating) return {sum, 0.0, n + 2};
    if (n + 1 >= kMinTerms && cur_abs < tol * std::abs(sum) && prev_abs < tol * std::abs(sum)) {
      return {sum, cur_abs, n + 2};
    }
    prev_abs = cur_abs;
  }
  throw Error(ErrorCode::divergent_series, "pFq reached the 100000-term cap");
}

double hyp2f1(double a, double b, double c, double x) { return hyp2f1(a, b, c, x, 1.0 - x); }

double hyp2f1(double a, double b, double c, double x, double one_minus_x) {
  if (!(x >= 0.0 && one_minus_x >= 0.0 && x <= 1.0)) {
    throw Error(ErrorCode::invalid_argument, "hyp2f1 is evaluated on [0, 1] only");
  }
  if (is_nonpositive_integer(a) || is_nonpositive_integer(b) || x <= 0.5) {
    return pFq({{a, b}, {c}, x}).value;
  }
  const double s = c - a - b;
  const double m = std::round(s);
  // Below sqrt(eps) from an integer the generic connection terms cancel
  // worse than treating the gap as exact.
  if (std::abs(s - m) < 1e-8) {
    if (m < 0.0) {
      // Euler: y^{c-a-b} F(c-a, c-b; c; x) has c - (c-a) - (c-b) = -m.
      return std::pow(one_minus_x, s) * hyp2f1(c - a, c - b, c, x, one_minus_x);
    }
    return hyp2f1_integer_gap(a, b, static_cast<int>(m), one_minus_x);
  }
  const double y = one_minus_x;
  double first = 0.0;
  const double rg1 = reciprocal_gamma(c - a) * reciprocal_gamma(c - b);
  if (rg1 != 0.0) {
    first = gamma_fn(c) * gamma_fn(s) * rg1 * pFq({{a, b}, {1.0 - s}, y}).value;
  }
  double second = 0.0;
  const double rg2 = reciprocal_gamma(a) * reciprocal_gamma(b);
  if (rg2 != 0.0) {
    second = std::pow(y, s) * gamma_fn(c) * gamma_fn(-s) * rg2 *
             pFq({{c - a, c - b}, {1.0 + s}, y}).value;
  }
  return first + second;
}

}  // namespace starlike
