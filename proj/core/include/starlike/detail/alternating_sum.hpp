#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace starlike::detail {

struct SeriesSum {
  double value = 0.0;
  double err_estimate = 0.0;
  std::size_t terms = 0;
  bool converged = false;
};

/// Sums an alternating series sum_{n>=0} term(n) by repeated averaging of
/// the trailing partial sums (Euler's transformation applied to partial
/// sums). Checkpoints double the term count; the series is accepted when two
/// successive accelerated estimates differ by at most tol * max(1, |value|).
/// Requires the term magnitudes to be eventually smooth in n, which holds
/// for every hypergeometric-type series used here.
template <class TermFn>
SeriesSum accelerated_alternating_sum(TermFn&& term, double tol,
                                      std::size_t max_terms,
                                      std::size_t min_terms = 16) {
  constexpr std::size_t kRounds = 24;
  std::vector<double> partial;
  partial.reserve(1024);
  double s = 0.0;
  double prev_estimate = 0.0;
  bool have_prev = false;
  std::size_t checkpoint = std::max<std::size_t>(min_terms, 16);

  for (std::size_t n = 0; n < max_terms; ++n) {
    const double a = term(n);
    s += a;
    partial.push_back(s);
    if (n + 1 != checkpoint) continue;

    const std::size_t rounds = std::min(kRounds, partial.size() - 1);
    std::vector<double> w(partial.end() - static_cast<std::ptrdiff_t>(rounds + 1),
                          partial.end());
    for (std::size_t r = 0; r < rounds; ++r) {
      for (std::size_t i = 0; i + 1 < w.size() - r; ++i) w[i] = 0.5 * (w[i] + w[i + 1]);
    }
    const double estimate = w[0];
    if (have_prev) {
      const double diff = std::abs(estimate - prev_estimate);
      if (diff <= tol * std::max(1.0, std::abs(estimate))) {
        return {estimate, diff, n + 1, true};
      }
    }
    prev_estimate = estimate;
    have_prev = true;
    checkpoint *= 2;
  }
  return {have_prev ? prev_estimate : s, INFINITY, partial.size(), false};
}

}  // namespace starlike::detail
