#pragma once

#include <string>
#include <vector>

namespace starlike {

/// Roots of x^2 - (alpha - gamma) x + gamma = 0, ordered mu <= nu.
struct MuNu {
  double mu = 0.0;
  double nu = 0.0;
};

/// Throws Error{complex_roots} when the discriminant is negative beyond
/// float noise and Error{negative_root} when a root is negative.
MuNu derive_mu_nu(double alpha, double gamma);

/// 1 - delta + delta * zeta. Out-of-range values are reported by
/// xi_in_theorem_range, not rejected here.
double derive_xi(double delta, double zeta);

bool xi_in_theorem_range(double xi) noexcept;

/// The problem's dial: (alpha, gamma, delta, zeta) plus the derived
/// (mu, nu, xi). Construct through make(); the fields are kept public for
/// read access by the numeric modules.
struct ParameterSet {
  double alpha = 0.0;
  double gamma = 0.0;
  double delta = 1.0;
  double zeta = 0.0;
  double mu = 0.0;
  double nu = 0.0;
  double xi = 0.0;
  /// Soft violations of the theorem regime (delta >= 1, zeta window,
  /// xi in [0, 1/2]). Never fatal.
  std::vector<std::string> warnings;

  static ParameterSet make(double alpha, double gamma, double delta,
                           double zeta);

  bool gamma_positive() const noexcept { return gamma > 0.0; }

  /// Same parameters with mu and nu swapped. Only meaningful for checking
  /// that symmetric quantities are order independent.
  ParameterSet swapped() const;
};

/// 3 - 2 delta (1 - zeta): the exponent of (1 - t) in the monotonicity
/// condition. Algebraically equal to 1 + 2 xi.
double monotone_exponent(const ParameterSet& p) noexcept;

}  // namespace starlike
