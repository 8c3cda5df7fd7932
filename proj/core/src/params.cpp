#include "starlike/params.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "starlike/error.hpp"

namespace starlike {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::complex_roots: return "ComplexRoots";
    case ErrorCode::negative_root: return "NegativeRoot";
    case ErrorCode::invalid_series: return "InvalidSeries";
    case ErrorCode::non_unit_constant_term: return "NonUnitConstantTerm";
    case ErrorCode::non_zero_constant_term: return "NonZeroConstantTerm";
    case ErrorCode::zero_denominator: return "ZeroDenominator";
    case ErrorCode::divergent_series: return "DivergentSeries";
    case ErrorCode::bad_denominator: return "BadDenominator";
    case ErrorCode::non_positive_argument: return "NonPositiveArgument";
    case ErrorCode::no_convergence: return "NoConvergence";
    case ErrorCode::param_out_of_range: return "ParamOutOfRange";
    case ErrorCode::ratio_is_minus_one: return "RatioIsMinusOne";
    case ErrorCode::precondition_violated: return "PreconditionViolated";
    case ErrorCode::unknown_operator: return "UnknownOperator";
    case ErrorCode::tail_too_large: return "TailTooLarge";
  }
  return "Unknown";
}

MuNu derive_mu_nu(double alpha, double gamma) {
  if (!(alpha >= 0.0) || !(gamma >= 0.0)) {
    throw Error(ErrorCode::invalid_argument,
                "alpha and gamma must be nonnegative");
  }
  if (gamma == 0.0) return {0.0, alpha};

  const double s = alpha - gamma;
  double disc = s * s - 4.0 * gamma;
  // Float noise at a double root.
  if (disc < 0.0 && disc > -1e-12 * std::max(1.0, s * s)) disc = 0.0;
  if (disc < 0.0) {
    std::ostringstream msg;
    msg << "x^2 - (alpha-gamma)x + gamma has complex roots (discriminant "
        << disc << ")";
    throw Error(ErrorCode::complex_roots, msg.str());
  }
  if (s < 0.0) {
    throw Error(ErrorCode::negative_root,
                "alpha < gamma gives negative mu and nu");
  }
  // Cancellation-free pair: the larger root from the sum, the smaller from
  // the product.
  const double nu = 0.5 * (s + std::sqrt(disc));
  const double mu = gamma / nu;
  return {std::min(mu, nu), std::max(mu, nu)};
}

double derive_xi(double delta, double zeta) {
  if (!(delta > 0.0)) {
    throw Error(ErrorCode::invalid_argument, "delta must be positive");
  }
  return 1.0 - delta + delta * zeta;
}

bool xi_in_theorem_range(double xi) noexcept {
  return xi >= 0.0 && xi <= 0.5;
}

ParameterSet ParameterSet::make(double alpha, double gamma, double delta,
                                double zeta) {
  ParameterSet p;
  p.alpha = alpha;
  p.gamma = gamma;
  p.delta = delta;
  p.zeta = zeta;
  const MuNu r = derive_mu_nu(alpha, gamma);
  p.mu = r.mu;
  p.nu = r.nu;
  p.xi = derive_xi(delta, zeta);
  if (!(zeta >= 0.0 && zeta < 1.0)) {
    throw Error(ErrorCode::invalid_argument, "zeta must lie in [0, 1)");
  }
  if (!(p.xi < 1.0)) {
    throw Error(ErrorCode::invalid_argument, "xi must be < 1");
  }

  if (delta < 1.0) p.warnings.emplace_back("delta < 1 is outside the theorem regime");
  const double lo = 1.0 - 1.0 / delta;
  const double hi = 1.0 - 1.0 / (2.0 * delta);
  if (zeta < lo - 1e-15 || zeta > hi + 1e-15) {
    std::ostringstream msg;
    msg << "zeta outside [" << lo << ", " << hi << "]";
    p.warnings.push_back(msg.str());
  }
  if (!xi_in_theorem_range(p.xi)) {
    p.warnings.emplace_back("XiOutOfRange: xi outside [0, 1/2]");
  }
  if (gamma == 0.0 && alpha == 0.0) {
    p.warnings.emplace_back("alpha = gamma = 0: the transform kernel is trivial");
  }
  return p;
}

ParameterSet ParameterSet::swapped() const {
  ParameterSet q = *this;
  std::swap(q.mu, q.nu);
  return q;
}

double monotone_exponent(const ParameterSet& p) noexcept {
  return 3.0 - 2.0 * p.delta * (1.0 - p.zeta);
}

}  // namespace starlike
