#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "starlike/params.hpp"
#include "starlike/power_series.hpp"
#include "starlike/quadrature.hpp"
#include "starlike/weights.hpp"

namespace starlike {

/// One inequality of a parameter table. slack >= 0 (or > 0 for strict
/// bounds) means the inequality holds; hypotheses are the theorem's standing
/// assumptions and do not enter the margin.
struct Constraint {
  std::string name;
  double slack = 0.0;
  bool satisfied = false;
  bool hypothesis = false;
};

struct ConditionReport {
  /// T3_3_monotone, T4_1_gamma_pos, T4_2_gamma_zero, op_bound:<kind> or
  /// N_functional.
  std::string theorem_id;
  /// gamma_positive or gamma_zero.
  std::string branch;
  bool passed = false;
  /// False when the paper states no condition for this configuration; then
  /// passed is false and margin is NaN.
  bool covered = true;
  /// Signed slack; negative means violated.
  double margin = 0.0;
  double tolerance = 0.0;
  /// Where the margin is attained: a point t in (0, 1) for the grid checks,
  /// or (z, epsilon) for the N functional.
  double witness_t = 0.0;
  cplx witness_z{};
  cplx witness_epsilon{};
  double witness_value = 0.0;
  std::vector<Constraint> constraints;
  std::map<std::string, double> diagnostics;
  std::vector<std::string> notes;
};

/// Chebyshev-spaced points in (eps, 1 - eps), ascending, clustered at both
/// ends.
std::vector<double> chebyshev_grid(std::size_t n, double eps = 1e-4);

/// k(t) = t^{delta/mu - 1} Pi(t) / ((1 + t)(1 - t)^{3 - 2 delta (1 - zeta)})
/// (gamma = 0: t^{delta/alpha - 1} Lambda_alpha(t) / ((1 + t)(1 - t)^{1 + 2 xi}))
/// sampled on the grid.
std::vector<double> monotone_function_samples(const Weight& w, const ParameterSet& p,
                                              const std::vector<double>& grid);

/// k(t) must decrease on (0, 1). Sampled on a Chebyshev grid in
/// (1e-4, 1 - 1e-4); margin = -max_j (k_{j+1} - k_j) / max|k|, passed when
/// margin >= -1e-9.
ConditionReport check_monotone_T33(const Weight& w, const ParameterSet& p,
                                   std::size_t grid_size = 2001);

/// sup_t t lambda'(t)/lambda(t) over a 2001-point grid against
/// 5 - delta/mu - delta/nu (gamma > 0, needs 1 <= delta <= min(mu, nu)) or
/// 3 - delta/alpha (gamma = 0, needs alpha in (0, delta/3] or [delta, inf)).
/// The gamma = 0 bound is only stated for xi = 0; other xi give a report
/// with covered = false. Unmet preconditions throw
/// Error{precondition_violated}.
ConditionReport check_differential_bound(const Weight& w, const ParameterSet& p);

/// The per-operator parameter tables, as pure arithmetic. kind is a catalog
/// name; params use the same keys as make_weight. Throws
/// Error{unknown_operator} for custom or unknown kinds.
ConditionReport check_operator_bounds(std::string_view kind,
                                      const std::map<std::string, double>& params,
                                      const ParameterSet& p);

/// h_xi(w) / w = (1 + c w) / (1 - w)^2, c = (eps + 2 xi - 1) / (2 (1 - xi)).
/// Equals 1 at w = 0.
cplx h_xi_over_w(cplx w, double xi, cplx epsilon);

/// N(z, eps) = int_0^1 M(t) (Re h_xi(tz)/(tz) - (1 - xi(1+t))/((1 - xi)(1+t)^2)) dt
/// with M(t) = t^{delta/mu - 1} Pi(t) (gamma > 0) or t^{delta/alpha - 1}
/// Lambda_alpha(t) (gamma = 0), by adaptive quadrature with Pi from pi_cap.
double eval_N_functional(const Weight& w, const ParameterSet& p, cplx z, cplx epsilon,
                         double tol = 1e-9);

/// The same functional on a fixed tanh-sinh rule with M precomputed once,
/// for repeated evaluation over (z, eps) grids.
class NFunctional {
 public:
  NFunctional(const Weight& w, const ParameterSet& p, int level = 6);
  double operator()(cplx z, cplx epsilon) const;
  std::size_t nodes() const noexcept { return t_.size(); }

 private:
  double xi_;
  std::vector<double> t_;
  std::vector<double> wm_;    // rule weight times M(t)
  std::vector<double> base_;  // the subtracted real kernel
};

/// r_j = rmax sin(pi (j + 1) / (2 n)), j = 0..n-1: Chebyshev-type radii
/// crowding toward rmax.
std::vector<double> chebyshev_radii(std::size_t n, double rmax);

struct NGrid {
  std::vector<double> radii = chebyshev_radii(24, 0.995);
  std::size_t angles = 64;
  std::size_t epsilons = 16;
};

/// Minimum of N over z = r e^{i theta}, eps = e^{i phi} on the product grid
/// (z = 0 skipped). passed when the minimum is >= -1e-6.
ConditionReport minimize_N(const Weight& w, const ParameterSet& p, const NGrid& grid = {});

}  // namespace starlike
