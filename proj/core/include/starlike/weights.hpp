#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "starlike/params.hpp"
#include "starlike/quadrature.hpp"

namespace starlike {

enum class WeightKind {
  bernardi,
  komatu,
  hohlov,
  carlson_shaffer,
  two_param,
  ali_singh,
  uniform,
  custom,
};

std::string_view to_string(WeightKind kind) noexcept;
/// Throws Error{unknown_operator} for an unrecognized name.
WeightKind weight_kind_from_string(std::string_view name);

/// Caller-supplied weight. value need not be normalized; the constant K is
/// computed by quadrature. The derivatives are only needed by the
/// differential-bound check and may be left empty.
struct CustomWeight {
  std::string name = "custom";
  std::function<double(double, double)> value;  // (t, 1 - t)
  std::function<double(double)> derivative;
  std::function<double(double)> second_derivative;
  Singularity hint = Singularity::both;
};

/// A normalized weight lambda(t) on (0, 1), int_0^1 lambda = 1.
///
/// Catalog members evaluate in closed form (the Hohlov factor through
/// hyp2f1). Immutable; copies share the custom callbacks.
class Weight {
 public:
  static Weight bernardi(double c);
  static Weight komatu(double k, double p);
  static Weight hohlov(double a, double b, double c);
  static Weight carlson_shaffer(double b, double c);
  /// Canonical order is irrelevant: the weight is symmetric in (a, b).
  static Weight two_param(double a, double b);
  static Weight ali_singh(double k);
  static Weight uniform();
  static Weight custom(CustomWeight spec);

  WeightKind kind() const noexcept { return kind_; }
  const std::map<std::string, double>& params() const noexcept { return params_; }
  double param(const std::string& name) const;
  /// The constant K in lambda = K * (shape).
  double normalization() const noexcept { return K_; }
  Singularity hint() const noexcept { return hint_; }
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

  /// lambda(t) given t and 1 - t separately.
  double value(double t, double one_minus_t) const;
  double value(double t) const { return value(t, 1.0 - t); }
  double derivative(double t) const;
  double second_derivative(double t) const;
  /// t lambda'(t) / lambda(t).
  double log_derivative(double t) const;

  /// True when moment(n) has a closed form (every catalog member).
  bool has_closed_moments() const noexcept { return kind_ != WeightKind::custom; }

 private:
  Weight() = default;

  WeightKind kind_ = WeightKind::uniform;
  std::map<std::string, double> params_;
  double K_ = 1.0;
  // Cached copies of params_ for the evaluation paths.
  double a_ = 0.0, b_ = 0.0, c_ = 0.0, k_ = 0.0, p_ = 1.0;
  Singularity hint_ = Singularity::none;
  std::vector<std::string> warnings_;
  std::shared_ptr<const CustomWeight> custom_;
};

/// Factory keyed by name ("bernardi", "komatu", "hohlov", "carlson_shaffer",
/// "two_param", "ali_singh", "uniform"). Missing parameters default to the
/// values of the paper's simplest member (c = 0, k = 0, p = 1, ...).
/// Throws Error{param_out_of_range} naming the violated bound and
/// Error{unknown_operator} for an unknown kind.
Weight make_weight(std::string_view kind, const std::map<std::string, double>& params);

/// tau_n = int_0^1 t^n lambda(t) dt. Closed form for catalog members,
/// quadrature otherwise.
double moment(const Weight& w, unsigned n);
/// tau_0 .. tau_N.
std::vector<double> moments(const Weight& w, std::size_t N);

/// int_t^1 lambda(s) s^{-e} ds for an exponent e.
double weighted_tail(const Weight& w, double exponent, double t, double tol = 1e-12);

/// Lambda_nu^delta(t) = int_t^1 lambda(s) s^{-delta/nu} ds. Requires nu > 0.
double lambda_cap(const Weight& w, const ParameterSet& p, double t, double tol = 1e-12);

/// Pi_{mu,nu}^delta(t). For gamma > 0 the nested integral
/// int_t^1 Lambda_nu(s) s^{-(delta/mu - delta/nu + 1)} ds, evaluated with
/// the order of integration swapped so only one quadrature remains; for
/// gamma = 0 it is Lambda_alpha^delta(t).
double pi_cap(const Weight& w, const ParameterSet& p, double t, double tol = 1e-10);

/// Lambda and Pi sampled on an ascending grid in (0, 1].
struct CumulativeTables {
  std::vector<double> grid;
  std::vector<double> lambda_cap;
  std::vector<double> pi_cap;
};

/// Builds both tables in one right-to-left sweep. Each value is the sum of
/// the piece integrals between consecutive grid points, so the cost is one
/// short nested quadrature per grid interval.
CumulativeTables build_cumulative_tables(const Weight& w, const ParameterSet& p,
                                         std::vector<double> grid);

struct LimitConditions {
  bool lambda_vanishes = false;
  bool pi_vanishes = false;
  std::vector<double> sample_t;
  std::vector<double> lambda_samples;  // t^{delta/nu} Lambda(t)
  std::vector<double> pi_samples;      // t^{delta/mu} Pi(t)
};

/// Sample t^{delta/nu} Lambda and t^{delta/mu} Pi at t = 1e-2, 1e-3, 1e-4.
/// A sequence is accepted when every value is below half of the previous one
/// and the last is below a tenth of the first. Requires gamma > 0
/// (Error{precondition_violated}).
LimitConditions limit_conditions(const Weight& w, const ParameterSet& p);

}  // namespace starlike
