#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "starlike/params.hpp"
#include "starlike/power_series.hpp"

namespace starlike {

enum class Quantity { starlike_margin, w_membership, third_order, sharpness };

std::string_view to_string(Quantity q) noexcept;

struct DiskGrid {
  std::vector<double> radii;
  std::size_t angles = 128;
};

/// 24 Chebyshev-type radii up to rmax (default 0.99), 128 angles.
DiskGrid default_disk_grid(double rmax = 0.99, std::size_t n_radii = 24, std::size_t angles = 128);

struct GridSample {
  cplx z;
  double value = 0.0;
};

struct VerificationReport {
  Quantity quantity = Quantity::starlike_margin;
  double min_value = 0.0;
  cplx argmin_z{};
  DiskGrid grid;
  bool passed = false;
  double tolerance = 0.0;
  /// w_membership: the rotation achieving the largest minimum.
  double best_phi = 0.0;
  /// sharpness: R(r) along the ray, one per radius.
  std::vector<double> ray_values;
  std::vector<GridSample> samples;
  std::vector<std::string> notes;
};

/// min over the grid of Re(z G'/G) - xi; passed when >= -tolerance. A zero
/// of G on the grid gives a failed report with that point as witness.
VerificationReport starlike_margin(const PowerSeries& G, double xi, const DiskGrid& grid,
                                   double tolerance = 1e-6, bool keep_samples = false);

/// H from (f/z)^delta by coefficient algebra: H_n = m_n P_n with
/// m_n = (delta + n nu)(delta + n mu)/delta^2. This is the monomial-shift
/// form (mu nu/delta^2) z^{1-delta/mu}(z^{delta/mu-delta/nu+1}(z^{delta/nu} P)')'
/// written coefficientwise; for gamma = 0 it reduces to m_n = 1 + n alpha/delta.
PowerSeries H_series(const PowerSeries& fz_delta, const ParameterSet& p);

/// H at z assembled from its definition, with f = z P^{1/delta}:
///   (1 - alpha + 2 gamma) P + (alpha - 3 gamma + gamma [(1 - 1/delta) zf'/f
///   + (1/delta)(1 + z f''/f')]) P zf'/f.
/// P, P', P'' are evaluated from the series and the powers are taken
/// pointwise on the principal branch, so no second truncation enters.
cplx H_definition(const PowerSeries& fz_delta, const ParameterSet& p, cplx z);

/// Exists phi with Re e^{i phi}(H - beta) > 0 on the grid. phi runs over
/// phi_grid equally spaced angles; passed needs a strictly positive best
/// minimum. Throws Error{invalid_argument} for beta >= 1 and
/// Error{tail_too_large} when |H_N| rmax^N exceeds 1e-8.
VerificationReport w_membership(const PowerSeries& fz_delta, const ParameterSet& p, double beta,
                                const DiskGrid& grid, std::size_t phi_grid = 360,
                                bool keep_samples = false);

/// u' + (1/delta)(alpha - gamma(1 - 1/delta)) z u'' + (gamma/delta^2) z^2 u'''
/// for u = z (Fcal/z)^delta, coefficientwise ((n+1) u_{n+1} m_n).
PowerSeries third_order_series(const PowerSeries& Fcal, const ParameterSet& p);
/// The same functional by differentiating the series three times.
PowerSeries third_order_series_direct(const PowerSeries& Fcal, const ParameterSet& p);

/// min Re(functional) - beta over the grid. Fcal needs Fcal_0 = 0,
/// Fcal_1 = 1 and order >= 16.
VerificationReport third_order_functional(const PowerSeries& Fcal, const ParameterSet& p,
                                          double beta, const DiskGrid& grid,
                                          double tolerance = 1e-6, bool keep_samples = false);

/// R(r) = |z G'(z) - xi G(z)| at z = -r along an increasing list of radii.
/// passed when R strictly decreases and the last value is below
/// 10 (1 - r_last).
VerificationReport sharpness_probe(const PowerSeries& G, double xi,
                                   const std::vector<double>& radii_to_one);

/// One "re,im,value" row per kept sample, with a header line.
void write_samples_csv(const VerificationReport& r, std::ostream& os);

}  // namespace starlike
