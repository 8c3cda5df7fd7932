#include "starlike/verifier.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "starlike/conditions.hpp"
#include "starlike/error.hpp"
#include "starlike/kernels.hpp"

namespace starlike {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

cplx grid_point(double r, std::size_t a, std::size_t angles) {
  return std::polar(r, 2.0 * std::numbers::pi * static_cast<double>(a) / static_cast<double>(angles));
}

double max_radius(const DiskGrid& g) {
  double r = 0.0;
  for (double x : g.radii) r = std::max(r, x);
  return r;
}

void check_grid(const DiskGrid& g) {
  if (g.radii.empty() || g.angles == 0) throw Error(ErrorCode::invalid_argument, "empty disk grid");
  for (double r : g.radii) {
    if (!(r > 0.0 && r < 1.0)) throw Error(ErrorCode::invalid_argument, "grid radii must lie in (0, 1)");
  }
}

// Minimum of Re(values) - shift over the grid, values produced by f(z).
template <class F>
VerificationReport scan(Quantity q, const DiskGrid& grid, double tolerance, bool keep, F&& f) {
  check_grid(grid);
  VerificationReport r;
  r.quantity = q;
  r.grid = grid;
  r.tolerance = tolerance;
  r.min_value = kInf;
  for (double rad : grid.radii) {
    for (std::size_t a = 0; a < grid.angles; ++a) {
      const cplx z = grid_point(rad, a, grid.angles);
      const double v = f(z);
      if (keep) r.samples.push_back({z, v});
      if (v < r.min_value) {
        r.min_value = v;
        r.argmin_z = z;
      }
    }
  }
  r.passed = r.min_value >= -tolerance;
  return r;
}

}  // namespace

std::string_view to_string(Quantity q) noexcept {
  switch (q) {
    case Quantity::starlike_margin: return "starlike_margin";
    case Quantity::w_membership: return "W_membership";
    case Quantity::third_order: return "third_order";
    case Quantity::sharpness: return "sharpness";
  }
  return "starlike_margin";
}

DiskGrid default_disk_grid(double rmax, std::size_t n_radii, std::size_t angles) {
  return {chebyshev_radii(n_radii, rmax), angles};
}

VerificationReport starlike_margin(const PowerSeries& G, double xi, const DiskGrid& grid,
                                   double tolerance, bool keep_samples) {
  if (G.size() < 2 || std::abs(G[0]) > 1e-14 || std::abs(G[1] - 1.0) > 1e-12) {
    throw Error(ErrorCode::invalid_argument, "starlike_margin needs G(0) = 0 and G'(0) = 1");
  }
  try {
    return scan(Quantity::starlike_margin, grid, tolerance, keep_samples,
                [&](cplx z) { return log_derivative_fraction(G, z).real() - xi; });
  } catch (const Error& e) {
    if (e.code() != ErrorCode::zero_denominator) throw;
    // Find the offending point again for the witness.
    VerificationReport r;
    r.quantity = Quantity::starlike_margin;
    r.grid = grid;
    r.tolerance = tolerance;
    r.min_value = -kInf;
    r.passed = false;
    for (double rad : grid.radii) {
      for (std::size_t a = 0; a < grid.angles; ++a) {
        const cplx z = grid_point(rad, a, grid.angles);
        if (std::abs(eval(G, z)) < 1e-14) {
          r.argmin_z = z;
          r.notes.push_back(e.what());
          return r;
        }
      }
    }
    r.notes.push_back(e.what());
    return r;
  }
}

PowerSeries H_series(const PowerSeries& fz_delta, const ParameterSet& p) {
  std::vector<cplx> c(fz_delta.coeffs().begin(), fz_delta.coeffs().end());
  for (std::size_t n = 0; n < c.size(); ++n) c[n] *= h_multiplier(p, n);
  return PowerSeries(std::move(c));
}

cplx H_definition(const PowerSeries& fz_delta, const ParameterSet& p, cplx z) {
  cplx P, P1;
  eval_with_derivative(fz_delta, z, P, P1);
  const cplx P2 = eval(derivative(derivative(fz_delta)), z);
  const double d = p.delta;
  const double inv = 1.0 / d;
  // Q = f/z = P^{1/delta}; f = z Q.
  const cplx Q = std::pow(P, inv);
  const cplx lp = P1 / P;
  const cplx Q1 = inv * Q * lp;
  const cplx Q2 = Q * (inv * (inv - 1.0) * lp * lp + inv * P2 / P);
  const cplx f = z * Q;
  const cplx f1 = Q + z * Q1;
  const cplx f2 = 2.0 * Q1 + z * Q2;
  // zf'/f = 1 + z Q'/Q avoids dividing by z at the origin.
  const cplx zf1_f = 1.0 + z * Q1 / Q;
  const cplx zf2_f1 = z * f2 / f1;
  (void)f;
  const double a = p.alpha, g = p.gamma;
  const cplx bracket = (1.0 - inv) * zf1_f + inv * (1.0 + zf2_f1);
  return (1.0 - a + 2.0 * g) * P + (a - 3.0 * g + g * bracket) * P * zf1_f;
}

VerificationReport w_membership(const PowerSeries& fz_delta, const ParameterSet& p, double beta,
                                const DiskGrid& grid, std::size_t phi_grid, bool keep_samples) {
  if (!(beta < 1.0)) throw Error(ErrorCode::invalid_argument, "class parameter beta must be < 1");
  if (phi_grid == 0) throw Error(ErrorCode::invalid_argument, "phi grid must be nonempty");
  check_grid(grid);
  const PowerSeries H = H_series(fz_delta, p);
  const double rmax = max_radius(grid);
  const std::size_t N = H.order();
  const double tail = std::abs(H[N]) * std::pow(rmax, static_cast<double>(N));
  if (N > 0 && tail > 1e-8) {
    std::ostringstream msg;
    msg << "series tail |H_N| r^N = " << tail << " exceeds 1e-8 at r = " << rmax
        << "; raise the truncation order or lower the radius";
    throw Error(ErrorCode::tail_too_large, msg.str());
  }
  std::vector<cplx> zs;
  std::vector<cplx> vals;
  for (double rad : grid.radii) {
    for (std::size_t a = 0; a < grid.angles; ++a) {
      const cplx z = grid_point(rad, a, grid.angles);
      zs.push_back(z);
      vals.push_back(eval(H, z) - beta);
    }
  }
  VerificationReport r;
  r.quantity = Quantity::w_membership;
  r.grid = grid;
  r.tolerance = 0.0;
  r.min_value = -kInf;
  for (std::size_t k = 0; k < phi_grid; ++k) {
    const double phi = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(phi_grid);
    const cplx rot = std::polar(1.0, phi);
    double m = kInf;
    std::size_t at = 0;
    for (std::size_t i = 0; i < vals.size(); ++i) {
      const double v = (rot * vals[i]).real();
      if (v < m) {
        m = v;
        at = i;
      }
    }
    if (m > r.min_value) {
      r.min_value = m;
      r.best_phi = phi;
      r.argmin_z = zs[at];
    }
  }
  if (keep_samples) {
    const cplx rot = std::polar(1.0, r.best_phi);
    for (std::size_t i = 0; i < vals.size(); ++i) r.samples.push_back({zs[i], (rot * vals[i]).real()});
  }
  r.passed = r.min_value > 0.0;
  return r;
}

namespace {

PowerSeries u_series(const PowerSeries& Fcal, const ParameterSet& p) {
  if (Fcal.size() < 17) throw Error(ErrorCode::invalid_argument, "third-order functional needs order >= 16");
  if (std::abs(Fcal[0]) > 1e-14 || std::abs(Fcal[1] - 1.0) > 1e-12) {
    throw Error(ErrorCode::invalid_argument, "Fcal must be normalized: Fcal(0) = 0, Fcal'(0) = 1");
  }
  return shift_up(series_pow(shift_down(Fcal, 1), p.delta), 1);
}

}  // namespace

PowerSeries third_order_series(const PowerSeries& Fcal, const ParameterSet& p) {
  const PowerSeries u = u_series(Fcal, p);
  std::vector<cplx> c(u.size() - 1);
  for (std::size_t n = 0; n + 1 < u.size(); ++n) {
    c[n] = static_cast<double>(n + 1) * u[n + 1] * h_multiplier(p, n);
  }
  return PowerSeries(std::move(c));
}

PowerSeries third_order_series_direct(const PowerSeries& Fcal, const ParameterSet& p) {
  const PowerSeries u = u_series(Fcal, p);
  const PowerSeries u1 = derivative(u);
  const PowerSeries u2 = derivative(u1);
  const PowerSeries u3 = derivative(u2);
  const double d = p.delta;
  const double A = (p.alpha - p.gamma * (1.0 - 1.0 / d)) / d;
  const double B = p.gamma / (d * d);
  return u1 + cplx{A, 0.0} * shift_up(u2, 1) + cplx{B, 0.0} * shift_up(u3, 2);
}

VerificationReport third_order_functional(const PowerSeries& Fcal, const ParameterSet& p,
                                          double beta, const DiskGrid& grid, double tolerance,
                                          bool keep_samples) {
  const PowerSeries T = third_order_series(Fcal, p);
  return scan(Quantity::third_order, grid, tolerance, keep_samples,
              [&](cplx z) { return eval(T, z).real() - beta; });
}

VerificationReport sharpness_probe(const PowerSeries& G, double xi,
                                   const std::vector<double>& radii_to_one) {
  if (radii_to_one.empty()) throw Error(ErrorCode::invalid_argument, "sharpness probe needs radii");
  VerificationReport r;
  r.quantity = Quantity::sharpness;
  r.grid = {radii_to_one, 1};
  r.tolerance = 10.0 * (1.0 - radii_to_one.back());
  bool decreasing = true;
  for (std::size_t i = 0; i < radii_to_one.size(); ++i) {
    const double rad = radii_to_one[i];
    if (!(rad > 0.0 && rad < 1.0)) throw Error(ErrorCode::invalid_argument, "radii must lie in (0, 1)");
    if (i > 0 && !(rad > radii_to_one[i - 1])) {
      throw Error(ErrorCode::invalid_argument, "sharpness radii must increase");
    }
    const cplx z{-rad, 0.0};
    cplx v, d;
    eval_with_derivative(G, z, v, d);
    const double R = std::abs(z * d - xi * v);
    r.ray_values.push_back(R);
    r.samples.push_back({z, R});
    if (i > 0 && !(R < r.ray_values[i - 1])) decreasing = false;
  }
  r.min_value = r.ray_values.back();
  r.argmin_z = {-radii_to_one.back(), 0.0};
  r.passed = decreasing && r.min_value < r.tolerance;
  if (!decreasing) r.notes.push_back("R(r) is not decreasing along the ray");
  return r;
}

void write_samples_csv(const VerificationReport& r, std::ostream& os) {
  os << "re,im,value\n";
  os.precision(17);
  for (const auto& s : r.samples) os << s.z.real() << ',' << s.z.imag() << ',' << s.value << '\n';
}

}  // namespace starlike
