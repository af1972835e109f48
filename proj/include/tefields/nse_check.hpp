#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tefields/params.hpp"
#include "tefields/quadrature.hpp"
#include "tefields/te_fields.hpp"

namespace tefields {

/// Central-difference estimate with its Richardson half-step error.
struct DifferenceEstimate {
  double value = 0.0;
  double error = 0.0;
};

/// Default finite-difference spacing for spatial derivatives of u.
inline double default_fd_step(const PhysParams& params) { return params.L / 200.0; }

/// u = p / m.
Momentum3 velocity(const Point3& p, double t, const PhysParams& params,
                   const QuadratureSpec& spec = {});

/// div u by fourth-order central differences with spacing step. The error is
/// the Richardson estimate from a second evaluation at step / 2.
DifferenceEstimate divergence(const Point3& p, double t, const PhysParams& params,
                              const QuadratureSpec& spec, double step);

/// du_x/dt from the exact derivative of the triangular time integral, a
/// single quadrature of the x kernel over [0, t].
double velocity_x_rate(const Point3& p, double t, const PhysParams& params,
                       const QuadratureSpec& spec = {});

/// Terms of the x-momentum balance dP/dx = nu lap(u_x) - (u . grad) u_x - du_x/dt.
struct NSEGradientTerms {
  double viscous = 0.0;    ///< nu lap(u_x)
  double advective = 0.0;  ///< (u . grad) u_x
  double rate = 0.0;       ///< du_x/dt

  /// Pressure gradient with the viscous term.
  double full() const { return viscous - advective - rate; }
  /// Reduced form that drops viscosity and keeps the advective sign positive.
  double reduced() const { return advective - rate; }
};

NSEGradientTerms nse_gradient_terms(const Point3& p, double t, const PhysParams& params,
                                    const QuadratureSpec& spec, double step);

/// x-gradient of pressure implied by substituting the TE velocity into the
/// Navier-Stokes x-momentum balance.
double nse_pressure_gradient_x(const Point3& p, double t, const PhysParams& params,
                               const QuadratureSpec& spec, double step);

/// Analytic x-gradient of the TE x-pressure. Requires m = 1.
double te_pressure_gradient_x(const Point3& p, double t, const PhysParams& params,
                              const QuadratureSpec& spec = {});

struct NSEComparisonPoint {
  Point3 point;
  double te_grad_px = 0.0;
  double nse_grad_px = 0.0;
  double reduced_nse_grad_px = 0.0;
  double divergence = 0.0;
  bool interior = false;
};

struct NSEReport {
  double t = 0.0;
  std::vector<NSEComparisonPoint> points;
  /// Fraction of points where the two gradients have the same sign (zero
  /// counts as its own sign).
  double sign_match_fraction = 1.0;
  /// Zero-lag normalized cross-correlation sum(a b) / sqrt(sum a^2 sum b^2);
  /// 1 when both vectors vanish, 0 when only one does.
  double correlation = 1.0;
  /// Same statistics for the reduced (inviscid) form.
  double reduced_sign_match_fraction = 1.0;
  double reduced_correlation = 1.0;
  std::optional<double> max_divergence_interior;
  std::optional<double> max_divergence_boundary;

  std::string header() const;
};

double sign_match_fraction(const std::vector<double>& a, const std::vector<double>& b);
double normalized_correlation(const std::vector<double>& a, const std::vector<double>& b);

/// Evaluates both gradients and the divergence at every point. A point is
/// interior when it lies at least boundary_width inside every face.
NSEReport compare_te_nse(const std::vector<Point3>& points, double t,
                         const PhysParams& params, const QuadratureSpec& spec, double step,
                         double boundary_width = 0.5);

}  // namespace tefields
