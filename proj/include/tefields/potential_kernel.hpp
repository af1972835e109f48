#pragma once

#include <array>

#include "tefields/params.hpp"

namespace tefields {

inline constexpr int kMaxHOrder = 4;

/// Gaussian pair potential g * exp(-a |p - q|^2).
double pair_potential(const Point3& p, const Point3& q, const PhysParams& params);

/// Square of the x-component of the force exerted at q by a particle at p.
/// Only the brute-force oracle integrates this directly.
double force_x_squared(const Point3& p, const Point3& q, const PhysParams& params);

/// order-th derivative of the axial factor
///   Ix(x) = integral over u in [0, L] of 4 a^2 (u - x)^2 exp(-2 a (u - x)^2).
/// Defined on the whole real line. order must be in [0, 4].
double axial_factor(double x, const PhysParams& params, int order);

/// order-th derivative of the transverse factor
///   Iy(y) = integral over v in [0, L] of exp(-2 a (v - y)^2).
double transverse_factor(double y, const PhysParams& params, int order);

/// Value and pure spatial partials of the force-squared cube integral
///   h(x, y, z) = g^2 Ix(x) Iy(y) Iy(z).
struct HPartials {
  double value = 0.0;
  /// pure[axis][n] = d^n h / d axis^n; pure[axis][0] == value.
  std::array<std::array<double, kMaxHOrder + 1>, 3> pure{};
  int max_order = 0;

  double d(Axis axis, int order) const;
};

/// Closed-form h and its pure partials up to max_order per axis.
/// Finite for every finite input.
HPartials h_partials(const Point3& p, const PhysParams& params, int max_order);

namespace detail {

/// Physicists' Hermite polynomial H_n(xi) by three-term recurrence.
double hermite(int n, double xi);

/// n-th derivative of exp(-2 a w^2).
double gaussian_derivative(double w, double a, int n);

/// n-th derivative of 4 a^2 w^2 exp(-2 a w^2).
double weighted_gaussian_derivative(double w, double a, int n);

}  // namespace detail

}  // namespace tefields
