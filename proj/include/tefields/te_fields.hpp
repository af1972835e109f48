#pragma once

#include <optional>
#include <utility>

#include "tefields/params.hpp"
#include "tefields/potential_kernel.hpp"
#include "tefields/quadrature.hpp"

namespace tefields {

struct EnergyDensity {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  double total = 0.0;
};

struct Pressure {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

struct FieldSample {
  Point3 point;
  double t = 0.0;
  Momentum3 momentum;
  EnergyDensity energy;
  Pressure pressure;
  std::optional<double> divergence;
};

/// Free-streaming shift r -> r - p s2 / m.
Point3 shifted_point(const Point3& p, const Momentum3& mom, double s2,
                     const PhysParams& params);

/// Interval of s2 outside which every kernel at p vanishes to double
/// precision: the jet-shifted x coordinate has left the Gaussian reach of
/// the cube. Unbounded above when p0 = 0.
std::pair<double, double> kernel_support(const Point3& p, const PhysParams& params);

/// x-momentum propagator kernel at lag s2:
///   -(2 s2 / m) h_x(sigma) + (p0 s2^2 / m^2) h_xx(sigma),
/// sigma the jet-shifted point.
double momentum_kernel_x(const Point3& p, double s2, const PhysParams& params);

/// y or z momentum kernel, -(2 s2 / m) dh/daxis at the shifted point.
double momentum_kernel_transverse(const Point3& p, double s2, const PhysParams& params,
                                  Axis axis);

/// x kinetic-energy kernel
///   2 h(sigma) - (4 p0 s2 / m) h_x(sigma) + (p0^2 s2^2 / m^2) h_xx(sigma).
double energy_kernel_x(const Point3& p, double s2, const PhysParams& params);

/// Kernel of the transverse energy densities, h at the shifted point.
double energy_kernel_transverse(const Point3& p, double s2, const PhysParams& params);

/// x-derivative of energy_kernel_x, built from h_x, h_xx, h_xxx.
double energy_kernel_x_dx(const Point3& p, double s2, const PhysParams& params);

/// Time-evolved momentum of the uniform x-jet at (p, t).
Momentum3 momentum_field(const Point3& p, double t, const PhysParams& params,
                         const QuadratureSpec& spec = {});

/// One component of momentum_field.
double momentum_component(const Point3& p, double t, const PhysParams& params,
                          const QuadratureSpec& spec, Axis axis);

EnergyDensity energy_field(const Point3& p, double t, const PhysParams& params,
                           const QuadratureSpec& spec = {});

/// Momentum transport, four times the energy density. Requires m = 1.
Pressure pressure_field(const Point3& p, double t, const PhysParams& params,
                        const QuadratureSpec& spec = {});

/// Momentum, energy and (when m = 1) pressure at one (point, time). With
/// m != 1 the pressure entries are NaN.
FieldSample sample_fields(const Point3& p, double t, const PhysParams& params,
                          const QuadratureSpec& spec = {});

/// Triangular time integral of kernel(s2) over [0, t] restricted to the
/// kernel support at p.
template <typename Kernel>
double time_evolve(const Point3& p, double t, const PhysParams& params,
                   const QuadratureSpec& spec, Kernel&& kernel) {
  const auto [lo, hi] = kernel_support(p, params);
  return triangular_double_integral(kernel, t, lo, hi, spec);
}

}  // namespace tefields
