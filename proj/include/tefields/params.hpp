#pragma once

#include <cmath>

#include "tefields/errors.hpp"

namespace tefields {

/// Physical and model constants. Number density is fixed to one.
///
/// Defaults are the plotting parameters used throughout: a = g = m = 1,
/// L = 10, p0 = 10, nu = 1.
struct PhysParams {
  double a = 1.0;    ///< potential width (inverse length squared)
  double g = 1.0;    ///< coupling energy
  double m = 1.0;    ///< particle mass
  double L = 10.0;   ///< cube edge
  double p0 = 10.0;  ///< initial x-jet momentum
  double nu = 1.0;   ///< kinematic viscosity, used by the Navier-Stokes check
  static constexpr double n0 = 1.0;

  /// Throws ValidationError naming the first offending field.
  void validate() const;

  friend bool operator==(const PhysParams&, const PhysParams&) = default;
};

struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend bool operator==(const Point3&, const Point3&) = default;
};

/// Mirror of a point under exchange of its y and z coordinates.
constexpr Point3 swap_yz(const Point3& p) { return {p.x, p.z, p.y}; }

struct Momentum3 {
  double px = 0.0;
  double py = 0.0;
  double pz = 0.0;

  friend bool operator==(const Momentum3&, const Momentum3&) = default;
};

enum class Axis { x = 0, y = 1, z = 2 };

}  // namespace tefields
