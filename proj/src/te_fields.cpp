#include "tefields/te_fields.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tefields {

namespace {

Momentum3 jet(const PhysParams& params) { return {params.p0, 0.0, 0.0}; }

void require_inputs(double t, const PhysParams& params, const QuadratureSpec& spec) {
  if (!(t >= 0) || !std::isfinite(t)) throw ValidationError("t", "t >= 0");
  params.validate();
  spec.validate();
}

// Distance past a face beyond which exp(-2 a w^2) and erfc underflow.
double gaussian_reach(double a) { return 28.0 / std::sqrt(2.0 * a); }

}  // namespace

Point3 shifted_point(const Point3& p, const Momentum3& mom, double s2,
                     const PhysParams& params) {
  return {p.x - mom.px * s2 / params.m, p.y - mom.py * s2 / params.m,
          p.z - mom.pz * s2 / params.m};
}

std::pair<double, double> kernel_support(const Point3& p, const PhysParams& params) {
  if (params.p0 == 0.0) return {0.0, std::numeric_limits<double>::infinity()};
  const double reach = gaussian_reach(params.a);
  const double speed = params.p0 / params.m;
  // sigma_x = x - speed * s2 must lie in [-reach, L + reach].
  double s_a = (p.x + reach) / speed;
  double s_b = (p.x - params.L - reach) / speed;
  if (s_a > s_b) std::swap(s_a, s_b);
  return {std::max(0.0, s_a), s_b};
}

double momentum_kernel_x(const Point3& p, double s2, const PhysParams& params) {
  const HPartials h = h_partials(shifted_point(p, jet(params), s2, params), params, 2);
  const double m = params.m;
  return -(2.0 * s2 / m) * h.d(Axis::x, 1) +
         (params.p0 * s2 * s2 / (m * m)) * h.d(Axis::x, 2);
}

double momentum_kernel_transverse(const Point3& p, double s2, const PhysParams& params,
                                  Axis axis) {
  if (axis == Axis::x) throw ValidationError("axis", "transverse axis must be y or z");
  const HPartials h = h_partials(shifted_point(p, jet(params), s2, params), params, 1);
  return -(2.0 * s2 / params.m) * h.d(axis, 1);
}

double energy_kernel_x(const Point3& p, double s2, const PhysParams& params) {
  const HPartials h = h_partials(shifted_point(p, jet(params), s2, params), params, 2);
  const double m = params.m;
  const double p0 = params.p0;
  return 2.0 * h.value - (4.0 * p0 * s2 / m) * h.d(Axis::x, 1) +
         (p0 * p0 * s2 * s2 / (m * m)) * h.d(Axis::x, 2);
}

double energy_kernel_transverse(const Point3& p, double s2, const PhysParams& params) {
  return h_partials(shifted_point(p, jet(params), s2, params), params, 0).value;
}

double energy_kernel_x_dx(const Point3& p, double s2, const PhysParams& params) {
  const HPartials h = h_partials(shifted_point(p, jet(params), s2, params), params, 3);
  const double m = params.m;
  const double p0 = params.p0;
  return 2.0 * h.d(Axis::x, 1) - (4.0 * p0 * s2 / m) * h.d(Axis::x, 2) +
         (p0 * p0 * s2 * s2 / (m * m)) * h.d(Axis::x, 3);
}

double momentum_component(const Point3& p, double t, const PhysParams& params,
                          const QuadratureSpec& spec, Axis axis) {
  require_inputs(t, params, spec);
  const double initial = axis == Axis::x ? params.p0 : 0.0;
  if (t == 0.0) return initial;
  if (axis == Axis::x) {
    return initial + time_evolve(p, t, params, spec, [&](double s) {
             return momentum_kernel_x(p, s, params);
           });
  }
  return time_evolve(p, t, params, spec, [&](double s) {
    return momentum_kernel_transverse(p, s, params, axis);
  });
}

Momentum3 momentum_field(const Point3& p, double t, const PhysParams& params,
                         const QuadratureSpec& spec) {
  return {momentum_component(p, t, params, spec, Axis::x),
          momentum_component(p, t, params, spec, Axis::y),
          momentum_component(p, t, params, spec, Axis::z)};
}

EnergyDensity energy_field(const Point3& p, double t, const PhysParams& params,
                           const QuadratureSpec& spec) {
  require_inputs(t, params, spec);
  EnergyDensity out;
  out.x = params.p0 * params.p0 / (2.0 * params.m);
  if (t > 0.0) {
    out.x += 0.5 * time_evolve(p, t, params, spec,
                               [&](double s) { return energy_kernel_x(p, s, params); });
    // With pz = 0 the z kernel collapses to 2 h(sigma); half of it remains.
    out.z = time_evolve(p, t, params, spec,
                        [&](double s) { return energy_kernel_transverse(p, s, params); });
    const Point3 q = swap_yz(p);
    out.y = time_evolve(q, t, params, spec,
                        [&](double s) { return energy_kernel_transverse(q, s, params); });
  }
  out.total = out.x + (out.y + out.z);
  return out;
}

namespace {

Pressure pressure_from_energy(const EnergyDensity& e) {
  return {4.0 * e.x, 4.0 * e.y, 4.0 * e.z};
}

}  // namespace

Pressure pressure_field(const Point3& p, double t, const PhysParams& params,
                        const QuadratureSpec& spec) {
  if (params.m != 1.0) throw UnsupportedMass(params.m);
  return pressure_from_energy(energy_field(p, t, params, spec));
}

FieldSample sample_fields(const Point3& p, double t, const PhysParams& params,
                          const QuadratureSpec& spec) {
  FieldSample s;
  s.point = p;
  s.t = t;
  s.momentum = momentum_field(p, t, params, spec);
  s.energy = energy_field(p, t, params, spec);
  if (params.m == 1.0) {
    s.pressure = pressure_from_energy(s.energy);
  } else {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    s.pressure = {nan, nan, nan};
  }
  return s;
}

}  // namespace tefields
