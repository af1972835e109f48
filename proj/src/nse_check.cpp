#include "tefields/nse_check.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace tefields {

namespace {

void require_step(double step) {
  if (!(step > 0) || !std::isfinite(step)) throw ValidationError("fd_step", "fd_step > 0");
}

Point3 offset(Point3 p, Axis axis, double d) {
  switch (axis) {
    case Axis::x: p.x += d; break;
    case Axis::y: p.y += d; break;
    case Axis::z: p.z += d; break;
  }
  return p;
}

double coord(const Point3& p, Axis axis) {
  switch (axis) {
    case Axis::x: return p.x;
    case Axis::y: return p.y;
    case Axis::z: return p.z;
  }
  return 0.0;
}

// Samples f at -2h, -h, +h, +2h along one axis.
struct Stencil {
  double m2, m1, p1, p2;

  double first(double h) const { return (-p2 + 8.0 * p1 - 8.0 * m1 + m2) / (12.0 * h); }
  double second(double center, double h) const {
    return (-p2 + 16.0 * p1 - 30.0 * center + 16.0 * m1 - m2) / (12.0 * h * h);
  }
};

template <typename F>
Stencil sample_stencil(const Point3& p, Axis axis, double h, F&& f) {
  return {f(offset(p, axis, -2.0 * h)), f(offset(p, axis, -h)), f(offset(p, axis, h)),
          f(offset(p, axis, 2.0 * h))};
}

double velocity_component(const Point3& p, double t, const PhysParams& params,
                          const QuadratureSpec& spec, Axis axis) {
  return momentum_component(p, t, params, spec, axis) / params.m;
}

double divergence_at_step(const Point3& p, double t, const PhysParams& params,
                          const QuadratureSpec& spec, double h) {
  double d[3];
  for (Axis axis : {Axis::x, Axis::y, Axis::z}) {
    const Stencil s = sample_stencil(p, axis, h, [&](const Point3& q) {
      return velocity_component(q, t, params, spec, axis);
    });
    d[static_cast<int>(axis)] = s.first(h);
  }
  return d[0] + (d[1] + d[2]);
}

}  // namespace

Momentum3 velocity(const Point3& p, double t, const PhysParams& params,
                   const QuadratureSpec& spec) {
  const Momentum3 mom = momentum_field(p, t, params, spec);
  return {mom.px / params.m, mom.py / params.m, mom.pz / params.m};
}

DifferenceEstimate divergence(const Point3& p, double t, const PhysParams& params,
                              const QuadratureSpec& spec, double step) {
  require_step(step);
  const double coarse = divergence_at_step(p, t, params, spec, step);
  const double fine = divergence_at_step(p, t, params, spec, 0.5 * step);
  // Fourth order: D(h) - D(h/2) ~ (15/16) C h^4.
  return {coarse, (16.0 / 15.0) * std::abs(coarse - fine)};
}

double velocity_x_rate(const Point3& p, double t, const PhysParams& params,
                       const QuadratureSpec& spec) {
  if (!(t >= 0)) throw ValidationError("t", "t >= 0");
  const auto [lo, hi] = kernel_support(p, params);
  const double a = std::max(lo, 0.0);
  const double b = std::min(hi, t);
  if (!(a < b)) return 0.0;
  return integrate_1d([&](double s) { return momentum_kernel_x(p, s, params); }, a, b, spec)
             .value /
         params.m;
}

NSEGradientTerms nse_gradient_terms(const Point3& p, double t, const PhysParams& params,
                                    const QuadratureSpec& spec, double step) {
  require_step(step);
  const Momentum3 u = velocity(p, t, params, spec);
  auto ux = [&](const Point3& q) { return velocity_component(q, t, params, spec, Axis::x); };

  const double u_along[3] = {u.px, u.py, u.pz};
  double second[3];
  double transport[3];
  for (Axis axis : {Axis::x, Axis::y, Axis::z}) {
    const int i = static_cast<int>(axis);
    const Stencil s = sample_stencil(p, axis, step, ux);
    second[i] = s.second(u.px, step);
    transport[i] = u_along[i] * s.first(step);
  }

  NSEGradientTerms terms;
  terms.viscous = params.nu * (second[0] + (second[1] + second[2]));
  terms.advective = transport[0] + (transport[1] + transport[2]);
  terms.rate = velocity_x_rate(p, t, params, spec);
  return terms;
}

double nse_pressure_gradient_x(const Point3& p, double t, const PhysParams& params,
                               const QuadratureSpec& spec, double step) {
  return nse_gradient_terms(p, t, params, spec, step).full();
}

double te_pressure_gradient_x(const Point3& p, double t, const PhysParams& params,
                              const QuadratureSpec& spec) {
  if (params.m != 1.0) throw UnsupportedMass(params.m);
  if (!(t >= 0)) throw ValidationError("t", "t >= 0");
  if (t == 0.0) return 0.0;
  // d/dx of 4 * (1/2) * T[energy kernel].
  return 2.0 * time_evolve(p, t, params, spec,
                           [&](double s) { return energy_kernel_x_dx(p, s, params); });
}

double sign_match_fraction(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw ValidationError("points", "gradient vectors differ in size");
  if (a.empty()) return 1.0;
  auto sign = [](double v) { return (v > 0) - (v < 0); };
  std::size_t matches = 0;
  for (std::size_t i = 0; i < a.size(); ++i) matches += sign(a[i]) == sign(b[i]);
  return static_cast<double>(matches) / static_cast<double>(a.size());
}

double normalized_correlation(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw ValidationError("points", "gradient vectors differ in size");
  double ab = 0.0;
  double aa = 0.0;
  double bb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ab += a[i] * b[i];
    aa += a[i] * a[i];
    bb += b[i] * b[i];
  }
  if (aa == 0.0 && bb == 0.0) return 1.0;
  if (aa == 0.0 || bb == 0.0) return 0.0;
  return std::clamp(ab / std::sqrt(aa * bb), -1.0, 1.0);
}

std::string NSEReport::header() const {
  std::ostringstream os;
  os << "# dP/dx from TE: analytic x-derivative of 4 * energy_x\n"
     << "# dP/dx from NSE (full):    nu*lap(u_x) - (u.grad)u_x - du_x/dt\n"
     << "# dP/dx from NSE (reduced): (u.grad)u_x - du_x/dt  [no viscous term]\n";
  return os.str();
}

NSEReport compare_te_nse(const std::vector<Point3>& points, double t,
                         const PhysParams& params, const QuadratureSpec& spec, double step,
                         double boundary_width) {
  if (points.empty()) throw ValidationError("grid", "grid must contain at least one point");
  NSEReport report;
  report.t = t;
  report.points.reserve(points.size());

  std::vector<double> te, nse, reduced;
  for (const Point3& p : points) {
    NSEComparisonPoint row;
    row.point = p;
    row.te_grad_px = te_pressure_gradient_x(p, t, params, spec);
    const NSEGradientTerms terms = nse_gradient_terms(p, t, params, spec, step);
    row.nse_grad_px = terms.full();
    row.reduced_nse_grad_px = terms.reduced();
    row.divergence = divergence(p, t, params, spec, step).value;
    row.interior = true;
    for (Axis axis : {Axis::x, Axis::y, Axis::z}) {
      const double c = coord(p, axis);
      if (c < boundary_width || c > params.L - boundary_width) row.interior = false;
    }

    auto& slot = row.interior ? report.max_divergence_interior : report.max_divergence_boundary;
    slot = std::max(slot.value_or(0.0), std::abs(row.divergence));

    te.push_back(row.te_grad_px);
    nse.push_back(row.nse_grad_px);
    reduced.push_back(row.reduced_nse_grad_px);
    report.points.push_back(row);
  }
  report.sign_match_fraction = sign_match_fraction(te, nse);
  report.correlation = normalized_correlation(te, nse);
  report.reduced_sign_match_fraction = sign_match_fraction(te, reduced);
  report.reduced_correlation = normalized_correlation(te, reduced);
  return report;
}

}  // namespace tefields
