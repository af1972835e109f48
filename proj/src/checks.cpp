#include "tefields/checks.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "tefields/export.hpp"
#include "tefields/nse_check.hpp"
#include "tefields/oracle.hpp"
#include "tefields/potential_kernel.hpp"
#include "tefields/quadrature.hpp"
#include "tefields/te_fields.hpp"

namespace tefields::checks {

namespace {

double rel_err(double value, double reference, double floor = 1e-300) {
  return std::abs(value - reference) / std::max(std::abs(reference), floor);
}

CheckResult finish(std::string name, double metric, double threshold, std::string detail) {
  CheckResult r;
  r.name = std::move(name);
  r.metric = metric;
  r.threshold = threshold;
  r.passed = std::isfinite(metric) && metric < threshold;
  r.detail = std::move(detail);
  return r;
}

std::string at(const Point3& p) {
  return "at (" + format_number(p.x) + ", " + format_number(p.y) + ", " + format_number(p.z) +
         ")";
}

std::string at(const Point3& p, double t) { return at(p) + ", t=" + format_number(t); }

// Coordinate in (0, L): half the draws land in the layers next to a face,
// where the derivatives of h are largest.
double interior_coordinate(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double u = unit(rng);
  if (u < 0.25) return 0.2 + 1.8 * unit(rng);
  if (u < 0.5) return 8.0 + 1.8 * unit(rng);
  return 0.5 + 9.0 * unit(rng);
}

}  // namespace

std::string format_check(const CheckResult& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS " : "FAIL ") << r.name << " metric=" << format_number(r.metric)
     << " threshold=" << format_number(r.threshold);
  if (!r.detail.empty()) os << " " << r.detail;
  return os.str();
}

Point3 random_point(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> d(lo, hi);
  const double x = d(rng);
  const double y = d(rng);
  const double z = d(rng);
  return {x, y, z};
}

CheckResult closed_form_h(int samples, std::uint64_t seed, double lo, double hi) {
  const PhysParams params;
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  Point3 worst_p{};
  for (int i = 0; i < samples; ++i) {
    const Point3 p = random_point(rng, lo, hi);
    const double closed = h_partials(p, params, 0).value;
    const double brute = oracle::h_bruteforce(p, params);
    const double e = rel_err(closed, brute);
    if (!(e <= worst)) {
      worst = e;
      worst_p = p;
    }
  }
  return finish("closed_form_h", worst, 1e-8,
                std::to_string(samples) + " points, worst " + at(worst_p));
}

CheckResult h_partials(int samples, std::uint64_t seed) {
  const PhysParams params;
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  std::string where;
  for (int i = 0; i < samples; ++i) {
    const double x = interior_coordinate(rng);
    const double y = interior_coordinate(rng);
    const double z = interior_coordinate(rng);
    const Point3 p{x, y, z};
    const HPartials hp = tefields::h_partials(p, params, kMaxHOrder);
    for (Axis axis : {Axis::x, Axis::y, Axis::z}) {
      for (int n = 1; n <= kMaxHOrder; ++n) {
        const double fd = oracle::fd_h_partial(p, params, axis, n, 0.12, 4);
        // Deep inside the cube the derivatives underflow relative to h, so
        // the error is measured against the natural scale h (2a)^(n/2).
        const double scale = 1e-3 * std::abs(hp.value) * std::pow(2.0 * params.a, 0.5 * n);
        const double e = rel_err(hp.d(axis, n), fd, scale);
        if (!(e <= worst)) {
          worst = e;
          where = "order " + std::to_string(n) + " axis " +
                  std::to_string(static_cast<int>(axis)) + " " + at(p);
        }
      }
    }
  }
  return finish("h_partials", worst, 1e-6,
                std::to_string(samples) + " points, worst " + where);
}

CheckResult time_reduction(int samples, std::uint64_t seed, double t_max) {
  const PhysParams params;
  const QuadratureSpec spec;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> time(0.0, t_max);
  double worst = 0.0;
  std::string where;

  using Kernel = std::function<double(const Point3&, double)>;
  const std::pair<const char*, Kernel> kernels[] = {
      {"momentum_x", [&](const Point3& q, double s) { return momentum_kernel_x(q, s, params); }},
      {"momentum_y",
       [&](const Point3& q, double s) {
         return momentum_kernel_transverse(q, s, params, Axis::y);
       }},
      {"momentum_z",
       [&](const Point3& q, double s) {
         return momentum_kernel_transverse(q, s, params, Axis::z);
       }},
      {"energy_x", [&](const Point3& q, double s) { return energy_kernel_x(q, s, params); }},
      {"energy_transverse",
       [&](const Point3& q, double s) { return energy_kernel_transverse(q, s, params); }},
  };

  for (int i = 0; i < samples; ++i) {
    const Point3 p = random_point(rng, 0.0, params.L);
    double t = time(rng);
    if (t == 0.0) t = t_max;
    for (const auto& [name, k] : kernels) {
      const auto f = [&](double s) { return k(p, s); };
      // The kernels change sign, and some integrals cancel to rounding
      // level. Errors are therefore measured against the magnitude of the
      // integrand, which equals |value| when nothing cancels.
      QuadratureSpec rough = spec;
      rough.rel_tol = 1e-4;
      const double magnitude = time_evolve(p, t, params, rough,
                                           [&](double s) { return std::abs(f(s)); });
      // Both sides get an absolute tolerance scaled to the integrand, so
      // that tiny transverse integrals are resolved relatively as well.
      QuadratureSpec scaled = spec;
      scaled.abs_tol = std::max(1e-13 * magnitude, 1e-300);
      const double reduced = time_evolve(p, t, params, scaled, f);
      const double nested = oracle::nested_double_time_integral(f, t, scaled);
      const double e = rel_err(reduced, nested, magnitude);
      if (!(e <= worst)) {
        worst = e;
        where = std::string(name) + " " + at(p, t);
      }
    }
  }
  return finish("time_reduction", worst, 1e-8,
                std::to_string(samples) + " pairs, worst " + where);
}

CheckResult initial_data(int samples, std::uint64_t seed) {
  const PhysParams params;
  std::mt19937_64 rng(seed);
  const double jet_energy = params.p0 * params.p0 / (2.0 * params.m);
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const Point3 p = random_point(rng, -5.0, 15.0);
    const Momentum3 mom = momentum_field(p, 0.0, params);
    const EnergyDensity en = energy_field(p, 0.0, params);
    const double diffs[] = {mom.px - params.p0, mom.py, mom.pz,          en.x - jet_energy,
                            en.y,               en.z,   en.total - jet_energy};
    for (double d : diffs) worst = std::max(worst, std::abs(d));
  }
  CheckResult r = finish("initial_data", worst, 0.0, std::to_string(samples) + " points");
  r.passed = worst == 0.0;
  return r;
}

CheckResult mirror_symmetry(int samples, std::uint64_t seed) {
  const PhysParams params;
  const QuadratureSpec spec;
  const double step = default_fd_step(params);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> time(0.0, 2.0);
  double worst = 0.0;
  std::string where;
  for (int i = 0; i < samples; ++i) {
    const Point3 p = random_point(rng, 0.0, params.L);
    const double t = time(rng);
    const Point3 q = swap_yz(p);
    const FieldSample a = sample_fields(p, t, params, spec);
    const FieldSample b = sample_fields(q, t, params, spec);
    const double da = divergence(p, t, params, spec, step).value;
    const double db = divergence(q, t, params, spec, step).value;
    const std::pair<double, double> pairs[] = {
        {a.momentum.px, b.momentum.px}, {a.momentum.py, b.momentum.pz},
        {a.momentum.pz, b.momentum.py}, {a.energy.x, b.energy.x},
        {a.energy.y, b.energy.z},       {a.energy.z, b.energy.y},
        {a.energy.total, b.energy.total}, {a.pressure.x, b.pressure.x},
        {a.pressure.y, b.pressure.z},   {a.pressure.z, b.pressure.y},
        {da, db}};
    for (const auto& [u, v] : pairs) {
      const double e = std::abs(u - v) / std::max({std::abs(u), std::abs(v), 1e-300});
      if (!(e <= worst)) {
        worst = e;
        where = at(p, t);
      }
    }
  }
  return finish("mirror_symmetry", worst, 1e-12,
                std::to_string(samples) + " points" + (where.empty() ? "" : ", worst " + where));
}

CheckResult g2_scaling(const Point3& p, double t) {
  PhysParams base;
  PhysParams doubled;
  doubled.g = 2.0 * base.g;
  const QuadratureSpec spec;

  const auto changes = [&](const PhysParams& params) {
    const FieldSample s = sample_fields(p, t, params, spec);
    const double jet_energy = params.p0 * params.p0 / (2.0 * params.m);
    return std::vector<double>{s.momentum.px - params.p0, s.momentum.py, s.momentum.pz,
                               s.energy.x - jet_energy,   s.energy.y,    s.energy.z,
                               s.pressure.x - 4.0 * jet_energy,
                               s.pressure.y,              s.pressure.z};
  };
  const std::vector<double> c1 = changes(base);
  const std::vector<double> c2 = changes(doubled);
  double worst = 0.0;
  for (std::size_t i = 0; i < c1.size(); ++i) {
    if (c1[i] == 0.0 && c2[i] == 0.0) continue;
    worst = std::max(worst, rel_err(c2[i], 4.0 * c1[i]));
  }
  return finish("g2_scaling", worst, 1e-10, at(p, t));
}

CheckResult px_plateau(const Point3& p, double t1, double t2, double threshold) {
  const PhysParams params;
  const double a = momentum_component(p, t1, params, {}, Axis::x);
  const double b = momentum_component(p, t2, params, {}, Axis::x);
  return finish("px_plateau", rel_err(b, a), threshold,
                "px(t1)=" + format_number(a) + " px(t2)=" + format_number(b) + " " +
                    at(p, t2));
}

DivergencePlateau divergence_plateau(const std::function<double(const Point3&)>& div, int n,
                                     double L, double inner, double strip) {
  std::vector<double> interior;
  DivergencePlateau out;
  for (int i = 0; i < n; ++i) {
    const double x = L * i / (n - 1);
    for (int j = 0; j < n; ++j) {
      const double y = L * j / (n - 1);
      const bool in_box = x >= inner && x <= L - inner && y >= inner && y <= L - inner;
      const bool in_strip = x <= strip || x >= L - strip || y <= strip || y >= L - strip;
      if (!in_box && !in_strip) continue;
      const double v = std::abs(div({x, y, 0.0}));
      if (in_box) interior.push_back(v);
      if (in_strip) {
        out.boundary_max = std::max(out.boundary_max, v);
        ++out.boundary_count;
      }
    }
  }
  out.interior_count = static_cast<int>(interior.size());
  if (!interior.empty()) {
    std::sort(interior.begin(), interior.end());
    const std::size_t m = interior.size() / 2;
    out.interior_median = interior.size() % 2 == 1 ? interior[m]
                                                   : 0.5 * (interior[m - 1] + interior[m]);
  }
  out.ratio = out.boundary_max / out.interior_median;
  return out;
}

}  // namespace tefields::checks
