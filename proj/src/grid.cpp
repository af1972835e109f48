#include "tefields/grid.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <numbers>
#include <thread>

#include "tefields/errors.hpp"
#include "tefields/nse_check.hpp"
#include "tefields/te_fields.hpp"

namespace tefields {

namespace {

void check_angle(const char* name, double v) {
  if (!(v >= 0.0 && v <= std::numbers::pi)) throw ValidationError(name, "angle in [0, pi]");
}

std::vector<std::string> value_columns(FieldSelection field) {
  switch (field) {
    case FieldSelection::momentum: return {"px", "py", "pz"};
    case FieldSelection::energy: return {"energy_x", "energy_y", "energy_z", "energy_total"};
    case FieldSelection::pressure: return {"pressure_x", "pressure_y", "pressure_z"};
    case FieldSelection::divergence: return {"divergence", "divergence_error"};
    case FieldSelection::nse:
      return {"nse_dpdx", "nse_dpdx_reduced", "viscous", "advective", "dux_dt"};
    case FieldSelection::compare: return {"te_dpdx", "nse_dpdx"};
  }
  return {};
}

std::vector<double> evaluate(const RunConfig& cfg, const Point3& p, double t) {
  const PhysParams& phys = cfg.phys;
  const QuadratureSpec& quad = cfg.quad;
  switch (cfg.field) {
    case FieldSelection::momentum: {
      const Momentum3 m = momentum_field(p, t, phys, quad);
      return {m.px, m.py, m.pz};
    }
    case FieldSelection::energy: {
      const EnergyDensity e = energy_field(p, t, phys, quad);
      return {e.x, e.y, e.z, e.total};
    }
    case FieldSelection::pressure: {
      const Pressure pr = pressure_field(p, t, phys, quad);
      return {pr.x, pr.y, pr.z};
    }
    case FieldSelection::divergence: {
      const DifferenceEstimate d = divergence(p, t, phys, quad, cfg.step());
      return {d.value, d.error};
    }
    case FieldSelection::nse: {
      const NSEGradientTerms n = nse_gradient_terms(p, t, phys, quad, cfg.step());
      return {n.full(), n.reduced(), n.viscous, n.advective, n.rate};
    }
    case FieldSelection::compare:
      return {te_pressure_gradient_x(p, t, phys, quad),
              nse_pressure_gradient_x(p, t, phys, quad, cfg.step())};
  }
  return {};
}

struct Job {
  Point3 point;
  std::vector<double> coords;
  double t;
};

}  // namespace

ToroidAngles::ToroidAngles(double theta, double phi, double omega)
    : theta_(theta), phi_(phi), omega_(omega) {
  check_angle("theta", theta);
  check_angle("phi", phi);
  check_angle("omega", omega);
}

Point3 toroid_map(const ToroidAngles& angles, double L) {
  return {L * std::sin(angles.theta()), L * std::sin(angles.phi()), L * std::sin(angles.omega())};
}

std::vector<Point3> grid_points(const GridSpec& grid, double L) {
  std::vector<Point3> pts;
  const auto& ax = grid.axes();
  for (double a : ax[0].values())
    for (double b : ax[1].values())
      for (double c : ax[2].values()) {
        if (grid.geometry == Geometry::cartesian)
          pts.push_back({a, b, c});
        else
          pts.push_back(toroid_map(ToroidAngles(a, b, c), L));
      }
  return pts;
}

Table sample_grid(const RunConfig& config, const SampleOptions& options) {
  config.validate();
  if ((config.field == FieldSelection::pressure || config.field == FieldSelection::compare) &&
      config.phys.m != 1.0)
    throw UnsupportedMass(config.phys.m);

  Table table;
  const bool toroid = config.grid.geometry == Geometry::toroid;
  table.coord_names = toroid ? std::vector<std::string>{"theta", "phi", "omega", "x", "y", "z", "t"}
                             : std::vector<std::string>{"x", "y", "z", "t"};
  table.value_names = value_columns(config.field);
  table.error_column = options.keep_going;
  const auto& axes = config.grid.axes();
  for (int i = 0; i < 3; ++i)
    if (axes[i].free()) table.free_coords.push_back(i);
  if (config.grid.times.size() > 1)
    table.free_coords.push_back(static_cast<int>(table.coord_names.size()) - 1);

  std::vector<Job> jobs;
  for (double a : axes[0].values())
    for (double b : axes[1].values())
      for (double c : axes[2].values())
        for (double t : config.grid.times) {
          Job job;
          job.t = t;
          if (toroid) {
            job.point = toroid_map(ToroidAngles(a, b, c), config.phys.L);
            job.coords = {a, b, c, job.point.x, job.point.y, job.point.z, t};
          } else {
            job.point = {a, b, c};
            job.coords = {a, b, c, t};
          }
          jobs.push_back(std::move(job));
        }

  table.rows.resize(jobs.size());
  std::vector<std::exception_ptr> failures(jobs.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};

  auto work = [&] {
    while (!stop.load(std::memory_order_relaxed)) {
      const std::size_t i = next.fetch_add(1);
      if (i >= jobs.size()) return;
      Row& row = table.rows[i];
      row.coords = jobs[i].coords;
      try {
        row.values = evaluate(config, jobs[i].point, jobs[i].t);
      } catch (const std::exception& e) {
        failures[i] = std::current_exception();
        row.values.assign(table.value_names.size(), std::numeric_limits<double>::quiet_NaN());
        row.error = e.what();
        if (!options.keep_going) stop = true;
      }
    }
  };

  const unsigned workers = std::max(1u, options.workers);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  if (!options.keep_going) {
    for (const auto& f : failures)
      if (f) std::rethrow_exception(f);
  }
  return table;
}

}  // namespace tefields
