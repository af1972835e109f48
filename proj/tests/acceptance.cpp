// Acceptance run: one PASS/FAIL line per criterion, nonzero exit when any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "tefields/checks.hpp"
#include "tefields/config.hpp"
#include "tefields/export.hpp"
#include "tefields/grid.hpp"
#include "tefields/nse_check.hpp"
#include "tefields/oracle.hpp"
#include "tefields/te_fields.hpp"

namespace fs = std::filesystem;
using namespace tefields;
using checks::CheckResult;

namespace {

constexpr std::uint64_t kSeed = 20240611;

// Regression values minted by the oracle runs.
constexpr double kFrozenDivergenceRatio = 103289.37490901077;
constexpr double kFrozenSignMatch = 0.59999999999999998;
constexpr double kFrozenCorrelation = 0.54542207641028595;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

CheckResult make(std::string name, bool passed, double metric, double threshold,
                 std::string detail) {
  return {std::move(name), passed, metric, threshold, std::move(detail)};
}

CheckResult timed(const std::string& label, double limit_s, CheckResult r, double elapsed) {
  r.name = label + " " + r.name;
  r.detail += (r.detail.empty() ? "" : " ") + std::string("runtime=") + format_number(elapsed) +
              "s limit=" + format_number(limit_s) + "s";
  r.passed = r.passed && elapsed < limit_s;
  return r;
}

CheckResult labelled(const std::string& label, CheckResult r) {
  r.name = label + " " + r.name;
  return r;
}

std::vector<Point3> centre_line() {
  GridSpec g;
  g.cartesian = {AxisRange{0.0, 10.0, 20}, AxisRange::fixed(0.0), AxisRange::fixed(0.0)};
  return grid_points(g, 10.0);
}

CheckResult no_blowup_and_plateau() {
  RunConfig cfg;
  const AxisRange axis{0.0, 10.0, 5};
  cfg.grid.cartesian = {axis, axis, axis};
  cfg.grid.times = {0.0, 0.5, 2.0, 10.0, 50.0, 200.0, 400.0};
  std::size_t values = 0;
  std::size_t bad = 0;
  for (FieldSelection f :
       {FieldSelection::momentum, FieldSelection::energy, FieldSelection::pressure}) {
    cfg.field = f;
    for (const Row& row : sample_grid(cfg, {4, false}).rows) {
      for (double v : row.values) {
        ++values;
        bad += std::isfinite(v) ? 0 : 1;
      }
    }
  }
  const CheckResult plateau = checks::px_plateau({5, 0, 0}, 200.0, 400.0);
  return make("no_blowup_and_plateau", bad == 0 && plateau.passed, plateau.metric,
              plateau.threshold,
              "finite=" + std::to_string(values - bad) + "/" + std::to_string(values) + " " +
                  plateau.detail);
}

CheckResult divergence_plateau() {
  const PhysParams params;
  const QuadratureSpec spec;
  const double t = 0.02;
  const double step = default_fd_step(params);
  const checks::DivergencePlateau fd = checks::divergence_plateau(
      [&](const Point3& p) { return divergence(p, t, params, spec, step).value; }, 41, params.L);

  // Oracle: Richardson-extrapolated first differences of each velocity component.
  const auto oracle_div = [&](const Point3& p) {
    double sum = 0.0;
    for (Axis axis : {Axis::x, Axis::y, Axis::z}) {
      const auto along = [&](double c) {
        Point3 q = p;
        (axis == Axis::x ? q.x : axis == Axis::y ? q.y : q.z) = c;
        return momentum_component(q, t, params, spec, axis) / params.m;
      };
      const double c = axis == Axis::x ? p.x : axis == Axis::y ? p.y : p.z;
      sum += oracle::fd_partial(along, c, 1, 0.1, 3).value;
    }
    return sum;
  };
  const checks::DivergencePlateau ref = checks::divergence_plateau(oracle_div, 41, params.L);

  const double regression = std::abs(fd.ratio - kFrozenDivergenceRatio) / kFrozenDivergenceRatio;
  const double oracle_gap = std::abs(fd.ratio - ref.ratio) / ref.ratio;
  const double median_limit = 1e-3 * params.p0 / params.L;
  const bool ok = regression < 1e-6 && oracle_gap < 0.05 && fd.interior_median < median_limit &&
                  fd.ratio > 1.0;
  std::ostringstream detail;
  detail << "ratio=" << format_number(fd.ratio) << " frozen=" << format_number(kFrozenDivergenceRatio)
         << " oracle_ratio=" << format_number(ref.ratio)
         << " interior_median=" << format_number(fd.interior_median)
         << " median_limit=" << format_number(median_limit)
         << " boundary_max=" << format_number(fd.boundary_max)
         << " interior_points=" << fd.interior_count << " boundary_points=" << fd.boundary_count;
  return make("divergence_plateau", ok, regression, 1e-6, detail.str());
}

CheckResult te_vs_nse() {
  const PhysParams params;
  const QuadratureSpec spec;
  const double step = default_fd_step(params);
  const NSEReport r = compare_te_nse(centre_line(), 0.5, params, spec, step);
  const double metric = std::max(std::abs(r.sign_match_fraction - kFrozenSignMatch),
                                 std::abs(r.correlation - kFrozenCorrelation));

  // Oracle variant: TE gradient from finite differences of the pressure.
  std::vector<double> te_fd;
  std::vector<double> nse;
  for (const NSEComparisonPoint& p : r.points) {
    const auto px = [&](double x) {
      return pressure_field({x, p.point.y, p.point.z}, r.t, params, spec).x;
    };
    te_fd.push_back(oracle::fd_partial(px, p.point.x, 1, 0.05, 3).value);
    nse.push_back(p.nse_grad_px);
  }
  std::ostringstream detail;
  detail << "sign_match=" << format_number(r.sign_match_fraction)
         << " correlation=" << format_number(r.correlation)
         << " reduced_sign_match=" << format_number(r.reduced_sign_match_fraction)
         << " reduced_correlation=" << format_number(r.reduced_correlation)
         << " fd_oracle_sign_match=" << format_number(sign_match_fraction(te_fd, nse))
         << " fd_oracle_correlation=" << format_number(normalized_correlation(te_fd, nse));
  return make("te_vs_nse_regression", metric < 1e-6, metric, 1e-6, detail.str());
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

CheckResult figure_recipes() {
  std::vector<fs::path> recipes;
  for (const auto& entry : fs::directory_iterator(TEFIELDS_RECIPES_DIR)) {
    if (entry.path().extension() == ".conf") recipes.push_back(entry.path());
  }
  std::sort(recipes.begin(), recipes.end());
  int mismatches = 0;
  int failures = 0;
  std::size_t bytes = 0;
  std::string failed;
  for (const fs::path& path : recipes) {
    try {
      const RunConfig cfg = parse_config(read_file(path));
      const std::string serial = export_table(sample_grid(cfg, {1, false}), cfg.format);
      const std::string parallel = export_table(sample_grid(cfg, {4, false}), cfg.format);
      const std::string again = export_table(sample_grid(cfg, {4, false}), cfg.format);
      if (serial != parallel || parallel != again) {
        ++mismatches;
        failed += " " + path.filename().string();
      }
      bytes += serial.size();
    } catch (const std::exception& e) {
      ++failures;
      failed += " " + path.filename().string() + "(" + e.what() + ")";
    }
  }
  const bool ok = !recipes.empty() && mismatches == 0 && failures == 0;
  std::string detail = "recipes=" + std::to_string(recipes.size()) +
                       " bytes=" + std::to_string(bytes) +
                       " runs_per_recipe=3 (workers 1, 4, 4)";
  if (!failed.empty()) detail += " failed:" + failed;
  return make("figure_recipes_deterministic", ok, mismatches + failures, 1, detail);
}

}  // namespace

int main() {
  std::vector<CheckResult> results;
  const auto run = [&](const std::string& label, double limit_s, auto&& fn) {
    const auto start = Clock::now();
    CheckResult r = fn();
    const double elapsed = seconds_since(start);
    r = limit_s > 0 ? timed(label, limit_s, std::move(r), elapsed) : labelled(label, std::move(r));
    std::cout << checks::format_check(r) << std::endl;
    results.push_back(std::move(r));
  };

  run("C1", 300.0, [] { return checks::closed_form_h(100, kSeed + 1); });
  run("C2", 0.0, [] { return checks::h_partials(50, kSeed + 2); });
  run("C3", 0.0, [] { return checks::time_reduction(10, kSeed + 3); });
  run("C4", 0.0, [] { return checks::initial_data(20, kSeed + 4); });
  run("C5", 0.0, no_blowup_and_plateau);
  run("C6", 0.0, divergence_plateau);
  run("C7", 0.0, [] { return checks::mirror_symmetry(20, kSeed + 7); });
  run("C8", 0.0, [] { return checks::g2_scaling({5, 0, 0}, 0.5); });
  run("C9", 0.0, te_vs_nse);
  run("C10", 600.0, figure_recipes);

  int failed = 0;
  for (const CheckResult& r : results) failed += r.passed ? 0 : 1;
  std::cout << (failed == 0 ? "acceptance passed" : "acceptance FAILED: " + std::to_string(failed))
            << std::endl;
  return failed == 0 ? 0 : 1;
}
