#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>

#include "tefields/params.hpp"

// Invariant checks against the brute-force oracle. Each returns the worst
// observed metric next to its threshold so callers can print or assert.
namespace tefields::checks {

struct CheckResult {
  std::string name;
  bool passed = false;
  double metric = 0.0;
  double threshold = 0.0;
  std::string detail;
};

/// "PASS name metric=... threshold=... detail" on one line.
std::string format_check(const CheckResult& r);

/// Uniform random point in [lo, hi]^3.
Point3 random_point(std::mt19937_64& rng, double lo, double hi);

/// Closed-form h against direct 3-D quadrature at points drawn from
/// [lo, hi]^3; relative error threshold 1e-8.
CheckResult closed_form_h(int samples, std::uint64_t seed, double lo = -5.0, double hi = 15.0);

/// Every pure partial of order 1..4 against Richardson finite differences
/// at interior points, half of the coordinates drawn from the layers next
/// to the faces; relative error threshold 1e-6.
CheckResult h_partials(int samples, std::uint64_t seed);

/// Triangular reduction of the momentum and energy kernels against the
/// nested double time integral at random (point, t <= t_max); relative
/// error threshold 1e-8.
CheckResult time_reduction(int samples, std::uint64_t seed, double t_max = 2.0);

/// momentum(p, 0) and energy(p, 0) equal the jet values exactly.
CheckResult initial_data(int samples, std::uint64_t seed);

/// y <-> z swap invariance of momentum, energy, pressure and divergence;
/// relative threshold 1e-12.
CheckResult mirror_symmetry(int samples, std::uint64_t seed);

/// Field changes at (p, t) scale by 4 when g doubles; threshold 1e-10.
CheckResult g2_scaling(const Point3& p, double t);

/// Relative change of px between t1 and t2 below threshold.
CheckResult px_plateau(const Point3& p, double t1, double t2, double threshold = 1e-3);

struct DivergencePlateau {
  double interior_median = 0.0;
  double boundary_max = 0.0;
  double ratio = 0.0;
  int interior_count = 0;
  int boundary_count = 0;
};

/// |div| sampled on an n x n grid over [0, L]^2 in the z = 0 plane.
/// Interior is the box [inner, L - inner]^2; the boundary strip is every
/// point within strip of an edge.
DivergencePlateau divergence_plateau(const std::function<double(const Point3&)>& div, int n,
                                     double L, double inner = 2.0, double strip = 0.5);

}  // namespace tefields::checks
