#pragma once

#include <functional>
#include <span>
#include <vector>

namespace tefields {

/// Controls for the panel-adaptive Gauss-Legendre rule.
struct QuadratureSpec {
  int nodes_per_panel = 16;
  int max_panels = 1024;
  double rel_tol = 1e-10;
  double abs_tol = 1e-13;

  void validate() const;

  friend bool operator==(const QuadratureSpec&, const QuadratureSpec&) = default;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  int panels = 0;
};

using RealFunction = std::function<double(double)>;

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Rule of the given order; cached per thread.
const GaussLegendreRule& gauss_legendre(int n);

/// Integral of f over [lo, hi]. The panel count doubles from one until two
/// successive estimates agree within max(abs_tol, rel_tol * |estimate|), or
/// within rounding of the integral of |f| when the integral cancels;
/// the difference of those estimates is the reported error.
/// Throws NoConvergence when max_panels is exceeded.
QuadratureResult integrate_1d(const RealFunction& f, double lo, double hi,
                              const QuadratureSpec& spec = {});

/// Iterated time integral over 0 <= s2 <= s1 <= t of f(s2), reduced to the
/// single weighted integral of (t - s2) f(s2) over [0, t].
double triangular_double_integral(const RealFunction& f, double t,
                                  const QuadratureSpec& spec = {});

/// Same as triangular_double_integral but restricts the integration to
/// [lo, hi] intersected with [0, t]; f must vanish outside [lo, hi].
double triangular_double_integral(const RealFunction& f, double t, double lo,
                                  double hi, const QuadratureSpec& spec = {});

}  // namespace tefields
