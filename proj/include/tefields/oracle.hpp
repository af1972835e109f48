#pragma once

#include <functional>

#include "tefields/params.hpp"
#include "tefields/quadrature.hpp"

// Independent brute-force validators. Slow by construction; used by the
// test suites and the selfcheck subcommand, never by the field evaluators.
namespace tefields::oracle {

/// Direct three-level adaptive Gauss-Kronrod integration of the squared
/// x-force over the cube, with no use of the factored closed form.
/// Throws NoConvergence when the estimated error exceeds spec.rel_tol.
double h_bruteforce(const Point3& p, const PhysParams& params,
                    const QuadratureSpec& spec = {});

struct FdEstimate {
  double value = 0.0;
  double error = 0.0;
};

/// Central-difference derivative of order 1..4 (second-order stencils)
/// improved by Richardson extrapolation over spacings step / 2^k,
/// k = 0..levels. The error is the change contributed by the last level.
FdEstimate fd_partial(const std::function<double(double)>& f, double x, int order,
                      double step, int levels = 1);

/// Spacing that balances the fourth-order truncation of the extrapolated
/// stencil against rounding, scaled by max(1, |x|).
double default_step(int order, double x);

/// Nested adaptive integral over s1 in [0, t] of the integral over
/// s2 in [0, s1] of f(s2). No triangular reduction.
double nested_double_time_integral(const std::function<double(double)>& f, double t,
                                   const QuadratureSpec& spec = {});

/// Pure partial d^n h / d axis^n by Richardson differences of the closed-form
/// value evaluated in extended precision.
double fd_h_partial(const Point3& p, const PhysParams& params, Axis axis, int order,
                    double step, int levels = 1);

}  // namespace tefields::oracle
