#include "tefields/oracle.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

#include "tefields/potential_kernel.hpp"

namespace tefields::oracle {

namespace {

using Kronrod = boost::math::quadrature::gauss_kronrod<double, 31>;
constexpr std::size_t kMaxSegments = 1 << 14;

struct Segment {
  double lo;
  double hi;
  double value;
  double error;
  bool operator<(const Segment& other) const { return error < other.error; }
};

// One application of the 31-point Kronrod rule. Boost reports the error of
// a non-adaptive call on the reference interval, so it is rescaled here.
template <typename F>
Segment kronrod_segment(F& f, double lo, double hi) {
  double err = 0.0;
  const double value = Kronrod::integrate(f, lo, hi, 0, 0.0, &err);
  return {lo, hi, value, err * 0.5 * (hi - lo)};
}

// Globally adaptive bisection of the segment with the largest error until
// the summed error drops below max(tol |I|, abs_floor). The recursive
// driver shipped with Boost is not used: its per-level stopping test mixes
// scaled and unscaled errors and never stops early on cancelling integrals.
template <typename F>
double kronrod(F&& f, double lo, double hi, double tol, double abs_floor) {
  std::priority_queue<Segment> heap;
  heap.push(kronrod_segment(f, lo, hi));
  double value = heap.top().value;
  double error = heap.top().error;
  while (!(error <= std::max(tol * std::abs(value), abs_floor))) {
    if (heap.size() >= kMaxSegments) throw NoConvergence(value, error);
    const Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    const Segment left = kronrod_segment(f, worst.lo, mid);
    const Segment right = kronrod_segment(f, mid, worst.hi);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }
  // Re-sum to drop the drift of the running totals.
  value = 0.0;
  while (!heap.empty()) {
    value += heap.top().value;
    heap.pop();
  }
  return value;
}

// Central stencils of second-order accuracy.
template <typename Real, typename F>
Real stencil(const F& f, Real x, int order, Real h) {
  switch (order) {
    case 1: return (f(x + h) - f(x - h)) / (2 * h);
    case 2: return (f(x + h) - 2 * f(x) + f(x - h)) / (h * h);
    case 3: return (f(x + 2 * h) - 2 * f(x + h) + 2 * f(x - h) - f(x - 2 * h)) / (2 * h * h * h);
    case 4:
      return (f(x + 2 * h) - 4 * f(x + h) + 6 * f(x) - 4 * f(x - h) + f(x - 2 * h)) /
             (h * h * h * h);
    default: throw std::out_of_range("fd order must be in [1, 4]");
  }
}

// Tableau over spacings step, step/2, ..., step/2^levels; each column
// removes the next even power of the spacing.
template <typename Real, typename F>
std::pair<Real, Real> richardson(const F& f, Real x, int order, Real step, int levels) {
  if (!(step > 0)) throw std::invalid_argument("fd step must be positive");
  if (levels < 1) throw std::invalid_argument("at least one extrapolation level");
  std::vector<Real> row(levels + 1);
  for (int i = 0; i <= levels; ++i) row[i] = stencil<Real>(f, x, order, std::ldexp(step, -i));
  Real previous = row[levels];
  for (int k = 1; k <= levels; ++k) {
    const Real factor = std::ldexp(Real(1), 2 * k);
    previous = row[levels];
    for (int i = levels; i >= k; --i) row[i] = (factor * row[i] - row[i - 1]) / (factor - 1);
  }
  return {row[levels], std::abs(row[levels] - previous)};
}

// Upper tails of the two factor integrands for s >= 0, as in the closed
// form but carried in extended precision.
long double tail_weighted(long double s, long double a) {
  const long double pi = 3.141592653589793238462643383279502884L;
  return std::sqrt(pi * a / 8) * std::erfc(std::sqrt(2 * a) * s) +
         a * s * std::exp(-2 * a * s * s);
}

long double tail_plain(long double s, long double a) {
  const long double pi = 3.141592653589793238462643383279502884L;
  return std::sqrt(pi / (8 * a)) * std::erfc(std::sqrt(2 * a) * s);
}

template <typename Tail>
long double factor_extended(long double c, long double L, long double a, Tail tail) {
  const long double lo = -c;
  const long double hi = L - c;
  if (lo >= 0) return tail(lo, a) - tail(hi, a);
  if (hi <= 0) return tail(-hi, a) - tail(-lo, a);
  return 2 * tail(0.0L, a) - (tail(-lo, a) + tail(hi, a));
}

long double h_extended(long double x, long double y, long double z, const PhysParams& params) {
  const long double a = params.a;
  const long double L = params.L;
  const long double g = params.g;
  return g * g * factor_extended(x, L, a, tail_weighted) * factor_extended(y, L, a, tail_plain) *
         factor_extended(z, L, a, tail_plain);
}

}  // namespace

double h_bruteforce(const Point3& p, const PhysParams& params, const QuadratureSpec& spec) {
  spec.validate();
  const double L = params.L;
  // Inner levels run tighter so their error does not show up as noise in
  // the outer integrands.
  const double outer_tol = spec.rel_tol;
  const double inner_tol = 0.1 * spec.rel_tol;
  // Far from the cube whole slabs underflow into denormals, where relative
  // error estimates are meaningless. h itself stays above ~1e-70 on the
  // sampled domains, so slabs below this floor cannot matter.
  constexpr double floor = 1e-280;
  return kronrod(
      [&](double z2) {
        return kronrod(
            [&](double y2) {
              return kronrod(
                  [&](double x2) { return force_x_squared(p, {x2, y2, z2}, params); }, 0.0,
                  L, inner_tol, floor);
            },
            0.0, L, inner_tol, floor);
      },
      0.0, L, outer_tol, floor);
}

FdEstimate fd_partial(const std::function<double(double)>& f, double x, int order,
                      double step, int levels) {
  const auto [value, error] = richardson<double>(f, x, order, step, levels);
  return {value, error};
}

double default_step(int order, double x) {
  const double eps = std::numeric_limits<double>::epsilon();
  return std::pow(eps, 1.0 / (order + 4)) * std::max(1.0, std::abs(x));
}

double nested_double_time_integral(const std::function<double(double)>& f, double t,
                                   const QuadratureSpec& spec) {
  if (!(t >= 0)) throw std::invalid_argument("t must be non-negative");
  if (t == 0.0) return 0.0;
  // The inner integral uses a fixed composite rule so that it is a smooth
  // function of s1; adaptive refinement there would hand the outer level a
  // jagged integrand. Boost's per-panel error estimate is unreliable on
  // short panels, so the inner accuracy is checked by halving the panel
  // count instead.
  const auto nested = [&](int panels) {
    const auto inner = [&](double s1) {
      if (s1 <= 0.0) return 0.0;
      const double width = s1 / panels;
      double sum = 0.0;
      for (int j = 0; j < panels; ++j) {
        sum += Kronrod::integrate(f, j * width, (j + 1) * width, 0, 0.0);
      }
      return sum;
    };
    return kronrod(inner, 0.0, t, spec.rel_tol, spec.abs_tol);
  };
  const double fine = nested(128);
  const double coarse = nested(64);
  const double diff = std::abs(fine - coarse);
  if (!(diff <= std::max(spec.rel_tol * std::abs(fine), spec.abs_tol))) {
    throw NoConvergence(fine, diff);
  }
  return fine;
}

double fd_h_partial(const Point3& p, const PhysParams& params, Axis axis, int order,
                    double step, int levels) {
  // Values of h in extended precision keep the rounding of the order-4
  // stencil well below the truncation error at the spacings used.
  auto along = [&](long double c) {
    return h_extended(axis == Axis::x ? c : p.x, axis == Axis::y ? c : p.y,
                      axis == Axis::z ? c : p.z, params);
  };
  const double c = axis == Axis::x ? p.x : axis == Axis::y ? p.y : p.z;
  return static_cast<double>(richardson<long double>(along, c, order, step, levels).first);
}

}  // namespace tefields::oracle
