#include "tefields/potential_kernel.hpp"

#include <cassert>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tefields {

namespace {

// exp(-xi^2) underflows to zero past this; polynomial prefactors are
// dropped there so that huge arguments never produce inf * 0.
constexpr double kUnderflowXiSq = 745.0;

void check_order(int order) {
  if (order < 0 || order > kMaxHOrder)
    throw std::out_of_range("derivative order must be in [0, 4]");
}

// Integral of exp(-2 a w^2) over [s, inf), s >= 0.
double gaussian_tail(double s, double a) {
  return std::sqrt(std::numbers::pi / (8.0 * a)) * std::erfc(std::sqrt(2.0 * a) * s);
}

// Integral of 4 a^2 w^2 exp(-2 a w^2) over [s, inf), s >= 0.
double weighted_gaussian_tail(double s, double a) {
  const double xi = std::sqrt(2.0 * a) * s;
  const double edge = xi * xi > kUnderflowXiSq ? 0.0 : a * s * std::exp(-xi * xi);
  return std::sqrt(std::numbers::pi * a / 8.0) * std::erfc(xi) + edge;
}

// Integral of an even, positive integrand over [lo, hi] from its upper tail
// function, arranged so that only well-separated positive numbers are
// subtracted.
template <typename Tail>
double even_interval_integral(double lo, double hi, Tail tail) {
  if (lo >= 0.0) return tail(lo) - tail(hi);
  if (hi <= 0.0) return tail(-hi) - tail(-lo);
  return 2.0 * tail(0.0) - (tail(-lo) + tail(hi));
}

// Derivatives of a factor I(s) = integral over [0, L] of k(u - s) du with k
// even:  I^(n)(s) = k^(n-1)(s) - (-1)^(n-1) k^(n-1)(L - s).
template <typename KernelDeriv>
double factor_derivative(double s, double L, int order, KernelDeriv kd) {
  const int k = order - 1;
  const double sign = (k % 2 == 0) ? 1.0 : -1.0;
  return kd(s, k) - sign * kd(L - s, k);
}

}  // namespace

namespace detail {

double hermite(int n, double xi) {
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 2.0 * xi;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * xi * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

// d^n/dw^n exp(-xi^2), xi = sqrt(2a) w, is (2a)^(n/2) (-1)^n H_n(xi) exp(-xi^2).
double gaussian_derivative(double w, double a, int n) {
  const double c = std::sqrt(2.0 * a);
  const double xi = c * w;
  if (xi * xi > kUnderflowXiSq) return 0.0;
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  return sign * std::pow(c, n) * hermite(n, xi) * std::exp(-xi * xi);
}

// 4 a^2 w^2 exp(-2 a w^2) = 2a xi^2 exp(-xi^2) and
// xi^2 exp(-xi^2) = (H_2(xi)/4 + 1/2) exp(-xi^2), so each derivative is a
// pair of Hermite terms.
double weighted_gaussian_derivative(double w, double a, int n) {
  const double c = std::sqrt(2.0 * a);
  const double xi = c * w;
  if (xi * xi > kUnderflowXiSq) return 0.0;
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  const double poly = 0.25 * hermite(n + 2, xi) + 0.5 * hermite(n, xi);
  return sign * 2.0 * a * std::pow(c, n) * poly * std::exp(-xi * xi);
}

}  // namespace detail

double pair_potential(const Point3& p, const Point3& q, const PhysParams& params) {
  const double dx = p.x - q.x;
  const double dy = p.y - q.y;
  const double dz = p.z - q.z;
  return params.g * std::exp(-params.a * (dx * dx + dy * dy + dz * dz));
}

double force_x_squared(const Point3& p, const Point3& q, const PhysParams& params) {
  const double dx = q.x - p.x;
  const double dy = q.y - p.y;
  const double dz = q.z - p.z;
  const double a = params.a;
  const double g = params.g;
  return 4.0 * a * a * dx * dx * g * g * std::exp(-2.0 * a * (dx * dx + dy * dy + dz * dz));
}

double axial_factor(double x, const PhysParams& params, int order) {
  check_order(order);
  const double a = params.a;
  const double L = params.L;
  if (order == 0) {
    return even_interval_integral(-x, L - x,
                                  [a](double s) { return weighted_gaussian_tail(s, a); });
  }
  return factor_derivative(x, L, order, [a](double w, int k) {
    return detail::weighted_gaussian_derivative(w, a, k);
  });
}

double transverse_factor(double y, const PhysParams& params, int order) {
  check_order(order);
  const double a = params.a;
  const double L = params.L;
  if (order == 0) {
    return even_interval_integral(-y, L - y, [a](double s) { return gaussian_tail(s, a); });
  }
  return factor_derivative(y, L, order, [a](double w, int k) {
    return detail::gaussian_derivative(w, a, k);
  });
}

double HPartials::d(Axis axis, int order) const {
  if (order < 0 || order > max_order)
    throw std::out_of_range("partial order not computed");
  return pure[static_cast<int>(axis)][order];
}

HPartials h_partials(const Point3& p, const PhysParams& params, int max_order) {
  check_order(max_order);
  std::array<std::array<double, kMaxHOrder + 1>, 3> factor{};
  for (int n = 0; n <= max_order; ++n) {
    factor[0][n] = axial_factor(p.x, params, n);
    factor[1][n] = transverse_factor(p.y, params, n);
    factor[2][n] = transverse_factor(p.z, params, n);
  }
  const double g2 = params.g * params.g;

  HPartials out;
  out.max_order = max_order;
  // The transverse pair is multiplied first so that swapping y and z gives
  // bitwise-identical results.
  out.value = g2 * factor[0][0] * (factor[1][0] * factor[2][0]);
  for (int n = 0; n <= max_order; ++n) {
    out.pure[0][n] = g2 * factor[0][n] * (factor[1][0] * factor[2][0]);
    out.pure[1][n] = g2 * factor[0][0] * (factor[1][n] * factor[2][0]);
    out.pure[2][n] = g2 * factor[0][0] * (factor[1][0] * factor[2][n]);
  }
  return out;
}

}  // namespace tefields
