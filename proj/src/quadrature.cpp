#include "tefields/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <limits>

#include "tefields/errors.hpp"

namespace tefields {

void QuadratureSpec::validate() const {
  if (nodes_per_panel < 2) throw ValidationError("nodes_per_panel", "nodes_per_panel >= 2");
  if (max_panels < 1) throw ValidationError("max_panels", "max_panels >= 1");
  if (!(rel_tol > 0) || !std::isfinite(rel_tol))
    throw ValidationError("rel_tol", "rel_tol > 0");
  if (!(abs_tol > 0) || !std::isfinite(abs_tol))
    throw ValidationError("abs_tol", "abs_tol > 0");
}

namespace {

// Newton iteration on P_n from the Chebyshev-like initial guess.
GaussLegendreRule make_rule(int n) {
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

struct PanelSum {
  double value = 0.0;
  double magnitude = 0.0;  // same rule applied to |f|
};

PanelSum panel_sum(const RealFunction& f, double lo, double hi, int panels,
                   const GaussLegendreRule& rule) {
  const double width = (hi - lo) / panels;
  PanelSum total;
  for (int p = 0; p < panels; ++p) {
    const double left = lo + p * width;
    const double mid = left + 0.5 * width;
    double acc = 0.0;
    double abs_acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double v = rule.weights[i] * f(mid + 0.5 * width * rule.nodes[i]);
      acc += v;
      abs_acc += std::abs(v);
    }
    total.value += 0.5 * width * acc;
    total.magnitude += 0.5 * width * abs_acc;
  }
  return total;
}

// Two estimates closer than this multiple of eps * integral of |f| differ only
// by summation rounding, so a strongly cancelling integral counts as converged.
constexpr double kRoundingFloor = 64.0 * std::numeric_limits<double>::epsilon();

}  // namespace

const GaussLegendreRule& gauss_legendre(int n) {
  thread_local std::map<int, GaussLegendreRule> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, make_rule(n)).first;
  return it->second;
}

QuadratureResult integrate_1d(const RealFunction& f, double lo, double hi,
                              const QuadratureSpec& spec) {
  spec.validate();
  if (!(lo <= hi)) throw ValidationError("interval", "lo <= hi");
  if (lo == hi) return {0.0, 0.0, 0};

  const GaussLegendreRule& rule = gauss_legendre(spec.nodes_per_panel);
  double best = panel_sum(f, lo, hi, 1, rule).value;
  double err = std::numeric_limits<double>::infinity();
  for (int panels = 2; panels <= spec.max_panels; panels *= 2) {
    const PanelSum fine = panel_sum(f, lo, hi, panels, rule);
    err = std::abs(fine.value - best);
    best = fine.value;
    if (!std::isfinite(fine.value)) break;
    const double tol = std::max({spec.abs_tol, spec.rel_tol * std::abs(fine.value),
                                 kRoundingFloor * fine.magnitude});
    if (err <= tol) return {fine.value, err, panels};
  }
  throw NoConvergence(best, err);
}

double triangular_double_integral(const RealFunction& f, double t,
                                  const QuadratureSpec& spec) {
  return triangular_double_integral(f, t, 0.0, t, spec);
}

double triangular_double_integral(const RealFunction& f, double t, double lo,
                                  double hi, const QuadratureSpec& spec) {
  if (!(t >= 0)) throw ValidationError("t", "t >= 0");
  const double a = std::max(lo, 0.0);
  const double b = std::min(hi, t);
  if (!(a < b)) return 0.0;
  return integrate_1d([&](double s) { return (t - s) * f(s); }, a, b, spec).value;
}

}  // namespace tefields
