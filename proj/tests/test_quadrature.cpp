#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "tefields/errors.hpp"
#include "tefields/oracle.hpp"
#include "tefields/potential_kernel.hpp"
#include "tefields/quadrature.hpp"

using namespace tefields;

TEST(GaussLegendre, WeightsSumToTwoAndNodesAreSymmetric) {
  for (int n : {2, 5, 16, 40}) {
    const GaussLegendreRule& r = gauss_legendre(n);
    ASSERT_EQ(r.nodes.size(), static_cast<std::size_t>(n));
    EXPECT_NEAR(std::accumulate(r.weights.begin(), r.weights.end(), 0.0), 2.0, 1e-14);
    for (int i = 0; i < n; ++i) {
      EXPECT_NEAR(r.nodes[i], -r.nodes[n - 1 - i], 1e-15);
      EXPECT_NEAR(r.weights[i], r.weights[n - 1 - i], 1e-15);
      EXPECT_GT(r.weights[i], 0.0);
    }
  }
}

TEST(GaussLegendre, ExactForPolynomialsUpToDegree2nMinus1) {
  const int n = 6;
  const GaussLegendreRule& r = gauss_legendre(n);
  for (int k = 0; k <= 2 * n - 1; ++k) {
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += r.weights[i] * std::pow(r.nodes[i], k);
    const double exact = k % 2 == 1 ? 0.0 : 2.0 / (k + 1);
    EXPECT_NEAR(sum, exact, 1e-14) << "degree " << k;
  }
}

TEST(Integrate1d, Constant) {
  EXPECT_NEAR(integrate_1d([](double) { return 1.0; }, 0.0, 1.0).value, 1.0, 1e-14);
}

TEST(Integrate1d, QuadraticIsExactWithTwoNodes) {
  const QuadratureSpec spec{2, 16, 1e-10, 1e-13};
  EXPECT_NEAR(integrate_1d([](double x) { return x * x; }, 0.0, 1.0, spec).value, 1.0 / 3.0,
              4e-16);
}

TEST(Integrate1d, GaussianAgreesWithTransverseFactor) {
  const double q = integrate_1d([](double x) { return std::exp(-2 * x * x); }, 0.0, 10.0).value;
  const double closed = transverse_factor(0.0, PhysParams{}, 0);
  EXPECT_NEAR(q, closed, 1e-12);
  EXPECT_NEAR(q, 0.626657, 1e-6);
  EXPECT_NEAR(q, std::sqrt(M_PI / 8.0) * std::erf(10.0 * std::sqrt(2.0)), 1e-12);
}

TEST(Integrate1d, EmptyIntervalIsZero) {
  const QuadratureResult r = integrate_1d([](double x) { return std::exp(x); }, 2.0, 2.0);
  EXPECT_EQ(r.value, 0.0);
}

TEST(Integrate1d, ReversedIntervalIsRejected) {
  EXPECT_THROW(integrate_1d([](double) { return 1.0; }, 1.0, 0.0), ValidationError);
}

TEST(Integrate1d, PanelLimitRaisesNoConvergenceWithEstimate) {
  const QuadratureSpec spec{4, 2, 1e-12, 1e-15};
  try {
    integrate_1d([](double x) { return std::sin(200.0 * x); }, 0.0, 3.0, spec);
    FAIL() << "expected NoConvergence";
  } catch (const NoConvergence& e) {
    EXPECT_TRUE(std::isfinite(e.estimate()));
    EXPECT_GT(e.error_bound(), 0.0);
  }
}

TEST(Integrate1d, ReportsErrorAndPanels) {
  const QuadratureResult r =
      integrate_1d([](double x) { return std::cos(x); }, 0.0, 20.0, {16, 1024, 1e-12, 1e-15});
  EXPECT_NEAR(r.value, std::sin(20.0), 1e-12);
  EXPECT_GE(r.panels, 1);
  EXPECT_LE(r.error, 1e-11);
}

TEST(Integrate1d, Linearity) {
  const auto f = [](double x) { return std::exp(-0.5 * x) * std::cos(3 * x); };
  const auto g = [](double x) { return 1.0 / (1.0 + x * x); };
  const double alpha = 2.75;
  const double beta = -1.5;
  const double combined =
      integrate_1d([&](double x) { return alpha * f(x) + beta * g(x); }, 0.0, 4.0).value;
  const double separate =
      alpha * integrate_1d(f, 0.0, 4.0).value + beta * integrate_1d(g, 0.0, 4.0).value;
  EXPECT_LT(std::abs(combined - separate), 1e-12 * std::abs(separate));
}

TEST(Integrate1d, TighterToleranceNeverIncreasesDiscrepancy) {
  const auto f = [](double x) { return std::exp(-2 * (x - 1.3) * (x - 1.3)) * std::cos(4 * x); };
  // Reference from 10^6 nodes: 62500 panels of the 16-point rule.
  const GaussLegendreRule& rule = gauss_legendre(16);
  const double lo = 0.0;
  const double hi = 4.0;
  const int panels = 62500;
  const double width = (hi - lo) / panels;
  long double reference = 0.0L;
  for (int p = 0; p < panels; ++p) {
    const double mid = lo + (p + 0.5) * width;
    for (int i = 0; i < 16; ++i) {
      reference += rule.weights[i] * 0.5 * width * f(mid + 0.5 * width * rule.nodes[i]);
    }
  }
  double previous = INFINITY;
  for (double tol = 1e-3; tol >= 1e-13; tol /= 10) {
    const QuadratureSpec spec{16, 4096, tol, 1e-300};
    const double d = std::abs(integrate_1d(f, lo, hi, spec).value - static_cast<double>(reference));
    EXPECT_LE(d, previous + 1e-15) << "rel_tol " << tol;
    previous = d;
  }
}

TEST(Integrate1d, BitwiseDeterministic) {
  const auto f = [](double x) { return std::sin(x) * std::exp(-x); };
  const double a = integrate_1d(f, 0.0, 7.0).value;
  const double b = integrate_1d(f, 0.0, 7.0).value;
  EXPECT_EQ(a, b);
}

TEST(QuadratureSpec, Validation) {
  EXPECT_NO_THROW(QuadratureSpec{}.validate());
  EXPECT_THROW((QuadratureSpec{1, 10, 1e-10, 1e-13}.validate()), ValidationError);
  EXPECT_THROW((QuadratureSpec{16, 0, 1e-10, 1e-13}.validate()), ValidationError);
  EXPECT_THROW((QuadratureSpec{16, 10, 0.0, 1e-13}.validate()), ValidationError);
  EXPECT_THROW((QuadratureSpec{16, 10, 1e-10, -1.0}.validate()), ValidationError);
  try {
    QuadratureSpec{1, 10, 1e-10, 1e-13}.validate();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.key(), "nodes_per_panel");
  }
}

TEST(TriangularDoubleIntegral, ZeroTime) {
  EXPECT_EQ(triangular_double_integral([](double) { return 1.0; }, 0.0), 0.0);
}

TEST(TriangularDoubleIntegral, ConstantIntegrand) {
  EXPECT_NEAR(triangular_double_integral([](double) { return 1.0; }, 2.0), 2.0, 1e-14);
}

TEST(TriangularDoubleIntegral, LinearIntegrand) {
  EXPECT_NEAR(triangular_double_integral([](double s) { return s; }, 1.0), 1.0 / 6.0, 1e-15);
}

TEST(TriangularDoubleIntegral, NegativeTimeRejected) {
  EXPECT_THROW(triangular_double_integral([](double) { return 1.0; }, -1.0), ValidationError);
}

TEST(TriangularDoubleIntegral, SupportRestrictionMatchesFullRange) {
  const auto f = [](double s) { return s >= 1.0 && s <= 2.0 ? std::sin(M_PI * (s - 1.0)) : 0.0; };
  const double restricted = triangular_double_integral(f, 3.0, 1.0, 2.0);
  // Exact: integral over [1,2] of (3 - s) sin(pi (s - 1)) ds = 3/pi.
  EXPECT_NEAR(restricted, 3.0 / M_PI, 1e-12);
  EXPECT_EQ(triangular_double_integral(f, 0.5, 1.0, 2.0), 0.0);
}

TEST(TriangularDoubleIntegral, AgreesWithNestedOracleOnRandomSmoothIntegrands) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 30; ++i) {
    const double A = 0.1 + 2 * u(rng);
    const double b = 0.5 + 8 * u(rng);
    const double c = 3 * u(rng);
    const double B = 0.1 + u(rng);
    const double w = 0.5 + 6 * u(rng);
    const double phi = 6.28 * u(rng);
    const double C = u(rng);
    const double t = 0.1 + 2.9 * u(rng);
    const auto f = [=](double s) {
      return A * std::exp(-b * (s - c) * (s - c)) + B * (1.5 + std::sin(w * s + phi)) + C * s * s;
    };
    const double reduced = triangular_double_integral(f, t);
    const double nested = oracle::nested_double_time_integral(f, t);
    EXPECT_LT(std::abs(reduced - nested) / std::abs(nested), 1e-9) << "integrand " << i;
  }
}
