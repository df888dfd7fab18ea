#include "dunkl/quadrature.hpp"

#include <gtest/gtest.h>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>

using namespace dunkl;

TEST(Quadrature, LegendreMatchesTabulatedNodes) {
  const Rule& r = gauss_legendre(5);
  ASSERT_EQ(r.size(), 5u);
  EXPECT_NEAR(r.nodes[0], -0.906179845938664, 1e-15);
  EXPECT_NEAR(r.nodes[1], -0.5384693101056831, 1e-15);
  EXPECT_NEAR(r.nodes[2], 0.0, 1e-15);
  EXPECT_NEAR(r.weights[2], 128.0 / 225.0, 1e-15);
}

TEST(Quadrature, LegendreExactForPolynomials) {
  for (int n : {1, 4, 17, 64}) {
    const Rule& r = gauss_legendre(n);
    for (int m = 0; m <= 2 * n - 1; ++m) {
      double s = 0.0;
      for (std::size_t i = 0; i < r.size(); ++i) s += r.weights[i] * std::pow(r.nodes[i], m);
      const double exact = m % 2 ? 0.0 : 2.0 / (m + 1);
      EXPECT_NEAR(s, exact, 1e-13) << "n=" << n << " m=" << m;
    }
  }
}

// Independent oracle: tanh-sinh quadrature copes with the endpoint singularities.
TEST(Quadrature, JacobiMomentsAgreeWithTanhSinh) {
  boost::math::quadrature::tanh_sinh<double> ts;
  const double params[][2] = {{-0.3, 0.7}, {0.5, 1.0}, {1.5, 2.5}, {-0.5, 0.5}, {0.0, 5.0}};
  for (const auto& ab : params) {
    const double a = ab[0], b = ab[1];
    const int n = 12;
    const Rule& r = gauss_jacobi(n, a, b);
    for (int m = 0; m <= 2 * n - 1; m += 3) {
      double s = 0.0;
      for (std::size_t i = 0; i < r.size(); ++i) s += r.weights[i] * std::pow(r.nodes[i], m);
      const double exact = ts.integrate(
          [&](double t, double tc) {
            const double one_minus = t > 0 ? std::abs(tc) : 1.0 - t;
            const double one_plus = t > 0 ? 1.0 + t : std::abs(tc);
            if (one_minus <= 0.0 || one_plus <= 0.0) return 0.0;
            return std::pow(one_minus, a) * std::pow(one_plus, b) * std::pow(t, m);
          },
          -1.0, 1.0);
      EXPECT_NEAR(s, exact, 1e-12 * std::max(1.0, std::abs(exact))) << a << " " << b << " m=" << m;
    }
  }
}

TEST(Quadrature, LargeJacobiRuleIsWellFormed) {
  const Rule& r = gauss_jacobi(256, 0.0, 1.0);
  double mass = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    ASSERT_GT(r.weights[i], 0.0);
    if (i) ASSERT_LT(r.nodes[i - 1], r.nodes[i]);
    mass += r.weights[i];
  }
  EXPECT_NEAR(mass, 2.0, 1e-13);
}

TEST(Quadrature, PowerWeightOnHalfLine) {
  const double e = 1.4, R = 3.0;
  const Rule r = gauss_power_weight(20, e, R);
  for (int m = 0; m < 30; m += 4) {
    double s = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i) s += r.weights[i] * std::pow(r.nodes[i], m);
    const double exact = std::pow(R, m + e + 1) / (m + e + 1);
    EXPECT_NEAR(s / exact, 1.0, 1e-13);
  }
}

TEST(Quadrature, DifferentiationMatrixIsExactOnPolynomials) {
  const Rule& r = gauss_jacobi(24, 0.0, 1.0);
  const auto d = differentiation_matrix(r.nodes);
  const std::size_t n = r.size();
  for (std::size_t i = 0; i < n; ++i) {
    double deriv = 0.0;
    for (std::size_t j = 0; j < n; ++j) deriv += d[i * n + j] * std::pow(r.nodes[j], 7);
    EXPECT_NEAR(deriv, 7.0 * std::pow(r.nodes[i], 6), 1e-11);
  }
}

TEST(Quadrature, BarycentricInterpolation) {
  const Rule& r = gauss_legendre(30);
  std::vector<double> v;
  for (double x : r.nodes) v.push_back(std::exp(-x * x));
  const auto bw = barycentric_weights(r.nodes);
  for (double x : {-0.93, -0.2, 0.0, 0.41, 0.999})
    EXPECT_NEAR(barycentric_eval(r.nodes, bw, v, x), std::exp(-x * x), 1e-13);
}

TEST(Quadrature, RejectsBadParameters) {
  EXPECT_THROW(gauss_jacobi(0, 0.0, 0.0), std::invalid_argument);
  EXPECT_THROW(gauss_jacobi(4, -1.0, 0.0), std::invalid_argument);
}
