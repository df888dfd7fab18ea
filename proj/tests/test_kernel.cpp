#include "dunkl/kernel.hpp"
#include "dunkl/polycalc.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace dunkl;

TEST(Rank1Kernel, ValueAtOriginAndClassical) {
  EXPECT_EQ(rank1_kernel(0.8, 0.0), cplx(1.0));
  for (double z : {-3.0, 0.4, 7.5})
    EXPECT_NEAR(std::abs(rank1_kernel(0.0, z) - std::exp(z)), 0.0, 1e-15 * std::exp(std::abs(z)));
}

// Coefficients of the eigenfunction T f = f from the exact operator: a_n * c_n = a_{n-1}
// where T x^n = c_n x^{n-1}.
TEST(Rank1Kernel, SeriesCoefficientsMatchExactOperator) {
  const double g = 0.75;
  const auto s = ReflectionSetup::product({g});
  std::vector<Rational> a{Rational(1)};
  for (int n = 1; n <= 40; ++n) {
    const Poly t = dunkl_apply(s, 0, Poly::monomial(1, {n}));
    a.push_back(a.back() / t.coefficient({n - 1}));
  }
  EXPECT_EQ(a[2], Rational(1) / (2 * (1 + 2 * exact_rational(g))));
  for (double z : {0.3, -1.7, 2.5}) {
    double oracle = 0.0;
    for (int n = 40; n >= 0; --n) oracle = oracle * z + static_cast<double>(a[n]);
    EXPECT_NEAR(rank1_kernel(g, z).real(), oracle, 1e-14 * std::abs(oracle));
  }
}

double moment(double gamma, double x, cplx lambda, int npts, cplx& out) {
  const BetaRule r = beta_rule(gamma, npts);
  out = 0.0;
  double mass = 0.0;
  for (std::size_t i = 0; i < r.t.size(); ++i) {
    out += r.w[i] * std::exp(lambda * r.t[i] * x);
    mass += r.w[i];
  }
  return mass;
}

TEST(IntertwiningMeasure, ExponentialMomentIsTheKernel) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  const double g = 0.7;
  for (int t = 0; t < 20; ++t) {
    const cplx lambda(u(rng), u(rng));
    const double x = u(rng);
    cplx m;
    moment(g, x, lambda, 40, m);
    EXPECT_NEAR(std::abs(m - rank1_kernel(g, lambda * x)), 0.0, 1e-10);
  }
  const auto s = ReflectionSetup::product({0.5, 1.3});
  for (int t = 0; t < 20; ++t) {
    const std::vector<cplx> lambda{{u(rng), u(rng)}, {u(rng), u(rng)}};
    const Point x{u(rng), u(rng)};
    const auto mu = intertwining_measure(s, x, 40);
    cplx m = 0.0;
    mu.for_each([&](const Point& eta, double w) { m += w * std::exp(lambda[0] * eta[0] + lambda[1] * eta[1]); });
    EXPECT_NEAR(std::abs(m - dunkl_kernel(s, lambda, x)), 0.0, 1e-10);
  }
}

TEST(IntertwiningMeasure, ProbabilityAndDegenerateCases) {
  for (double g : {0.1, 0.5, 1.0, 2.5}) {
    cplx m;
    EXPECT_NEAR(moment(g, 1.0, 0.0, 30, m), 1.0, 1e-14);
    const BetaRule gr = graded_beta_rule(g, 16, +1, 1e-6);
    double mass = 0.0, first = 0.0;
    for (std::size_t i = 0; i < gr.t.size(); ++i) {
      mass += gr.w[i];
      first += gr.w[i] * gr.t[i];
    }
    EXPECT_NEAR(mass, 1.0, 1e-13);
    // Mean of the measure: 1/(2g+1).
    EXPECT_NEAR(first, 1.0 / (2 * g + 1), 1e-13);
  }
  const auto classical = ReflectionSetup::product({0.0, 0.0});
  const auto mu = intertwining_measure(classical, Point{0.4, -1.0}, 20);
  ASSERT_EQ(mu.size(), 1u);
  mu.for_each([](const Point& eta, double w) {
    EXPECT_EQ(eta[0], 0.4);
    EXPECT_EQ(eta[1], -1.0);
    EXPECT_EQ(w, 1.0);
  });
  const auto s = ReflectionSetup::product({0.5, 1.0});
  EXPECT_EQ(intertwining_measure(s, Point{0.0, 1.0}, 10).size(), 10u);
  EXPECT_THROW(intertwining_measure(s, Point{1.0}, 10), DomainError);
  EXPECT_THROW(intertwining_measure(s, Point{1.0, 1.0}, 0), DomainError);
}

TEST(Rank1Kernel, LargeArgumentsMatchMeasureIntegral) {
  for (double g : {0.3, 0.5, 1.0, 2.5}) {
    for (cplx z : {cplx(0, 30.0), cplx(0, -100.0), cplx(0, 150.0), cplx(-40.0, 0.0), cplx(-12.0, 9.0),
                   cplx(20.0, -5.0)}) {
      cplx m;
      moment(g, 1.0, z, 300, m);
      const cplx e = rank1_kernel(g, z);
      const double scale = std::max(1.0, std::exp(z.real()));
      EXPECT_NEAR(std::abs(e - m) / std::max(std::abs(m), 1e-300 + 0.0 * scale), 0.0, 1e-9)
          << "g=" << g << " z=" << z;
    }
  }
}

TEST(Rank1Kernel, PureImaginaryIsBounded) {
  for (double g : {0.0, 0.5, 1.7})
    for (double th = -200; th <= 200; th += 3.7) EXPECT_LE(std::abs(rank1_kernel(g, cplx(0, th))), 1.0 + 1e-12);
}

TEST(Rank1Kernel, PositiveForRealArguments) {
  for (double g : {0.2, 1.0, 3.0})
    for (double z = -60; z <= 60; z += 2.5) EXPECT_GT(rank1_kernel(g, z).real(), 0.0);
}

TEST(Rank1Kernel, SeriesThrowsWhenCapExceeded) {
  EXPECT_THROW(rank1_kernel_series(0.5, cplx(0, 900.0)), DomainError);
}
