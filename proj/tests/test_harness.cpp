#include "dunkl/harness.hpp"

#include <gtest/gtest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <numbers>

using namespace dunkl;

namespace {

constexpr double kPi = std::numbers::pi;

TestFunction gaussian(double w = 1.0) {
  return {"gaussian", [w](const Point& x) { return cplx(std::exp(-0.5 * dot(x, x) / (w * w))); }};
}

// Hilbert transform of exp(-x^2/2) through the Dawson integral.
double hilbert_gaussian(double x) {
  const double u = x / std::sqrt(2.0);
  const double dawson = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      [&](double t) { return std::exp((t - u) * (t + u)); }, 0.0, u);
  return 2.0 / std::sqrt(kPi) * dawson;
}

}  // namespace

// ---------------------------------------------------------------------------
// L^p scans

TEST(LpScan, PlancherelBoundAtTwo) {
  for (const auto& k : std::vector<std::vector<double>>{{0.5}, {2.5}, {0.0}}) {
    const auto s = ReflectionSetup::product(k);
    const auto report = lp_ratio_scan(make_grid(s), 0, standard_corpus(1, 3), {2.0});
    ASSERT_EQ(report.rows.size(), 50u);
    EXPECT_LE(report.sup_per_p[0], 1.0 + 1e-6) << s.describe();
  }
  const auto s2 = ReflectionSetup::product({0.5, 1.0});
  const auto report = lp_ratio_scan(make_grid(s2), 1, deterministic_corpus(2), {1.25, 2.0, 4.0});
  EXPECT_LE(report.sup_per_p[1], 1.0 + 1e-6);
  for (double r : report.sup_per_p) EXPECT_TRUE(std::isfinite(r));
}

TEST(LpScan, ClassicalHilbertOracle) {
  // The grid sees |x| <= R only, so the oracle norm of Hf is taken over the same box.
  const auto s = ReflectionSetup::product({0.0});
  const auto g = make_grid(s);
  const double R = g->spec().radius;
  const std::vector<double> ps{1.5, 2.0, 3.0};
  const auto report = lp_ratio_scan(g, 0, {gaussian()}, ps);
  for (std::size_t k = 0; k < ps.size(); ++k) {
    const double p = ps[k];
    const double hp = 2.0 * boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
                                [&](double x) { return std::pow(std::abs(hilbert_gaussian(x)), p); }, 0.0, R, 20, 1e-12);
    const double fp = std::sqrt(2.0 * kPi / p);
    const double oracle = std::pow(hp / fp, 1.0 / p);
    EXPECT_NEAR(report.rows[k].ratio / oracle, 1.0, 0.05) << "p=" << p;
  }
}

TEST(LpScan, HomogeneousInTheFunction) {
  const auto s = ReflectionSetup::product({0.5});
  const auto base = deterministic_corpus(1)[4];
  const TestFunction scaled{"scaled", [&](const Point& x) { return cplx(3.0, -4.0) * base.fn(x); }};
  const auto report = lp_ratio_scan(make_grid(s), 0, {base, scaled}, {1.5, 3.0});
  EXPECT_NEAR(report.rows[0].ratio, report.rows[2].ratio, 1e-12 * report.rows[0].ratio);
  EXPECT_NEAR(report.rows[1].ratio, report.rows[3].ratio, 1e-12 * report.rows[1].ratio);
}

TEST(LpScan, RejectsBadExponents) {
  const auto g = make_grid(ReflectionSetup::product({0.5}));
  EXPECT_THROW(lp_ratio_scan(g, 0, {gaussian()}, {1.0}), DomainError);
  EXPECT_THROW(lp_ratio_scan(g, 0, {gaussian()}, {0.5}), DomainError);
  EXPECT_THROW(lp_ratio_scan(g, 0, {gaussian()}, {INFINITY}), DomainError);
  EXPECT_THROW(lp_ratio_scan(g, 0, {gaussian()}, {NAN}), DomainError);
}

// ---------------------------------------------------------------------------
// Riesz inequality

TEST(RieszInequality, ClassicalSecondDerivativeBoundedByLaplacian) {
  const auto s = ReflectionSetup::product({0.0, 0.0});
  const auto rows = riesz_inequality_check(make_grid(s), 0, 0, {gaussian(0.9)}, 2.0);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_FALSE(rows[0].skipped);
  // Fourier side: |xi_1|^2 <= |xi|^2 pointwise; for a radial f the ratio is
  // (mean of cos^4 over the circle)^{1/2} = sqrt(3/8).
  EXPECT_LE(rows[0].ratio, 1.0);
  EXPECT_NEAR(rows[0].ratio, std::sqrt(0.375), 1e-6);
}

TEST(RieszInequality, FactorizationHoldsSpectrally) {
  const auto s = ReflectionSetup::product({0.5, 1.0});
  const auto g = make_grid(s);
  for (double p : {1.5, 2.0, 3.0}) {
    const auto rows = riesz_inequality_check(g, 0, 1, deterministic_corpus(2), p);
    for (const auto& r : rows) {
      ASSERT_FALSE(r.skipped) << r.function;
      EXPECT_TRUE(std::isfinite(r.ratio)) << r.function;
      EXPECT_LE(r.factorization, 1e-5) << r.function;
    }
  }
  const auto s1 = ReflectionSetup::product({2.5});
  for (const auto& r : riesz_inequality_check(make_grid(s1), 0, 0, standard_corpus(1, 9), 2.0))
    EXPECT_LE(r.factorization, 1e-5) << r.function;
}

TEST(RieszInequality, DegenerateInputIsSkipped) {
  const auto s = ReflectionSetup::product({0.5});
  const TestFunction zero{"zero", [](const Point&) { return cplx(0.0); }};
  const auto rows = riesz_inequality_check(make_grid(s), 0, 0, {zero, gaussian()}, 2.0);
  EXPECT_TRUE(rows[0].skipped);
  EXPECT_FALSE(rows[1].skipped);
  // A threshold above the actual Laplacian size also skips.
  EXPECT_TRUE(riesz_inequality_check(make_grid(s), 0, 0, {gaussian()}, 2.0, 1e6)[0].skipped);
}

// ---------------------------------------------------------------------------
// Sobolev inequality

TEST(Sobolev, ExponentArithmeticAndWindow) {
  EXPECT_NEAR(sobolev_exponent(ReflectionSetup::product({0.5, 1.0}), 2.0), 10.0 / 3.0, 1e-14);
  EXPECT_NEAR(sobolev_exponent(ReflectionSetup::product({2.5}), 3.0), 6.0, 1e-14);
  EXPECT_THROW(sobolev_exponent(ReflectionSetup::product({0.5}), 1.5), DomainError);  // 2 gamma_k + N = 2
  EXPECT_THROW(sobolev_exponent(ReflectionSetup::product({0.5, 1.0}), 5.0), DomainError);
  EXPECT_THROW(sobolev_exponent(ReflectionSetup::product({0.5, 1.0}), 1.0), DomainError);
}

TEST(Sobolev, RatiosFiniteOverCorpus) {
  const auto s = ReflectionSetup::product({0.5, 1.0});
  const auto rows = sobolev_inequality_check(make_grid(s), deterministic_corpus(2), 2.0);
  ASSERT_EQ(rows.size(), 12u);
  for (const auto& r : rows) {
    EXPECT_NEAR(r.q, 10.0 / 3.0, 1e-14);
    EXPECT_TRUE(std::isfinite(r.ratio) && r.ratio > 0.0) << r.function;
  }
}

TEST(Sobolev, DilationInvariance) {
  const auto s = ReflectionSetup::product({2.5});
  const auto g = make_grid(s, GridSpec{24.0, 192});
  std::vector<double> ratios;
  for (double p : {1.5, 2.0, 4.0}) {
    const double drift = sobolev_dilation_drift(g, deterministic_corpus(1)[1], p, {0.5, 1.0, 2.0}, &ratios);
    EXPECT_LT(drift, 0.05) << "p=" << p;
  }
  // Two dimensions, 2 gamma_k + N = 5, q = 10/3.
  const auto g2 = make_grid(ReflectionSetup::product({0.5, 1.0}), GridSpec{20.0, 128});
  EXPECT_LT(sobolev_dilation_drift(g2, gaussian(), 2.0, {0.5, 1.0, 2.0}), 0.05);
}

TEST(Sobolev, ClassicalThreeDimensionalOracle) {
  // f = exp(-|x|^2/2) in R^3, p = 2, q = 6:
  // ||f||_6 = (pi/3)^{1/4}, ||grad f||_2 = (3/2 pi^{3/2})^{1/2}.
  const auto s = ReflectionSetup::product({0.0, 0.0, 0.0});
  const auto rows = sobolev_inequality_check(make_grid(s, GridSpec{8.0, 24}), {gaussian()}, 2.0);
  const double oracle = std::pow(kPi / 3.0, 0.25) / std::sqrt(1.5 * std::pow(kPi, 1.5));
  EXPECT_NEAR(rows[0].ratio / oracle, 1.0, 0.10);
}

// ---------------------------------------------------------------------------
// f = I^1 (sum_j R_j T_j f)

TEST(PotentialIdentity, OneDimension) {
  for (double g : {0.5, 2.5}) {
    const auto s = ReflectionSetup::product({g});
    PotentialOptions opts;
    opts.outer_radius = 40.0;
    const auto report = potential_identity_check(make_grid(s), gaussian(), {{0.0}, {0.7}, {-1.3}, {2.0}}, opts);
    EXPECT_LE(report.defect, 1e-3) << s.describe();
  }
}

TEST(PotentialIdentity, TwoDimensions) {
  const auto s = ReflectionSetup::product({0.5, 1.0});
  PotentialOptions opts;
  opts.outer_radius = 25.0;
  opts.angular_points = 8;
  opts.radial_points = 8;
  const TestFunction f{"shifted", [](const Point& x) {
                         return cplx(std::exp(-0.5 * ((x[0] - 0.3) * (x[0] - 0.3) + x[1] * x[1])));
                       }};
  const auto report = potential_identity_check(make_grid(s, GridSpec{12.0, 96}), f, {{0.0, 0.0}, {0.9, -0.5}}, opts);
  EXPECT_LE(report.defect, 1e-3);
}

TEST(PotentialIdentity, RejectsClassicalLine) {
  const auto s = ReflectionSetup::product({0.0});
  EXPECT_THROW(potential_identity_check(make_grid(s), gaussian(), {{0.0}}), DomainError);
}
