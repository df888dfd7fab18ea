#include "dunkl/corpus.hpp"
#include "dunkl/polycalc.hpp"
#include "dunkl/transform.hpp"

#include <gtest/gtest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <numbers>

using namespace dunkl;

namespace {

double sq(const Point& x) { return dot(x, x); }

cplx gaussian(const Point& x) { return std::exp(-0.5 * sq(x)); }

std::vector<std::vector<double>> all_setups() { return {{0.0}, {0.5}, {2.5}, {0.5, 1.0}}; }

}  // namespace

TEST(Transform, GaussianIsFixedPoint) {
  for (const auto& k : all_setups()) {
    const auto g = make_grid(ReflectionSetup::product(k));
    const auto f = GridFunction::sample(g, gaussian);
    EXPECT_LE(relative_l2(dunkl_transform(f), f), 1e-8) << g->setup().describe();
  }
}

// Classical oracle: (2 pi)^{-1/2} integral f(x) e^{-i xi x} dx by adaptive Gauss-Kronrod.
TEST(Transform, ClassicalReductionMatchesFourierQuadrature) {
  const auto g = make_grid(ReflectionSetup::product({0.0}));
  auto bump = [](double x) { return 0.5 * std::erfc((x * x - 4.0) / 4.0) * (1.0 + 0.3 * x); };
  const auto f = GridFunction::sample(g, [&](const Point& x) { return cplx(bump(x[0])); });
  const auto ft = dunkl_transform(f);
  for (std::size_t i = 0; i < g->size(); i += 7) {
    const double xi = g->node(i)[0];
    using GK = boost::math::quadrature::gauss_kronrod<double, 61>;
    const double re = GK::integrate([&](double x) { return bump(x) * std::cos(xi * x); }, -12.0, 12.0, 15, 1e-14);
    const double im = GK::integrate([&](double x) { return -bump(x) * std::sin(xi * x); }, -12.0, 12.0, 15, 1e-14);
    const cplx oracle = cplx(re, im) / std::sqrt(2.0 * std::numbers::pi);
    EXPECT_NEAR(std::abs(ft[i] - oracle), 0.0, 1e-8) << "xi=" << xi;
  }
}

TEST(Transform, Linearity) {
  const auto g = make_grid(ReflectionSetup::product({0.5}));
  const auto f = GridFunction::sample(g, [](const Point& x) { return cplx(1.0, 0.3) * x[0] * std::exp(-sq(x)); });
  const auto a = dunkl_transform(f * 2.0);
  const auto b = dunkl_transform(f) * 2.0;
  for (std::size_t i = 0; i < g->size(); ++i) EXPECT_EQ(a[i], b[i]);
}

TEST(Transform, RoundTrip) {
  for (const auto& k : all_setups()) {
    const auto g = make_grid(ReflectionSetup::product(k));
    const auto f = GridFunction::sample(g, gaussian);
    EXPECT_LE(relative_l2(inverse_dunkl_transform(dunkl_transform(f)), f), 1e-7);
    const auto odd = GridFunction::sample(g, [](const Point& x) { return cplx(x[0] * std::exp(-sq(x))); });
    EXPECT_LE(relative_l2(inverse_dunkl_transform(dunkl_transform(odd)), odd), 1e-6);
  }
}

TEST(Transform, Plancherel) {
  for (const auto& k : all_setups()) {
    const auto g = make_grid(ReflectionSetup::product(k));
    EXPECT_LE(plancherel_defect(GridFunction::sample(g, gaussian)), 1e-8);
    for (const auto& tf : random_corpus(g->dimension(), 17, 3))
      EXPECT_LE(plancherel_defect(GridFunction::sample(g, tf.fn)), 1e-6) << tf.name;
    EXPECT_THROW(plancherel_defect(GridFunction(g)), DomainError);
  }
}

TEST(Transform, TailMassIsReported) {
  const auto g = make_grid(ReflectionSetup::product({0.5}));
  const auto f = GridFunction::sample(g, [](const Point& x) { return cplx(std::exp(-0.5 * (x[0] - 10) * (x[0] - 10))); });
  try {
    dunkl_transform(f);
    FAIL() << "expected TailMassError";
  } catch (const TailMassError& e) {
    EXPECT_GT(e.tail(), 1e-10);
  }
}

TEST(GridDunklOp, PolynomialsMatchExactOperator) {
  // Polynomials grow at the box edge, so use a small box: interpolation on
  // 24 nodes per half is exact for degree 8.
  const auto s = ReflectionSetup::product({0.5, 1.0});
  const auto g = make_grid(s, GridSpec{3.5, 24});
  for (std::uint64_t seed = 3; seed < 8; ++seed) {
    const Poly p = Poly::random(2, 8, seed);
    const auto f = GridFunction::sample(g, [&](const Point& x) { return cplx(p.evaluate(x)); });
    for (int j = 0; j < 2; ++j) {
      const Poly tp = dunkl_apply(s, j, p);
      const auto got = grid_dunkl_op(f, j);
      double err = 0.0, scale = 0.0;
      for (std::size_t i = 0; i < g->size(); ++i) {
        const Point x = g->node(i);
        if (std::abs(x[0]) > 3 || std::abs(x[1]) > 3) continue;
        const double want = tp.evaluate(x);
        err = std::max(err, std::abs(got[i] - want));
        scale = std::max(scale, std::abs(want));
      }
      EXPECT_LE(err, 1e-8 * std::max(scale, 1.0)) << p.to_string();
    }
  }
}

TEST(GridDunklOp, KernelIsEigenfunction) {
  for (const auto& k : all_setups()) {
    const auto s = ReflectionSetup::product(k);
    const auto g = make_grid(s);
    std::vector<cplx> lambda{0.3, -0.45};
    lambda.resize(s.dimension());
    const auto e = GridFunction::sample(g, [&](const Point& x) { return dunkl_kernel(s, lambda, x); });
    for (int j = 0; j < s.dimension(); ++j)
      EXPECT_LE(relative_l2(grid_dunkl_op(e, j), e * lambda[j]), 1e-7) << s.describe();
  }
}

TEST(GridDunklOp, ClassicalIsDerivative) {
  const auto g = make_grid(ReflectionSetup::product({0.0, 0.0}));
  const auto f = GridFunction::sample(g, gaussian);
  const auto d = GridFunction::sample(g, [](const Point& x) { return -x[1] * gaussian(x); });
  EXPECT_LE(relative_l2(grid_dunkl_op(f, 1), d), 1e-10);
}

TEST(MultiplierIdentity, GaussianAndOddFactor) {
  const auto g = make_grid(ReflectionSetup::product({0.5, 1.0}));
  const auto f = GridFunction::sample(g, gaussian);
  const auto h = GridFunction::sample(g, [](const Point& x) { return x[1] * gaussian(x); });
  for (int j = 0; j < 2; ++j) {
    EXPECT_LE(multiplier_identity_defect(f, j), 1e-6);
    EXPECT_LE(multiplier_identity_defect(h, j), 1e-6);
  }
  // Directional reading of the identity agrees with the coordinate form.
  const Point v{0.6, -1.3};
  EXPECT_LE(multiplier_identity_defect(h, v), 1e-6);
  const auto g0 = make_grid(ReflectionSetup::product({0.0}));
  EXPECT_LE(multiplier_identity_defect(GridFunction::sample(g0, gaussian), 0), 1e-10);
}

TEST(TransformCorpus, PlancherelInversionAndMultiplierIdentity) {
  for (const auto& k : all_setups()) {
    const auto g = make_grid(ReflectionSetup::product(k));
    for (const auto& tf : deterministic_corpus(g->dimension())) {
      const auto f = GridFunction::sample(g, tf.fn);
      EXPECT_LE(plancherel_defect(f), 1e-6) << tf.name;
      EXPECT_LE(relative_l2(inverse_dunkl_transform(dunkl_transform(f)), f), 1e-6) << tf.name;
      for (int j = 0; j < g->dimension(); ++j) EXPECT_LE(multiplier_identity_defect(f, j), 1e-6) << tf.name;
    }
  }
}

TEST(SpectralEvaluator, ReproducesGridValuesAndOffGridPoints) {
  const auto s = ReflectionSetup::product({0.5, 1.0});
  const auto g = make_grid(s);
  const auto f = GridFunction::sample(g, [](const Point& x) { return cplx(x[0] + 0.5) * gaussian(x); });
  const SpectralEvaluator eval(dunkl_transform(f));
  for (const Point& z : {Point{0.0, 0.0}, Point{0.37, -1.21}, Point{-2.5, 0.8}})
    EXPECT_NEAR(std::abs(eval(z) - (z[0] + 0.5) * gaussian(z)), 0.0, 1e-9);
}
