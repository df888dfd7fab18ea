#include "dunkl/czd.hpp"

#include "dunkl/corpus.hpp"

#include <gtest/gtest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <map>
#include <numbers>
#include <random>

using namespace dunkl;

namespace {

constexpr double kPi = std::numbers::pi;

// 2-D ball mass by Cartesian slicing: closed-form chord mass in t2, tanh-sinh in t1
// with a split at t1 = 0.
double ball_mass_2d_oracle(double g1, double g2, double x1, double x2, double r) {
  boost::math::quadrature::tanh_sinh<double> ts;
  auto slice = [&](double t) {
    const double h = std::sqrt(std::max(r * r - (t - x1) * (t - x1), 0.0));
    auto prim = [&](double s) { return std::copysign(std::pow(std::abs(s), 2 * g2 + 1), s); };
    const double chord = std::pow(2.0, g2) / (2 * g2 + 1) * (prim(x2 + h) - prim(x2 - h));
    return std::pow(2.0, g1) * std::pow(std::abs(t), 2 * g1) * chord;
  };
  const double a = x1 - r, b = x1 + r;
  if (a < 0.0 && b > 0.0) return ts.integrate(slice, a, 0.0, 1e-14) + ts.integrate(slice, 0.0, b, 1e-14);
  return ts.integrate(slice, a, b, 1e-14);
}

// Classical dyadic stopping time on [-L, L], plain interval lengths, written
// level by level: returns selected intervals as (level, index) -> mean.
std::map<std::pair<int, std::size_t>, double> classical_cz(const std::vector<double>& f, int levels, double lambda) {
  std::map<std::pair<int, std::size_t>, double> selected;
  std::vector<bool> covered(f.size(), false);
  for (int level = 0; level <= levels; ++level) {
    const std::size_t side = f.size() >> level;
    for (std::size_t q = 0; q < (std::size_t{1} << level); ++q) {
      if (covered[q * side]) continue;
      double s = 0.0, sa = 0.0;
      for (std::size_t i = q * side; i < (q + 1) * side; ++i) {
        s += f[i];
        sa += std::abs(f[i]);
      }
      if (sa / static_cast<double>(side) > lambda) {
        selected[{level, q}] = s / static_cast<double>(side);
        for (std::size_t i = q * side; i < (q + 1) * side; ++i) covered[i] = true;
      }
    }
  }
  return selected;
}

// Hilbert transform of exp(-x^2/2): (2/sqrt(pi)) F(x/sqrt2), F the Dawson integral.
double hilbert_gaussian(double x) {
  const double u = x / std::sqrt(2.0);
  const double dawson = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      [&](double t) { return std::exp((t - u) * (t + u)); }, 0.0, u);
  return 2.0 / std::sqrt(kPi) * dawson;
}

double bisect(const std::function<double(double)>& g, double a, double b) {
  for (int i = 0; i < 200; ++i) {
    const double m = 0.5 * (a + b);
    ((g(a) > 0) == (g(m) > 0) ? a : b) = m;
  }
  return 0.5 * (a + b);
}

}  // namespace

// ---------------------------------------------------------------------------
// masses and doubling

TEST(Masses, IntervalMassClosedForm) {
  EXPECT_NEAR(interval_mass(0.0, -1.0, 2.5), 3.5, 1e-15);
  // 2^{1/2} int_0^2 t dt = 2 sqrt2.
  EXPECT_NEAR(interval_mass(0.5, 0.0, 2.0), 2.0 * std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(interval_mass(0.5, -2.0, 2.0), 4.0 * std::sqrt(2.0), 1e-14);
}

TEST(Masses, BallMassMatchesCartesianOracle) {
  const double g1 = 0.5, g2 = 1.0;
  const auto s = ReflectionSetup::product({g1, g2});
  const std::vector<std::array<double, 3>> cases{
      {0.0, 0.0, 1.0}, {0.3, -0.2, 1.0}, {2.0, 1.5, 0.7}, {0.0, 1.2, 0.5}, {-1.0, 0.0, 2.5}, {1.0, 1.0, 1.0}};
  for (const auto& [x1, x2, r] : cases) {
    const Point x{x1, x2};
    const double oracle = ball_mass_2d_oracle(g1, g2, x1, x2, r);
    EXPECT_NEAR(ball_mass(s, x, r) / oracle, 1.0, 1e-10) << x1 << "," << x2 << " r=" << r;
  }
}

TEST(Doubling, LebesgueIsTwoToTheN) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int n : {1, 2}) {
    const auto s = ReflectionSetup::product(std::vector<double>(n, 0.0));
    for (int trial = 0; trial < 10; ++trial) {
      Point x(n);
      for (auto& v : x) v = trial == 0 ? 0.0 : u(rng);
      EXPECT_NEAR(doubling_ratio(s, x, 0.1 + std::abs(u(rng))), std::pow(2.0, n), 1e-12);
    }
  }
}

TEST(Doubling, PowerWeightAtOrigin) {
  for (double g : {0.5, 2.5, 0.25}) {
    const auto s = ReflectionSetup::product({g});
    const Point x{0.0};
    EXPECT_NEAR(doubling_ratio(s, x, 0.7), std::pow(2.0, 2 * g + 1), 1e-12);
  }
  // m_k(B(0, r)) scales like r^{2 gamma_k + N}.
  const auto s = ReflectionSetup::product({0.5, 1.0});
  const Point x{0.0, 0.0};
  EXPECT_NEAR(doubling_ratio(s, x, 1.3) / std::pow(2.0, 5.0), 1.0, 1e-12);
}

TEST(Doubling, RejectsNonPositiveRadius) {
  const auto s = ReflectionSetup::product({0.5});
  const Point x{1.0};
  EXPECT_THROW(doubling_ratio(s, x, 0.0), DomainError);
  EXPECT_THROW(doubling_ratio(s, x, -1.0), DomainError);
}

TEST(Doubling, SupBoundedAndStableUnderRefinement) {
  for (auto gammas : {std::vector<double>{0.5}, std::vector<double>{2.5}, std::vector<double>{0.5, 1.0}}) {
    const auto s = ReflectionSetup::product(gammas);
    const auto coarse = doubling_scan(s, 2000, 11, 16);
    const auto fine = doubling_scan(s, 2000, 11, 32);
    const double bound = std::pow(2.0, 2.0 * compute_constants(s).gamma_k + s.dimension());
    EXPECT_TRUE(std::isfinite(coarse.sup));
    EXPECT_LE(coarse.sup, bound * (1.0 + 1e-9));
    EXPECT_LT(std::abs(fine.sup - coarse.sup) / fine.sup, 0.05);
  }
}

// ---------------------------------------------------------------------------
// Calderon-Zygmund decomposition

TEST(CZ, MatchesClassicalDyadicOracle) {
  const auto s = ReflectionSetup::product({0.0});
  const auto grid = make_cell_grid(s, 4.0, 8);
  auto step = [](const Point& x) {
    const double t = x[0];
    double v = 0.0;
    if (t > 0.3 && t < 0.7) v += 5.0;
    if (t > -2.0 && t < -1.0) v -= 1.5;
    if (t > 2.0 && t < 2.1) v += 20.0;
    return cplx(v);
  };
  const auto f = sample_cells(grid, step);
  std::vector<double> plain(f.values.size());
  for (std::size_t i = 0; i < plain.size(); ++i) plain[i] = f.values[i].real();

  for (double lambda : {0.8, 1.0, 2.0, 4.9, 6.0, 19.0, 25.0}) {
    const auto cz = cz_decompose(f, lambda);
    const auto oracle = classical_cz(plain, 8, lambda);
    ASSERT_EQ(cz.bad.size(), oracle.size()) << lambda;
    for (const auto& b : cz.bad) {
      const std::size_t q = b.lo[0] / b.side;
      const auto it = oracle.find({b.level, q});
      ASSERT_NE(it, oracle.end()) << "level " << b.level << " index " << q;
      EXPECT_NEAR(b.mean.real(), it->second, 1e-12);
    }
    EXPECT_TRUE(verify_decomposition(cz, f).pass());
  }
}

TEST(CZ, AboveSupNormEverythingIsGood) {
  const auto s = ReflectionSetup::product({0.5, 1.0});
  const auto grid = make_cell_grid(s, 6.0, 6);
  const auto f = sample_cells(grid, deterministic_corpus(2)[3].fn);
  const auto cz = cz_decompose(f, 1.01 * f.sup_norm());
  EXPECT_TRUE(cz.bad.empty());
  EXPECT_EQ(cz.good.values, f.values);
}

TEST(CZ, ZeroFunctionIsAllGood) {
  const auto s = ReflectionSetup::product({0.5});
  const auto grid = make_cell_grid(s, 6.0, 8);
  const auto f = sample_cells(grid, [](const Point&) { return cplx(0.0); });
  const auto cz = cz_decompose(f, 1e-3);
  EXPECT_TRUE(cz.bad.empty());
  const auto p = verify_decomposition(cz, f);
  EXPECT_EQ(p.reconstruction, 0.0);
  EXPECT_EQ(p.total_bound, 0.0);
}

TEST(CZ, RejectsBadLevels) {
  const auto s = ReflectionSetup::product({0.5});
  const auto grid = make_cell_grid(s, 6.0, 8);
  const auto f = sample_cells(grid, deterministic_corpus(1)[0].fn);
  EXPECT_THROW(cz_decompose(f, 0.0), DomainError);
  EXPECT_THROW(cz_decompose(f, -1.0), DomainError);
  EXPECT_THROW(cz_decompose(f, 1e-6), DomainError);  // below the box average
}

TEST(CZ, RandomSmoothFunctionsPassAllProperties) {
  const auto s = ReflectionSetup::product({0.5});
  const auto grid = make_cell_grid(s, 8.0, 10);
  const auto corpus = random_corpus(1, 2024, 20);
  double total_mass = 0.0;
  for (std::size_t i = 0; i < grid->size(); ++i) total_mass += grid->mass(i);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto f = sample_cells(grid, corpus[i].fn);
    const double lo = f.l1_norm() / total_mass, hi = f.sup_norm();
    // lambda spread log-uniformly between the box average and the sup norm.
    const double t = (static_cast<double>(i) + 0.5) / static_cast<double>(corpus.size());
    const double lambda = lo * std::pow(hi / lo, t);
    const auto cz = cz_decompose(f, lambda);
    const auto p = verify_decomposition(cz, f);
    EXPECT_LE(p.reconstruction, 1e-12);
    EXPECT_TRUE(p.supports_in_balls);
    EXPECT_LE(p.mean_zero, 1e-12);
    EXPECT_LE(p.good_bound, 64.0);
    EXPECT_LE(p.local_bound, 64.0);
    EXPECT_LE(p.total_bound, 64.0);
    EXPECT_TRUE(p.pass()) << corpus[i].name << " lambda=" << lambda;
  }
}

TEST(CZ, GridFunctionInputIn2D) {
  const auto s = ReflectionSetup::product({0.5, 1.0});
  const auto g = make_grid(s, GridSpec{12.0, 48});
  const auto f = GridFunction::sample(g, [](const Point& x) {
    return cplx(std::exp(-0.5 * ((x[0] - 1.0) * (x[0] - 1.0) + 2.0 * (x[1] + 0.5) * (x[1] + 0.5))));
  });
  const auto cz = cz_decompose(f, 0.3 * f.sup_norm(), 6);
  ASSERT_FALSE(cz.bad.empty());
  const auto cells = make_cell_grid(s, 12.0, 6);
  const auto p = verify_decomposition(cz, resample(f, cells));
  EXPECT_TRUE(p.pass()) << p.good_bound << " " << p.local_bound << " " << p.total_bound;
}

// ---------------------------------------------------------------------------
// weak (1,1) probe

TEST(Weak11, ZeroFunctionGivesZero) {
  const auto s = ReflectionSetup::product({0.5});
  const auto g = make_grid(s);
  const auto rows = weak11_probe(GridFunction(g), 0, {0.01, 0.1, 1.0});
  for (const auto& r : rows) {
    EXPECT_EQ(r.level_set_mass, 0.0);
    EXPECT_EQ(r.ratio, 0.0);
  }
}

TEST(Weak11, ClassicalHilbertOracle) {
  const auto s = ReflectionSetup::product({0.0});
  const auto g = make_grid(s);
  const auto f = GridFunction::sample(g, [](const Point& x) { return cplx(std::exp(-0.5 * x[0] * x[0])); });
  const double l1 = std::sqrt(2.0 * kPi);
  const double peak_x = bisect([](double x) { return (hilbert_gaussian(x + 1e-6) - hilbert_gaussian(x - 1e-6)); },
                               0.5, 2.5);
  const std::vector<double> lambdas{0.1, 0.2, 0.3, 0.4};
  const auto rows = weak11_probe(f, 0, lambdas);
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    const double l = lambdas[i];
    auto level = [&](double x) { return hilbert_gaussian(x) - l; };
    const double a = bisect(level, 0.0, peak_x), b = bisect(level, peak_x, 11.0);
    const double oracle = l * 2.0 * (b - a) / l1;
    EXPECT_NEAR(rows[i].ratio / oracle, 1.0, 0.10) << "lambda=" << l;
  }
}

TEST(Weak11, GaussianRatioBounded) {
  const auto s = ReflectionSetup::product({0.5, 1.0});
  const auto g = make_grid(s, GridSpec{12.0, 48});
  const auto f = GridFunction::sample(g, deterministic_corpus(2)[0].fn);
  std::vector<double> lambdas;
  for (int i = 0; i <= 12; ++i) lambdas.push_back(0.01 * std::pow(1000.0, i / 12.0));
  for (int j = 0; j < 2; ++j)
    for (const auto& r : weak11_probe(f, j, lambdas)) {
      EXPECT_TRUE(std::isfinite(r.ratio));
      EXPECT_LE(r.ratio, 10.0);
    }
}
