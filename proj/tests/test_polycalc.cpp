#include "dunkl/polycalc.hpp"

#include <gtest/gtest.h>

using namespace dunkl;

namespace {

Poly x_pow(int vars, int j, int n) {
  Poly::Exponent e(vars, 0);
  e[j] = n;
  return Poly::monomial(vars, e);
}

}  // namespace

TEST(ExactRational, RoundTrips) {
  for (double v : {0.7, -3.25, 1e-30, 12345.678, 0.0})
    EXPECT_EQ(static_cast<double>(exact_rational(v)), v);
  EXPECT_EQ(exact_rational(0.5), Rational(1, 2));
}

TEST(DunklOperator, RankOneMonomials) {
  const Rational g = exact_rational(0.7);
  const auto s = ReflectionSetup::product({0.7});
  for (int n = 0; n <= 9; ++n) {
    // (x^n - (-x)^n)/x is 2 x^{n-1} for odd n and 0 otherwise.
    Poly expected = n ? x_pow(1, 0, n - 1) * Rational(n) : Poly(1);
    if (n % 2) expected = expected + x_pow(1, 0, n - 1) * (2 * g);
    EXPECT_EQ(dunkl_apply(s, 0, x_pow(1, 0, n)), expected) << "n=" << n;
  }
}

TEST(DunklOperator, ClassicalIsPartialDerivative) {
  const auto s = ReflectionSetup::product({0.0, 0.0, 0.0});
  for (std::uint64_t seed = 1; seed < 20; ++seed) {
    const Poly f = Poly::random(3, 6, seed);
    for (int j = 0; j < 3; ++j) EXPECT_EQ(dunkl_apply(s, j, f), f.derivative(j));
  }
}

TEST(DunklOperator, Examples) {
  const auto s = ReflectionSetup::product({0.5, 1.0});
  EXPECT_TRUE(dunkl_apply(s, 1, x_pow(2, 0, 1)).is_zero());
  const std::vector<Rational> xi{Rational(2), Rational(-3)};
  // T_xi (x1 x2): each factor is odd in its own variable.
  Poly f = Poly::monomial(2, {1, 1});
  Poly expected = x_pow(2, 1, 1) * Rational(2 * 2) + x_pow(2, 0, 1) * Rational(-3 * 3);
  EXPECT_EQ(dunkl_apply(s, xi, f), expected);
}

TEST(DunklLaplacian, Examples) {
  const auto c = ReflectionSetup::product({0.0, 0.0});
  EXPECT_EQ(dunkl_laplacian(c, x_pow(2, 0, 2)), Poly::constant(2, 2));
  const Rational g = exact_rational(1.5);
  const auto s = ReflectionSetup::product({1.5});
  EXPECT_EQ(dunkl_laplacian(s, x_pow(1, 0, 2)), Poly::constant(1, 2 + 4 * g));
  EXPECT_TRUE(dunkl_laplacian(s, x_pow(1, 0, 1)).is_zero());
}

TEST(Commutativity, RandomPolynomialsTwoAndThreeVariables) {
  for (const auto& k : std::vector<std::vector<double>>{{0.5, 1.0}, {0.3, 0.0, 2.25}}) {
    const auto s = ReflectionSetup::product(k);
    const auto rep = run_commutativity_suite(s, 100, 8, 2024);
    EXPECT_EQ(rep.trials, 100);
    EXPECT_TRUE(rep.passed()) << rep.failures << " " << rep.degree_failures;
  }
}

TEST(Poly, DivisionRequiresFactor) {
  EXPECT_THROW(Poly::constant(1, 3).divide_by_variable(0), DomainError);
  const Poly f = Poly::monomial(2, {1, 2}, Rational(3, 4));
  EXPECT_DOUBLE_EQ(f.evaluate(std::vector<double>{2.0, 3.0}), 0.75 * 2 * 9);
}
