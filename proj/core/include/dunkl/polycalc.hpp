#pragma once

#include "dunkl/rootsys.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace dunkl {

using Rational = boost::multiprecision::cpp_rational;

/// The exact rational value of a finite double.
Rational exact_rational(double value);

/// Multivariate polynomial with exact rational coefficients. Canonical form
/// never stores a zero coefficient.
class Poly {
 public:
  using Exponent = std::vector<int>;

  explicit Poly(int variables) : vars_(variables) {}

  static Poly monomial(int variables, Exponent exponent, Rational coefficient = 1);
  static Poly constant(int variables, Rational value);
  /// Random polynomial of total degree <= max_degree with small integer coefficients.
  static Poly random(int variables, int max_degree, std::uint64_t seed, int max_terms = 12);

  int variables() const { return vars_; }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;

  Rational coefficient(const Exponent& e) const;
  void add_term(const Exponent& e, const Rational& c);

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Rational& s) const;
  bool operator==(const Poly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }

  Poly derivative(int j) const;
  /// f composed with the sign flip of coordinate j.
  Poly flip(int j) const;
  /// Exact division by x_j; throws DomainError if x_j does not divide the polynomial.
  Poly divide_by_variable(int j) const;

  double evaluate(std::span<const double> x) const;
  std::string to_string() const;

 private:
  int vars_;
  std::map<Exponent, Rational> terms_;
};

/// T_xi f: directional derivative plus the reflection difference terms, exactly.
Poly dunkl_apply(const ReflectionSetup& setup, std::span<const Rational> xi, const Poly& f);
/// T_j f = T_{e_j} f.
Poly dunkl_apply(const ReflectionSetup& setup, int j, const Poly& f);
/// Delta_k f = sum_j T_j^2 f.
Poly dunkl_laplacian(const ReflectionSetup& setup, const Poly& f);

struct CommutativityReport {
  int trials = 0;
  int failures = 0;
  int degree_failures = 0;
  bool passed() const { return failures == 0 && degree_failures == 0; }
};

/// T_i T_j f == T_j T_i f over random polynomials, plus the degree-lowering
/// check on their homogeneous components.
CommutativityReport run_commutativity_suite(const ReflectionSetup& setup, int trials, int max_degree,
                                            std::uint64_t seed);

}  // namespace dunkl
