#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dunkl {

using Point = std::vector<double>;

/// Raised when an argument violates an operation's documented precondition.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Diagonal sign-flip matrix, an element of the group Z_2^N.
struct GroupElement {
  std::vector<std::int8_t> signs;

  Point apply(std::span<const double> x) const;
};

/// Reflection group, root system and multiplicity function.
///
/// Only products of rank-one systems are supported: the roots are
/// +-sqrt(2) e_j, normalised to |alpha|^2 = 2, and G = Z_2^N acts by sign
/// flips. The multiplicity of the root pair +-sqrt(2) e_j is `gamma_j`.
/// Values are immutable once built.
class ReflectionSetup {
 public:
  /// Product system Z_2^N with one multiplicity per coordinate.
  static ReflectionSetup product(std::vector<double> multiplicities);

  int dimension() const { return static_cast<int>(gammas_.size()); }
  std::span<const double> multiplicities() const { return gammas_; }
  double multiplicity(int coordinate) const { return gammas_.at(coordinate); }

  /// Positive roots alpha_j = sqrt(2) e_j, one per coordinate.
  const std::vector<Point>& positive_roots() const { return roots_; }
  /// Multiplicity k(alpha) of positive_roots()[r].
  double root_multiplicity(int r) const { return gammas_.at(r); }

  /// All 2^N sign flips, identity first.
  const std::vector<GroupElement>& group_elements() const { return group_; }

  /// Reflection sigma_alpha of x across the hyperplane orthogonal to root r.
  Point reflect(int r, std::span<const double> x) const;

  bool is_classical() const;
  std::string describe() const;

 private:
  explicit ReflectionSetup(std::vector<double> gammas);

  std::vector<double> gammas_;
  std::vector<Point> roots_;
  std::vector<GroupElement> group_;
};

struct DerivedConstants {
  double gamma_k = 0.0;  ///< sum of multiplicities over positive roots
  double p_k = 0.0;      ///< 2 gamma_k + N + 1
  double c_k = 0.0;      ///< integral of exp(-|x|^2/2) dm_k
  double d_k = 0.0;      ///< Riesz normalisation 2^{(p_k-1)/2} Gamma(p_k/2) / sqrt(pi)
  std::vector<double> weight_exponents;  ///< 2 gamma_j per coordinate
};

DerivedConstants compute_constants(const ReflectionSetup& setup);

/// Gaussian mass of m_k in one coordinate, 2^{2g+1/2} Gamma(g + 1/2).
double gaussian_mass_1d(double gamma);

/// Independent check of c_k by Gauss-Laguerre-type quadrature.
double gaussian_mass_by_quadrature(const ReflectionSetup& setup, int points = 64);

/// Density of m_k: product over positive roots of |<alpha, x>|^{2 k(alpha)}.
double weight_density(const ReflectionSetup& setup, std::span<const double> x);

/// min over g in G of |g.x - y|.
double orbit_distance(const ReflectionSetup& setup, std::span<const double> x,
                      std::span<const double> y);

/// max over g in G of |g.x - y|.
double orbit_distance_max(const ReflectionSetup& setup, std::span<const double> x,
                          std::span<const double> y);

double norm(std::span<const double> x);
double dot(std::span<const double> x, std::span<const double> y);

}  // namespace dunkl
