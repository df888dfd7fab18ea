#pragma once

#include <span>
#include <vector>

namespace dunkl {

/// Nodes and weights of a one-dimensional quadrature rule, nodes ascending.
struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }
  double sum_weights() const;
};

/// Gauss-Jacobi rule on [-1, 1] for the weight (1-t)^a (1+t)^b, a, b > -1.
///
/// Nodes come from the Golub-Welsch eigenproblem of the orthonormal Jacobi
/// matrix and are then polished by Newton steps on the three-term recurrence.
/// Rules are cached; the returned reference stays valid for the process
/// lifetime.
const Rule& gauss_jacobi(int n, double a, double b);

inline const Rule& gauss_legendre(int n) { return gauss_jacobi(n, 0.0, 0.0); }

/// Gauss-Legendre rule mapped affinely onto [lo, hi].
Rule gauss_legendre_on(int n, double lo, double hi);

/// Gauss rule for  integral_0^R g(x) x^e dx  (Jacobi in the variable 1 + 2x/R).
Rule gauss_power_weight(int n, double exponent, double radius);

/// Barycentric differentiation matrix for polynomial interpolation through
/// `nodes`; row-major, D[i*n + j] = l_j'(x_i).
std::vector<double> differentiation_matrix(std::span<const double> nodes);

/// Barycentric interpolation weights for `nodes` (scaled to avoid overflow).
std::vector<double> barycentric_weights(std::span<const double> nodes);

/// Evaluates the interpolating polynomial of (nodes, values) at x.
double barycentric_eval(std::span<const double> nodes, std::span<const double> bary,
                        std::span<const double> values, double x);

}  // namespace dunkl
