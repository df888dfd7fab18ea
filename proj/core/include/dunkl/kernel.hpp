#pragma once

#include "dunkl/rootsys.hpp"

#include <complex>
#include <span>
#include <string>
#include <vector>

namespace dunkl {

using cplx = std::complex<double>;

/// Rank-one Dunkl kernel E_gamma(z), the solution of T f = f normalised by
/// f(0) = 1, evaluated at the scalar z = lambda * x.
///
/// Small arguments use the power series sum a_n z^n with a_0 = 1 and
/// a_n = a_{n-1} / (n + 2 gamma [n odd]). Large arguments switch to a
/// representation without cancellation: Bessel functions on the imaginary
/// axis, and the Kummer form exp(z) 1F1(gamma; 2 gamma + 1; -2z) for Re z < 0.
cplx rank1_kernel(double gamma, cplx z);

/// Power-series evaluation only, throwing if the series fails to converge
/// within the 500-term cap.
cplx rank1_kernel_series(double gamma, cplx z);

/// E_k(lambda, x) for the product system: product of rank-one factors.
cplx dunkl_kernel(const ReflectionSetup& setup, std::span<const cplx> lambda,
                  std::span<const double> x);

/// E_k(i y, xi) for real y, xi: the kernel of the inverse transform.
cplx dunkl_kernel_imag(const ReflectionSetup& setup, std::span<const double> y,
                       std::span<const double> xi);

/// Probability measure on [-1, 1] with density
/// Gamma(g + 1/2) / (sqrt(pi) Gamma(g)) (1 - t)^{g-1} (1 + t)^g, as a quadrature rule.
/// gamma = 0 gives the point mass at t = 1.
struct BetaRule {
  std::vector<double> t;
  std::vector<double> w;
};

BetaRule beta_rule(double gamma, int npts);

/// Composite rule for the same measure, graded geometrically towards the
/// endpoint `side` (+1 or -1, or 0 for both) down to panels of width
/// `scale`. Used when the integrand is nearly singular close to an endpoint.
BetaRule graded_beta_rule(double gamma, int npts, int side, double scale);

/// Intertwining measure mu_x: tensor product over coordinates of the rank-one
/// measures scaled by x_j, i.e. nodes eta with eta_j = t x_j in co(G.x).
class IntertwiningMeasure {
 public:
  IntertwiningMeasure(Point base, std::vector<BetaRule> factors);

  const Point& base() const { return base_; }
  std::size_t size() const;
  int dimension() const { return static_cast<int>(base_.size()); }
  const std::vector<BetaRule>& factors() const { return factors_; }

  /// Calls fn(eta, weight) for each tensor node.
  template <class Fn>
  void for_each(Fn&& fn) const {
    const int n = dimension();
    std::vector<std::size_t> idx(n, 0);
    Point eta(n);
    for (;;) {
      double w = 1.0;
      for (int j = 0; j < n; ++j) {
        eta[j] = factors_[j].t[idx[j]] * base_[j];
        w *= factors_[j].w[idx[j]];
      }
      fn(static_cast<const Point&>(eta), w);
      int j = n - 1;
      while (j >= 0 && ++idx[j] == factors_[j].t.size()) {
        idx[j] = 0;
        --j;
      }
      if (j < 0) break;
    }
  }

  double total_mass() const;
  /// Text dump, one line per node: eta_1 ... eta_N weight.
  std::string dump() const;

 private:
  Point base_;
  std::vector<BetaRule> factors_;
};

IntertwiningMeasure intertwining_measure(const ReflectionSetup& setup, std::span<const double> x,
                                         int npts);

}  // namespace dunkl
