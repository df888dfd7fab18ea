#pragma once

#include "dunkl/kernel.hpp"
#include "dunkl/rootsys.hpp"
#include "dunkl/transform.hpp"
#include "dunkl/translate.hpp"

#include <atomic>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace dunkl {

struct KernelOptions {
  int mu_points = 24;        ///< Jacobi nodes per coordinate for mu_x
  int panel_points = 10;     ///< nodes per graded panel near a singular corner
  double hyperplane_tol = 1e-6;  ///< |y_j| < tol |y| switches K^(alpha_j) to its limit
  double singular_tol = 1e-9;    ///< minimum orbit distance between x and y
};

/// Riesz kernel K_j(x, y) and its pieces, evaluated by quadrature over mu_x.
///
///   K1_j(x, y)     = int (eta_j - y_j) / A^p dmu_x(eta)
///   Kalpha_r(x, y) = <y, alpha_r>^{-1} int [A^{2-p}(x, y, eta) - A^{2-p}(x, sigma_r y, eta)] dmu_x(eta)
///   K_j            = d_k { K1_j + sum_r k_r (alpha_r)_j / (p - 2) Kalpha_r }
///
/// with p = p_k and A(x, y, eta) = sqrt(|x|^2 + |y|^2 - 2 <y, eta>). A^2 is
/// linear in eta, so the integrand peaks at the corner of co(G.x) closest to
/// y; the mu_x rule is graded towards that corner in each coordinate.
///
/// Every node is checked against min_g |g.x - y| <= A <= max_g |g.x - y|;
/// violations are counted (thread-safe) rather than thrown.
class KernelField {
 public:
  explicit KernelField(const ReflectionSetup& setup, KernelOptions options = {});

  const ReflectionSetup& setup() const { return setup_; }
  const DerivedConstants& constants() const { return constants_; }
  const KernelOptions& options() const { return options_; }

  double K1(int j, std::span<const double> x, std::span<const double> y) const;
  double Kalpha(int r, std::span<const double> x, std::span<const double> y) const;
  double full(int j, std::span<const double> x, std::span<const double> y) const;

  struct Parts {
    double k1 = 0.0;
    double kalpha = 0.0;  ///< K^(alpha_j); only the root e_j contributes to K_j here
    double full = 0.0;
  };
  Parts parts(int j, std::span<const double> x, std::span<const double> y) const;

  std::uint64_t nodes_checked() const { return checked_.load(); }
  std::uint64_t sandwich_violations() const { return violations_.load(); }

 private:
  IntertwiningMeasure measure_for(std::span<const double> x, std::span<const double> y, int both_ends) const;
  void require_separated(std::span<const double> x, std::span<const double> y) const;

  ReflectionSetup setup_;
  DerivedConstants constants_;
  KernelOptions options_;
  mutable std::atomic<std::uint64_t> checked_{0};
  mutable std::atomic<std::uint64_t> violations_{0};
};

/// A(x, y, eta); rejects eta outside co(G.x) = {|eta_j| <= |x_j|}.
double metric_A(const ReflectionSetup& setup, std::span<const double> x, std::span<const double> y,
                std::span<const double> eta);

double kernel_K1(const ReflectionSetup& setup, int j, std::span<const double> x, std::span<const double> y);
/// K^(alpha) for the root alpha = sqrt2 e_r.
double kernel_Kalpha(const ReflectionSetup& setup, int r, std::span<const double> x, std::span<const double> y);
double kernel_full(const ReflectionSetup& setup, int j, std::span<const double> x, std::span<const double> y);

/// The Riesz symbol -i xi_j / |xi|, with 0 at xi = 0.
cplx riesz_symbol(std::span<const double> xi, int j);

/// Multiplier route: inverse transform of -i xi_j / |xi| F_k f.
GridFunction riesz_multiplier(const GridFunction& f, int j);

/// Multiplier route evaluated off the grid.
class RieszMultiplierRoute {
 public:
  RieszMultiplierRoute(const GridFunction& f, int j);
  cplx operator()(std::span<const double> x) const { return eval_(x); }

 private:
  SpectralEvaluator eval_;
};

struct TruncatedOptions {
  double outer_radius = 0.0;  ///< 0: |x| + 12
  double panel_width = 0.5;   ///< radial Gauss-Legendre panel width beyond eps_0
  int radial_points = 16;     ///< nodes per radial panel
  int angular_points = 48;    ///< Jacobi nodes per quadrant (2-D)
};

struct TruncatedResult {
  std::vector<double> eps;
  std::vector<cplx> values;  ///< truncated integrals, one per eps
  cplx limit;                ///< Richardson extrapolation of `values`
};

/// d_k / c_k  int_{|y| > eps} tau_x f(-y) y_j / |y|^{p_k} dm_k(y) for each eps
/// (strictly decreasing), by polar quadrature with antipodal pairing. `tau`
/// evaluates y -> tau_x f(y). Dimensions 1 and 2.
TruncatedResult riesz_truncated(const ReflectionSetup& setup, int j, const TranslatedFn& tau,
                                std::span<const double> x, const std::vector<double>& eps_sequence,
                                const TruncatedOptions& options = {});

/// eps_m = eps0 2^-m, m = 0 .. count-1.
std::vector<double> geometric_eps(double eps0, int count);

/// Kernel route: c_k^{-1} sum_y K_j(x, y) f(y) W(y) over grid nodes where
/// |f| > 1e-14 max |f|. Throws DomainError if the orbit of x comes within
/// 1e-3 of that set (the kernel formula needs x off the support of f).
cplx riesz_kernel_route(const KernelField& field, int j, const GridFunction& f, std::span<const double> x);

struct HormanderOptions {
  double radius = 0.0;      ///< truncation |x| <= R; 0: 16 (|c| + |y - y0|)
  int radial_points = 4;    ///< Gauss-Legendre nodes per geometric radial panel
  int angular_points = 6;   ///< nodes per angular panel (2-D)
  bool centre_at_y0 = true; ///< region around the orbit of y0 (false: around y)
};

struct HormanderResult {
  double value = 0.0;  ///< integral over the truncated region
  double tail = 0.0;   ///< estimate of the part beyond |x| = R
  double decay = 0.0;  ///< fitted decay exponent of the shell integrand
  std::uint64_t kernel_evaluations = 0;
  double total() const { return value + tail; }
};

/// int |K_j(x, y) - K_j(x, y0)| dm_k(x) over {x : min_g |g.x - c| > 2 |y - y0|},
/// c = y0 (or y), |x| <= R, plus a tail estimate. Dimensions 1 and 2.
HormanderResult hormander_estimate(const KernelField& field, int j, std::span<const double> y,
                                   std::span<const double> y0, const HormanderOptions& options = {});

struct PotentialOptions {
  double outer_radius = 40.0;
  double panel_width = 0.5;   ///< radial panel width near the origin
  double panel_growth = 0.25; ///< panels widen to panel_growth * r further out
  int radial_points = 16;
  int angular_points = 32;  ///< per quadrant (2-D)
};

/// I^beta f(x) = (c_k d_k^beta)^{-1} int tau_x f(y) |y|^{beta - 2 gamma_k - N} dm_k(y)
/// with d_k^beta = 2^{beta - gamma_k - N/2} Gamma(beta/2) / Gamma(gamma_k + (N - beta)/2).
/// Requires 0 < beta < 2 gamma_k + N. Dimensions 1 and 2.
cplx riesz_potential(const ReflectionSetup& setup, double beta, const TranslatedFn& tau,
                     const PotentialOptions& options = {});

/// The polar rule behind riesz_potential, normalisation included:
/// I^beta f(x) ~ sum_i weights[i] tau_x f(points[i]). Lets callers evaluate
/// tau_x f at all nodes in one batch. outer_radius / 2 is always a panel
/// boundary, so the nodes with radii below it form the rule truncated there.
struct PotentialRule {
  std::vector<Point> points;
  std::vector<double> radii;
  std::vector<double> weights;
};
PotentialRule potential_rule(const ReflectionSetup& setup, double beta, const PotentialOptions& options = {});

/// d_k^beta.
double potential_constant(const ReflectionSetup& setup, double beta);

/// Quadrature over the unit sphere for the density prod 2^{g_j} |theta_j|^{2 g_j}:
/// for N = 1 the two points +-1; for N = 2 Gauss-Jacobi in the angle on each
/// quadrant. Directions are returned in antipodal pairs: entry i and i + n/2.
struct SphereRule {
  std::vector<Point> directions;
  std::vector<double> weights;
};
SphereRule sphere_rule(const ReflectionSetup& setup, int per_quadrant);

}  // namespace dunkl
