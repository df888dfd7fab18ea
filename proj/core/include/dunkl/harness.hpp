#pragma once

#include "dunkl/corpus.hpp"
#include "dunkl/riesz.hpp"
#include "dunkl/transform.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace dunkl {

struct LpRow {
  std::string function;
  double p = 0.0;
  double ratio = 0.0;  ///< ||R_j f||_p / ||f||_p
};

struct LpScanReport {
  std::string setup;
  int j = 0;
  std::vector<double> p_grid;
  std::vector<std::string> corpus;
  std::vector<LpRow> rows;         ///< function-major, one row per (f, p)
  std::vector<double> sup_per_p;   ///< corpus lower bound for ||R_j||_{p -> p}
};

/// L^p ratios of R_j through the multiplier route. Rejects p <= 1 and non-finite p.
LpScanReport lp_ratio_scan(GridPtr grid, int j, const std::vector<TestFunction>& corpus,
                           const std::vector<double>& p_grid);

struct RieszInequalityRow {
  std::string function;
  double ratio = 0.0;          ///< ||T_r T_s f||_p / ||Delta_k f||_p
  double factorization = 0.0; ///< relative L2 defect of F(T_r T_s f) vs F(R_r R_s (-Delta_k) f)
  bool skipped = false;        ///< Delta_k f negligible: ratio undefined
};

/// Skips f when ||Delta_k f||_p <= skip_below * ||f||_p (or f = 0).
std::vector<RieszInequalityRow> riesz_inequality_check(GridPtr grid, int r, int s,
                                                       const std::vector<TestFunction>& corpus, double p,
                                                       double skip_below = 1e-10);

/// q with 1/q = 1/p - 1/(2 gamma_k + N). Throws unless 2 gamma_k + N > 2 and 1 < p < 2 gamma_k + N.
double sobolev_exponent(const ReflectionSetup& setup, double p);

struct SobolevRow {
  std::string function;
  double p = 0.0;
  double q = 0.0;
  double ratio = 0.0;  ///< ||f||_q / || |grad_k f| ||_p
};

std::vector<SobolevRow> sobolev_inequality_check(GridPtr grid, const std::vector<TestFunction>& corpus, double p);

/// Sobolev ratios of f(t x) for each t; returns max / min - 1.
double sobolev_dilation_drift(GridPtr grid, const TestFunction& f, double p, const std::vector<double>& dilations,
                              std::vector<double>* ratios = nullptr);

struct IdentityReport {
  std::vector<Point> points;
  std::vector<cplx> reconstructed;  ///< I^1(sum_j R_j T_j f) at points
  std::vector<cplx> expected;       ///< f at points
  double defect = 0.0;              ///< max |reconstructed - expected| / sup |f|
};

/// Checks f = I^1(sum_j R_j T_j f). The potential is the polar rule of
/// potential_rule; the radial tail beyond the outer radius is extrapolated
/// from the sums truncated at R/2 and R (decay exponent 2 gamma_k + N).
/// Requires 2 gamma_k + N > 1.
IdentityReport potential_identity_check(GridPtr grid, const TestFunction& f, const std::vector<Point>& points,
                                        const PotentialOptions& options = {});

/// One three-route configuration: f = exp(-|y|^2 / (2 width^2)) on the grid,
/// evaluated at x for coordinate j.
struct RouteConfig {
  double width = 0.6;
  Point x;
  int j = 0;
};

/// Seeded configurations with x just outside the numerical support of f
/// (|f| > 1e-14 max |f|), so that the kernel route applies.
std::vector<RouteConfig> separated_route_configs(GridPtr grid, int count, std::uint64_t seed);

struct RouteRow {
  RouteConfig config;
  cplx multiplier, truncated, kernel;
  double max_defect = 0.0;  ///< largest pairwise relative difference
};

/// Evaluates the requested routes; skipped routes are left at 0 and ignored
/// in max_defect.
RouteRow riesz_routes(GridPtr grid, const KernelField& field, const RouteConfig& config, bool truncated = true,
                      bool kernel = true);

struct HormanderRow {
  Point y, y0;
  int j = 0;
  double base = 0.0;     ///< default options
  double refined = 0.0;  ///< truncation radius and quadrature resolution doubled
  double drift = 0.0;    ///< |refined - base| / refined
};

/// Seeded (y, y0) pairs: y0 in [-2, 2]^N away from the origin, |y - y0| a
/// fraction 0.05 .. 0.5 of |y0|.
std::vector<std::pair<Point, Point>> hormander_pairs(const ReflectionSetup& setup, int count, std::uint64_t seed);

HormanderRow hormander_drift(const KernelField& field, int j, const Point& y, const Point& y0);

}  // namespace dunkl
