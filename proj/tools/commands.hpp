#pragma once

#include "report.hpp"

#include <string>
#include <vector>

namespace dunkl::cli {

struct TransformParams {
  std::string corpus = "deterministic";  ///< or "standard"
  std::string function = "gaussian";     ///< corpus member sampled into transform_samples.csv
};
struct TranslateParams {
  int points = 2;                ///< random x for the route agreement
  int contraction_samples = 30;  ///< random (x, f) for the L^p contraction
  std::string profile = "gaussian";  ///< gaussian | polynomial_gaussian | rational_gaussian
  double width = 1.0;                ///< gaussian profile only
  std::vector<double> x;             ///< sample table centre; empty: (0.8, -0.4, ...)
};
struct RieszParams {
  std::string route = "all";  ///< multiplier | truncated | kernel | all
  int pairs = 20;
};
struct HormanderParams {
  int pairs = 100;
};
struct CzParams {
  int functions = 20;
  int levels = 0;          ///< 0: 10 cells-levels in 1-D, 6 in 2-D
  double lambda = 0.0;     ///< 0: spread between box average and sup norm
  int doubling_samples = 10000;
};
struct LpScanParams {
  int j = 0;
  std::vector<double> p{1.25, 1.5, 2.0, 3.0, 4.0};
  std::string corpus = "standard";
};
struct InequalityParams {
  std::vector<double> p{1.5, 2.0, 3.0};
  bool identity = true;
};
struct PolyParams {
  int trials = 200;
  int degree = 6;
};

Report run_transform(const RunConfig& config, const TransformParams& params);
Report run_translate(const RunConfig& config, const TranslateParams& params);
Report run_riesz(const RunConfig& config, const RieszParams& params);
Report run_hormander(const RunConfig& config, const HormanderParams& params);
Report run_cz(const RunConfig& config, const CzParams& params);
Report run_lp_scan(const RunConfig& config, const LpScanParams& params);
Report run_inequalities(const RunConfig& config, const InequalityParams& params);
Report run_poly_check(const RunConfig& config, const PolyParams& params);

}  // namespace dunkl::cli
