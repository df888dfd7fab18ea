#pragma once

#include "dunkl/kernel.hpp"
#include "dunkl/transform.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace dunkl {

/// Radial function f(y) = profile(|y|) with a recorded decay bound
/// |profile(t)| <= C (1 + t)^{-m}.
struct RadialProfile {
  std::string name;
  std::function<double(double)> profile;
  double decay_c = 1.0;
  double decay_m = 0.0;

  double operator()(double t) const { return profile(t); }
  cplx on(const Point& y) const { return profile(norm(y)); }
};

/// exp(-t^2 / (2 w^2)).
RadialProfile gaussian_profile(double width = 1.0);
/// (1 + t^2) exp(-t^2 / 2).
RadialProfile polynomial_gaussian_profile();
/// exp(-t^2/2) / (1 + t^2 / 4)^2.
RadialProfile rational_gaussian_profile();
/// The profiles above, used as the radial corpus.
std::vector<RadialProfile> radial_corpus();

/// y -> tau_x f(y) for one fixed x.
using TranslatedFn = std::function<cplx(const Point&)>;

/// tau_x of exp(-|y|^2 / (2 w^2)) in closed form:
/// exp(-(|x|^2 + |y|^2) / (2 w^2)) E_k(-x / w^2, y).
TranslatedFn translated_gaussian(const ReflectionSetup& setup, double width, std::span<const double> x);
/// tau_x f by the radial formula with a fixed intertwining rule.
TranslatedFn translated_radial(const ReflectionSetup& setup, const RadialProfile& f, std::span<const double> x,
                               int npts = 64);
/// tau_x f off the grid, from the spectrum of f.
TranslatedFn translated_spectral(const GridFunction& f, std::span<const double> x);

/// tau_x f on the grid of f: inverse transform of E_k(i x, .) F_k f.
GridFunction translate_spectral(const GridFunction& f, std::span<const double> x);

/// tau_x f(y) for radial f from the intertwining measure, with a fixed
/// number of Jacobi nodes per coordinate.
double translate_radial(const ReflectionSetup& setup, std::span<const double> x, const RadialProfile& f,
                        std::span<const double> y, int npts);

/// As above, starting at 64 nodes per coordinate and doubling until two
/// successive values differ by less than 1e-9 (at most 1024 nodes).
double translate_radial(const ReflectionSetup& setup, std::span<const double> x, const RadialProfile& f,
                        std::span<const double> y);

/// Samples tau_x f on the grid by the radial route.
GridFunction translate_radial_grid(GridPtr grid, std::span<const double> x, const RadialProfile& f, int npts = 64);

/// max over pairs of |tau_x f(y) - tau_y f(x)|.
double check_symmetry(const ReflectionSetup& setup, const RadialProfile& f,
                      const std::vector<std::pair<Point, Point>>& pairs);

/// max_j relative L2 defect of T_j tau_x f against tau_x T_j f.
double check_op_commutation(const GridFunction& f, std::span<const double> x);

/// |integral tau_x f(-y) g(y) dm_k - integral f(y) tau_x g(-y) dm_k|.
double check_duality(const GridFunction& f, const GridFunction& g, std::span<const double> x);

/// ||tau_x f||_{p,k} / ||f||_{p,k} on the grid, tau_x f from the radial route.
/// Only 1 <= p <= 2 is accepted.
double contraction_ratio(GridPtr grid, std::span<const double> x, const RadialProfile& f, double p,
                         int npts = 64);
/// Same ratio for several exponents from one set of samples.
std::vector<double> contraction_ratios(GridPtr grid, std::span<const double> x, const RadialProfile& f,
                                       const std::vector<double>& ps, int npts = 64);

}  // namespace dunkl
