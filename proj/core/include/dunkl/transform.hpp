#pragma once

#include "dunkl/kernel.hpp"
#include "dunkl/rootsys.hpp"

#include <complex>
#include <functional>
#include <memory>
#include <span>
#include <vector>

namespace dunkl {

/// One coordinate of a tensor grid: a Gauss rule for x^{2 gamma} on [0, R]
/// mirrored to [-R, 0]. Node i and node mirror(i) are reflections of each
/// other, and no node sits at 0, so sign-discontinuous multipliers are
/// sampled cleanly on both sides.
struct AxisGrid {
  double gamma = 0.0;
  double radius = 0.0;
  std::vector<double> nodes;    ///< ascending, nodes[mirror(i)] == -nodes[i]
  std::vector<double> weights;  ///< include the density 2^gamma |x|^{2 gamma}

  /// Rank-one transform matrix E_gamma(-i xi_a x_b) W_b / c_gamma, row-major.
  std::vector<cplx> forward;
  /// Spectral differentiation on each half, applied per node: row i holds the
  /// weights over the nodes of the half containing node i.
  std::vector<double> diff;

  std::size_t size() const { return nodes.size(); }
  std::size_t half() const { return nodes.size() / 2; }
  std::size_t mirror(std::size_t i) const { return nodes.size() - 1 - i; }
};

/// Builds (and caches) the axis for the given parameters.
std::shared_ptr<const AxisGrid> make_axis(double gamma, int half_points, double radius);

struct GridSpec {
  double radius = 12.0;
  int half_points = 128;

  /// 256 points per coordinate in one dimension, 192 in two, 48 beyond.
  static GridSpec defaults(int dimension);
};

/// Tensor grid, last coordinate fastest.
class Grid {
 public:
  Grid(const ReflectionSetup& setup, const GridSpec& spec);

  const ReflectionSetup& setup() const { return setup_; }
  const GridSpec& spec() const { return spec_; }
  int dimension() const { return setup_.dimension(); }
  const AxisGrid& axis(int j) const { return *axes_[j]; }
  std::size_t size() const { return size_; }
  std::size_t stride(int j) const { return strides_[j]; }
  std::size_t extent(int j) const { return axes_[j]->size(); }

  std::vector<std::size_t> index(std::size_t flat) const;
  Point node(std::size_t flat) const;
  double weight(std::size_t flat) const;
  /// Flat index of sigma_j applied to node `flat`.
  std::size_t reflect_index(std::size_t flat, int j) const;
  /// Flat index of -x.
  std::size_t negate_index(std::size_t flat) const;

 private:
  ReflectionSetup setup_;
  GridSpec spec_;
  std::vector<std::shared_ptr<const AxisGrid>> axes_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 1;
};

using GridPtr = std::shared_ptr<const Grid>;

GridPtr make_grid(const ReflectionSetup& setup, const GridSpec& spec);
inline GridPtr make_grid(const ReflectionSetup& setup) {
  return make_grid(setup, GridSpec::defaults(setup.dimension()));
}

/// Complex samples on a grid. The same grid serves as x-grid and xi-grid.
class GridFunction {
 public:
  GridFunction(GridPtr grid, std::vector<cplx> values);
  explicit GridFunction(GridPtr grid);

  static GridFunction sample(GridPtr grid, const std::function<cplx(const Point&)>& fn);

  const Grid& grid() const { return *grid_; }
  const GridPtr& grid_ptr() const { return grid_; }
  std::size_t size() const { return values_.size(); }
  std::vector<cplx>& values() { return values_; }
  const std::vector<cplx>& values() const { return values_; }
  cplx& operator[](std::size_t i) { return values_[i]; }
  cplx operator[](std::size_t i) const { return values_[i]; }

  GridFunction operator+(const GridFunction& o) const;
  GridFunction operator-(const GridFunction& o) const;
  GridFunction operator*(cplx s) const;
  /// Pointwise product with fn(node).
  GridFunction multiplied(const std::function<cplx(const Point&)>& fn) const;
  /// f(-x).
  GridFunction negated() const;

  /// (sum |f|^p W)^{1/p}; p-powers of magnitudes below 1e-300 are floored.
  double lp_norm(double p) const;
  double l2_norm() const { return lp_norm(2.0); }
  double sup_norm() const;
  /// sum f W.
  cplx integral() const;

 private:
  void check_same(const GridFunction& o) const;

  GridPtr grid_;
  std::vector<cplx> values_;
};

/// Raised when the input has mass near the edge of the truncation box.
class TailMassError : public DomainError {
 public:
  TailMassError(double tail, double tolerance);
  double tail() const { return tail_; }

 private:
  double tail_;
};

/// Fraction of sum |f| W carried by nodes with max_j |x_j| > 0.75 R.
double tail_mass(const GridFunction& f);

/// F_k f(xi) = c_k^{-1} sum f(x) E_k(-i xi, x) W(x), sampled on the grid
/// nodes. Throws TailMassError if tail_mass(f) > 1e-10 and `check_tail`.
GridFunction dunkl_transform(const GridFunction& f, bool check_tail = true);

/// Inverse transform: F_k applied once more, then reflected through 0.
GridFunction inverse_dunkl_transform(const GridFunction& spectrum);

/// | ||F_k f|| - ||f|| | / ||f||. Throws DomainError for f = 0.
double plancherel_defect(const GridFunction& f);

/// Relative L2 distance ||a - b|| / ||b||.
double relative_l2(const GridFunction& a, const GridFunction& b);

/// T_j on grid samples: spectral derivative on each half-axis plus the exact
/// reflection difference term, with the analytic limit for |x_j| < 1e-8.
GridFunction grid_dunkl_op(const GridFunction& f, int j);

/// Relative L2 defect of F_k(T_j f) - i xi_j F_k f.
double multiplier_identity_defect(const GridFunction& f, int j);

/// Directional form: F_k(T_v f) - i <v, xi> F_k f, with T_v = sum v_j T_j.
double multiplier_identity_defect(const GridFunction& f, std::span<const double> v);

/// Multiplies a spectrum by m(xi) and transforms back.
GridFunction apply_multiplier(const GridFunction& f, const std::function<cplx(const Point&)>& m);

/// Evaluates c_k^{-1} sum_xi F(xi) E_k(i z, xi) W(xi) at arbitrary points z,
/// i.e. the inverse transform of a sampled spectrum off the grid.
class SpectralEvaluator {
 public:
  explicit SpectralEvaluator(GridFunction spectrum);

  cplx operator()(std::span<const double> z) const;
  const GridFunction& spectrum() const { return spectrum_; }

 private:
  GridFunction spectrum_;
  std::vector<double> inv_c_;
};

/// Per-axis factors E_gamma(i z_j xi) W / c_gamma for a fixed point set,
/// shared by every spectrum on the same grid.
class PointBasis {
 public:
  PointBasis(GridPtr grid, std::vector<Point> points);

  const Grid& grid() const { return *grid_; }
  const std::vector<Point>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  /// Row-major points() x extent(j) matrix.
  const std::vector<cplx>& factor(int j) const { return factors_[j]; }

 private:
  GridPtr grid_;
  std::vector<Point> points_;
  std::vector<std::vector<cplx>> factors_;
};

/// Inverse transform of `spectrum` at every point of `basis`; dense matrix
/// products for N <= 2.
std::vector<cplx> evaluate_spectrum(const GridFunction& spectrum, const PointBasis& basis);

/// Spectrum of tau_x f given the spectrum of f: multiplication by E_k(i x, xi).
GridFunction modulate(const GridFunction& spectrum, std::span<const double> x);

}  // namespace dunkl
