#pragma once

#include "dunkl/rootsys.hpp"
#include "dunkl/transform.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

namespace dunkl {

/// m_k([a, b]) in one coordinate: 2^g / (2g+1) [t |t|^{2g}]_a^b.
double interval_mass(double gamma, double a, double b);

/// m_k of the box prod [lo_j, hi_j].
double box_mass(const ReflectionSetup& setup, std::span<const double> lo, std::span<const double> hi);

/// m_k(B(x, r)). Closed form for N = 1; otherwise the ball is sliced along
/// the first coordinate (t = x_1 + r sin theta) and the slices are measured
/// recursively. Angular panels are graded towards the poles and towards the
/// hyperplane crossing, which gets a Jacobi rule. `points` is the Gauss rule
/// size per panel.
double ball_mass(const ReflectionSetup& setup, std::span<const double> x, double r, int points = 16);

/// m_k(B(x, 2r)) / m_k(B(x, r)); r must be positive.
double doubling_ratio(const ReflectionSetup& setup, std::span<const double> x, double r, int points = 16);

struct DoublingScan {
  double sup = 0.0;
  Point argmax_x;
  double argmax_r = 0.0;
  std::size_t samples = 0;
};

/// sup of doubling_ratio over `count` seeded random (x, r): x uniform in
/// [-3, 3]^N with every fourth sample moved onto a coordinate hyperplane,
/// r log-uniform in [1e-2, 10].
DoublingScan doubling_scan(const ReflectionSetup& setup, std::size_t count, std::uint64_t seed, int points = 16);

/// Uniform dyadic cells on [-L, L]^N, 2^levels per axis, last coordinate fastest.
class CellGrid {
 public:
  CellGrid(const ReflectionSetup& setup, double half_width, int levels);

  const ReflectionSetup& setup() const { return setup_; }
  int dimension() const { return setup_.dimension(); }
  double half_width() const { return half_width_; }
  int levels() const { return levels_; }
  std::size_t per_axis() const { return per_axis_; }
  std::size_t size() const { return masses_.size(); }
  double cell_side() const { return 2.0 * half_width_ / static_cast<double>(per_axis_); }

  /// Closed-form m_k mass of each cell.
  double mass(std::size_t flat) const { return masses_[flat]; }
  Point centre(std::size_t flat) const;
  std::vector<std::size_t> index(std::size_t flat) const;
  std::size_t flat(std::span<const std::size_t> idx) const;

 private:
  ReflectionSetup setup_;
  double half_width_;
  int levels_;
  std::size_t per_axis_;
  std::vector<double> masses_;
};

using CellGridPtr = std::shared_ptr<const CellGrid>;

CellGridPtr make_cell_grid(const ReflectionSetup& setup, double half_width, int levels);

/// A function constant on each cell.
struct CellFunction {
  CellGridPtr grid;
  std::vector<cplx> values;

  double l1_norm() const;
  double sup_norm() const;
};

CellFunction sample_cells(CellGridPtr grid, const std::function<cplx(const Point&)>& fn);

/// Resamples a grid function at the cell centres through its spectral interpolant.
CellFunction resample(const GridFunction& f, CellGridPtr grid);

struct BadPart {
  std::vector<std::size_t> lo;  ///< first cell index per axis
  std::size_t side = 0;          ///< cells per axis
  int level = 0;                 ///< dyadic level of the cube
  Point centre;
  double radius = 0.0;      ///< half-diagonal of the cube
  double cube_mass = 0.0;
  double ball_mass = 0.0;
  cplx mean = 0.0;          ///< m_k-average of f over the cube
  std::vector<std::size_t> cells;
  std::vector<cplx> values;  ///< b_j on `cells`: f - mean
};

struct CZDecomposition {
  double lambda = 0.0;
  CellFunction good;
  std::vector<BadPart> bad;
};

/// Stopping-time decomposition on the dyadic cubes of the cell grid: a cube
/// is selected when the m_k-average of |f| over it first exceeds lambda.
/// On a selected cube Q_j, h = mean and b_j = f - mean; elsewhere h = f.
/// Throws if lambda <= 0 or lambda is below the average of |f| over the whole box.
CZDecomposition cz_decompose(const CellFunction& f, double lambda);

/// Resamples f on 2^levels cells per axis over [-R, R]^N (R the grid radius)
/// and decomposes the result.
CZDecomposition cz_decompose(const GridFunction& f, double lambda, int levels);

struct CZProperties {
  double reconstruction = 0.0;  ///< max |f - h - sum b_j| over cells
  double good_bound = 0.0;      ///< (i)   max |h| / lambda
  bool supports_in_balls = true;///< (ii)  every cell of Q_j lies in B_j
  double mean_zero = 0.0;       ///< (iii) max |int b_j| / int |b_j|
  double local_bound = 0.0;     ///< (iv)  max ||b_j||_1 / (lambda m_k(B_j))
  double total_bound = 0.0;     ///< (v)   sum m_k(B_j) lambda / ||f||_1
  std::size_t balls = 0;

  /// All five properties with constants at most `budget`.
  bool pass(double budget = 64.0) const;
};

CZProperties verify_decomposition(const CZDecomposition& cz, const CellFunction& f);

struct WeakRow {
  double lambda = 0.0;
  double level_set_mass = 0.0;  ///< m_k{|R_j f| > lambda}
  double ratio = 0.0;           ///< lambda m_k{...} / ||f||_1 (0 for f = 0)
};

/// Weak (1,1) probe of R_j through the multiplier route on the grid.
std::vector<WeakRow> weak11_probe(const GridFunction& f, int j, const std::vector<double>& lambdas);

}  // namespace dunkl
