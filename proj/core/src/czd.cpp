#include "dunkl/czd.hpp"

#include "dunkl/corpus.hpp"
#include "dunkl/quadrature.hpp"
#include "dunkl/riesz.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace dunkl {

double interval_mass(double gamma, double a, double b) {
  const double e = 2.0 * gamma + 1.0;
  auto prim = [&](double t) { return std::copysign(std::pow(std::abs(t), e), t); };
  return std::pow(2.0, gamma) / e * (prim(b) - prim(a));
}

double box_mass(const ReflectionSetup& setup, std::span<const double> lo, std::span<const double> hi) {
  double m = 1.0;
  for (int j = 0; j < setup.dimension(); ++j) m *= interval_mass(setup.multiplicity(j), lo[j], hi[j]);
  return m;
}

namespace {

constexpr int kGradingLevels = 12;

// Breakpoints of [a, b] halving towards each end `kGradingLevels` times.
std::vector<double> graded_cuts(double a, double b) {
  std::vector<double> cuts{a, b};
  for (int m = 1; m <= kGradingLevels; ++m) {
    const double d = std::ldexp(b - a, -m);
    cuts.push_back(a + d);
    cuts.push_back(b - d);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  return cuts;
}

// m_k-mass of the slice {t : |t - x| <= rho} in coordinates d .. N-1.
double slice_mass(const ReflectionSetup& setup, std::span<const double> x, int d, double rho, int points) {
  const double g = setup.multiplicity(d);
  const double c = x[d];
  if (d + 1 == setup.dimension()) return interval_mass(g, c - rho, c + rho);
  if (rho <= 0.0) return 0.0;

  const double half_pi = 0.5 * std::numbers::pi;
  // theta0: where the slice crosses t_d = 0.
  const bool crosses = g > 0.0 && std::abs(c) < rho;
  const double theta0 = crosses ? std::asin(-c / rho) : 0.0;
  std::vector<std::pair<double, double>> arcs;
  if (crosses) {
    arcs = {{-half_pi, theta0}, {theta0, half_pi}};
  } else {
    arcs = {{-half_pi, half_pi}};
  }

  const double w0 = std::pow(2.0, g);
  auto body = [&](double theta) {
    const double ct = std::cos(theta);
    return rho * ct * slice_mass(setup, x, d + 1, rho * ct, points);
  };
  double total = 0.0;
  for (const auto& [a, b] : arcs) {
    const auto cuts = graded_cuts(a, b);
    for (std::size_t p = 0; p + 1 < cuts.size(); ++p) {
      const double lo = cuts[p], hi = cuts[p + 1];
      const bool left_sing = crosses && lo == theta0;
      const bool right_sing = crosses && hi == theta0;
      const double ea = right_sing ? 2.0 * g : 0.0;
      const double eb = left_sing ? 2.0 * g : 0.0;
      const Rule& ref = gauss_jacobi(points, ea, eb);
      const double half = 0.5 * (hi - lo);
      const double scale = std::pow(half, ea + eb + 1.0);
      for (std::size_t i = 0; i < ref.size(); ++i) {
        const double theta = lo + half * (1.0 + ref.nodes[i]);
        const double t = c + rho * std::sin(theta);
        double density;
        if (left_sing || right_sing) {
          // |t|^{2g} / |theta - theta0|^{2g}, smooth across the crossing.
          const double dist = std::abs(theta - theta0);
          density = dist > 0.0 ? std::pow(std::abs(t) / dist, 2.0 * g) : std::pow(rho * std::cos(theta0), 2.0 * g);
        } else {
          density = std::pow(std::abs(t), 2.0 * g);
        }
        total += ref.weights[i] * scale * w0 * density * body(theta);
      }
    }
  }
  return total;
}

}  // namespace

double ball_mass(const ReflectionSetup& setup, std::span<const double> x, double r, int points) {
  if (!(r > 0.0)) throw DomainError("ball_mass: radius must be positive");
  if (static_cast<int>(x.size()) != setup.dimension()) throw DomainError("ball_mass: dimension mismatch");
  if (points < 2) throw DomainError("ball_mass: points must be >= 2");
  return slice_mass(setup, x, 0, r, points);
}

double doubling_ratio(const ReflectionSetup& setup, std::span<const double> x, double r, int points) {
  if (!(r > 0.0)) throw DomainError("doubling_ratio: radius must be positive");
  return ball_mass(setup, x, 2.0 * r, points) / ball_mass(setup, x, r, points);
}

DoublingScan doubling_scan(const ReflectionSetup& setup, std::size_t count, std::uint64_t seed, int points) {
  std::mt19937_64 rng(seed);
  const int n = setup.dimension();
  DoublingScan scan;
  Point x(n);
  for (std::size_t s = 0; s < count; ++s) {
    for (int j = 0; j < n; ++j) x[j] = -3.0 + 6.0 * unit_uniform(rng());
    const double r = std::pow(10.0, -2.0 + 3.0 * unit_uniform(rng()));
    if (s % 4 == 3) x[rng() % n] = 0.0;
    const double q = doubling_ratio(setup, x, r, points);
    if (q > scan.sup) {
      scan.sup = q;
      scan.argmax_x = x;
      scan.argmax_r = r;
    }
  }
  scan.samples = count;
  return scan;
}

CellGrid::CellGrid(const ReflectionSetup& setup, double half_width, int levels)
    : setup_(setup), half_width_(half_width), levels_(levels) {
  if (!(half_width > 0.0)) throw DomainError("CellGrid: half width must be positive");
  const int n = setup.dimension();
  if (levels < 0 || levels * n > 24) throw DomainError("CellGrid: levels out of range");
  per_axis_ = std::size_t{1} << levels;
  const double h = cell_side();
  std::vector<std::vector<double>> axis(n, std::vector<double>(per_axis_));
  for (int j = 0; j < n; ++j)
    for (std::size_t i = 0; i < per_axis_; ++i) {
      const double lo = -half_width + h * static_cast<double>(i);
      axis[j][i] = interval_mass(setup.multiplicity(j), lo, lo + h);
    }
  std::size_t total = 1;
  for (int j = 0; j < n; ++j) total *= per_axis_;
  masses_.resize(total);
  for (std::size_t f = 0; f < total; ++f) {
    const auto idx = index(f);
    double m = 1.0;
    for (int j = 0; j < n; ++j) m *= axis[j][idx[j]];
    masses_[f] = m;
  }
}

std::vector<std::size_t> CellGrid::index(std::size_t flat) const {
  std::vector<std::size_t> idx(dimension());
  for (int j = dimension() - 1; j >= 0; --j) {
    idx[j] = flat % per_axis_;
    flat /= per_axis_;
  }
  return idx;
}

std::size_t CellGrid::flat(std::span<const std::size_t> idx) const {
  std::size_t f = 0;
  for (std::size_t i : idx) f = f * per_axis_ + i;
  return f;
}

Point CellGrid::centre(std::size_t flat) const {
  const auto idx = index(flat);
  const double h = cell_side();
  Point p(dimension());
  for (int j = 0; j < dimension(); ++j) p[j] = -half_width_ + h * (static_cast<double>(idx[j]) + 0.5);
  return p;
}

CellGridPtr make_cell_grid(const ReflectionSetup& setup, double half_width, int levels) {
  return std::make_shared<const CellGrid>(setup, half_width, levels);
}

double CellFunction::l1_norm() const {
  double s = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) s += std::abs(values[i]) * grid->mass(i);
  return s;
}

double CellFunction::sup_norm() const {
  double s = 0.0;
  for (const cplx& v : values) s = std::max(s, std::abs(v));
  return s;
}

CellFunction sample_cells(CellGridPtr grid, const std::function<cplx(const Point&)>& fn) {
  CellFunction f{grid, std::vector<cplx>(grid->size())};
  for (std::size_t i = 0; i < grid->size(); ++i) f.values[i] = fn(grid->centre(i));
  return f;
}

CellFunction resample(const GridFunction& f, CellGridPtr grid) {
  std::vector<Point> centres(grid->size());
  for (std::size_t i = 0; i < grid->size(); ++i) centres[i] = grid->centre(i);
  const PointBasis basis(f.grid_ptr(), std::move(centres));
  return CellFunction{grid, evaluate_spectrum(dunkl_transform(f), basis)};
}

namespace {

struct Decomposer {
  const CellFunction& f;
  const CellGrid& grid;
  double lambda;
  CZDecomposition& out;

  // Cells of the cube at `level` with first index `lo` (per axis).
  std::vector<std::size_t> cells(const std::vector<std::size_t>& lo, std::size_t side) const {
    const int n = grid.dimension();
    std::vector<std::size_t> result;
    std::vector<std::size_t> off(n, 0), idx(n);
    while (true) {
      for (int j = 0; j < n; ++j) idx[j] = lo[j] + off[j];
      result.push_back(grid.flat(idx));
      int j = n - 1;
      while (j >= 0 && ++off[j] == side) off[j--] = 0;
      if (j < 0) break;
    }
    return result;
  }

  void visit(int level, const std::vector<std::size_t>& lo) {
    const std::size_t side = std::size_t{1} << (grid.levels() - level);
    const auto members = cells(lo, side);
    double mass = 0.0, abs_int = 0.0;
    cplx integral = 0.0;
    for (std::size_t c : members) {
      mass += grid.mass(c);
      abs_int += std::abs(f.values[c]) * grid.mass(c);
      integral += f.values[c] * grid.mass(c);
    }
    if (mass > 0.0 && abs_int > lambda * mass) {
      select(level, lo, side, members, mass, integral / mass);
      return;
    }
    if (side == 1) return;  // a good cell: h = f there
    const int n = grid.dimension();
    const std::size_t child = side / 2;
    for (std::size_t corner = 0; corner < (std::size_t{1} << n); ++corner) {
      std::vector<std::size_t> clo(lo);
      for (int j = 0; j < n; ++j)
        if (corner >> (n - 1 - j) & 1) clo[j] += child;
      visit(level + 1, clo);
    }
  }

  void select(int level, const std::vector<std::size_t>& lo, std::size_t side,
              const std::vector<std::size_t>& members, double mass, cplx mean) {
    const int n = grid.dimension();
    const double h = grid.cell_side();
    BadPart b;
    b.lo = lo;
    b.side = side;
    b.level = level;
    b.centre.resize(n);
    for (int j = 0; j < n; ++j)
      b.centre[j] = -grid.half_width() + h * (static_cast<double>(lo[j]) + 0.5 * static_cast<double>(side));
    b.radius = 0.5 * h * static_cast<double>(side) * std::sqrt(static_cast<double>(n));
    b.cube_mass = mass;
    b.ball_mass = ball_mass(grid.setup(), b.centre, b.radius);
    b.mean = mean;
    b.cells = members;
    b.values.reserve(members.size());
    for (std::size_t c : members) {
      b.values.push_back(f.values[c] - mean);
      out.good.values[c] = mean;
    }
    out.bad.push_back(std::move(b));
  }
};

}  // namespace

CZDecomposition cz_decompose(const CellFunction& f, double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw DomainError("cz_decompose: lambda must be positive");
  const CellGrid& grid = *f.grid;
  double total_mass = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) total_mass += grid.mass(i);
  if (f.l1_norm() > lambda * total_mass)
    throw DomainError("cz_decompose: lambda is below the average of |f| over the box");
  CZDecomposition out{lambda, f, {}};
  Decomposer d{f, grid, lambda, out};
  d.visit(0, std::vector<std::size_t>(grid.dimension(), 0));
  return out;
}

CZDecomposition cz_decompose(const GridFunction& f, double lambda, int levels) {
  const auto cells = make_cell_grid(f.grid().setup(), f.grid().spec().radius, levels);
  return cz_decompose(resample(f, cells), lambda);
}

bool CZProperties::pass(double budget) const {
  return reconstruction <= 1e-12 && supports_in_balls && mean_zero <= 1e-12 && good_bound <= budget &&
         local_bound <= budget && total_bound <= budget;
}

CZProperties verify_decomposition(const CZDecomposition& cz, const CellFunction& f) {
  const CellGrid& grid = *f.grid;
  const int n = grid.dimension();
  const double h = grid.cell_side();
  CZProperties p;
  p.balls = cz.bad.size();

  std::vector<cplx> sum = cz.good.values;
  double ball_total = 0.0;
  for (const BadPart& b : cz.bad) {
    double abs_int = 0.0, f_int = 0.0;
    cplx integral = 0.0;
    for (std::size_t i = 0; i < b.cells.size(); ++i) {
      const std::size_t c = b.cells[i];
      sum[c] += b.values[i];
      abs_int += std::abs(b.values[i]) * grid.mass(c);
      f_int += std::abs(f.values[c]) * grid.mass(c);
      integral += b.values[i] * grid.mass(c);
      // Farthest corner of the cell from the ball centre.
      const Point mid = grid.centre(c);
      double far2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double d = std::abs(mid[j] - b.centre[j]) + 0.5 * h;
        far2 += d * d;
      }
      if (std::sqrt(far2) > b.radius * (1.0 + 1e-12)) p.supports_in_balls = false;
    }
    if (f_int > 0.0) p.mean_zero = std::max(p.mean_zero, std::abs(integral) / f_int);
    p.local_bound = std::max(p.local_bound, abs_int / (cz.lambda * b.ball_mass));
    ball_total += b.ball_mass;
  }
  for (std::size_t i = 0; i < sum.size(); ++i) {
    p.reconstruction = std::max(p.reconstruction, std::abs(sum[i] - f.values[i]));
    p.good_bound = std::max(p.good_bound, std::abs(cz.good.values[i]) / cz.lambda);
  }
  const double l1 = f.l1_norm();
  p.total_bound = l1 > 0.0 ? ball_total * cz.lambda / l1 : 0.0;
  return p;
}

std::vector<WeakRow> weak11_probe(const GridFunction& f, int j, const std::vector<double>& lambdas) {
  const double l1 = f.lp_norm(1.0);
  std::vector<WeakRow> rows;
  if (f.sup_norm() == 0.0) {
    for (double l : lambdas) rows.push_back({l, 0.0, 0.0});
    return rows;
  }
  const GridFunction rf = riesz_multiplier(f, j);
  const Grid& grid = f.grid();
  for (double l : lambdas) {
    double m = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i)
      if (std::abs(rf[i]) > l) m += grid.weight(i);
    rows.push_back({l, m, l * m / l1});
  }
  return rows;
}

}  // namespace dunkl
