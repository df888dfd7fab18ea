#include "dunkl/transform.hpp"

#include "dunkl/quadrature.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

namespace dunkl {

namespace {

using RowMat = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

std::shared_ptr<AxisGrid> build_axis(double gamma, int half_points, double radius) {
  auto axis = std::make_shared<AxisGrid>();
  axis->gamma = gamma;
  axis->radius = radius;
  const Rule half = gauss_power_weight(half_points, 2.0 * gamma, radius);
  const std::size_t h = half.size();
  const double scale = std::pow(2.0, gamma);
  axis->nodes.resize(2 * h);
  axis->weights.resize(2 * h);
  for (std::size_t i = 0; i < h; ++i) {
    axis->nodes[h + i] = half.nodes[i];
    axis->nodes[h - 1 - i] = -half.nodes[i];
    axis->weights[h + i] = axis->weights[h - 1 - i] = scale * half.weights[i];
  }

  // E(-i theta) = e(theta) - i o(theta) with e even and o odd, so one quarter
  // of the matrix determines the rest.
  const std::size_t n = 2 * h;
  const double inv_c = 1.0 / gaussian_mass_1d(gamma);
  axis->forward.assign(n * n, 0.0);
  for (std::size_t a = 0; a < h; ++a) {
    for (std::size_t b = 0; b < h; ++b) {
      const cplx e = rank1_kernel(gamma, cplx(0.0, half.nodes[a] * half.nodes[b]));
      for (int sa : {1, -1}) {
        for (int sb : {1, -1}) {
          const std::size_t ia = sa > 0 ? h + a : h - 1 - a;
          const std::size_t ib = sb > 0 ? h + b : h - 1 - b;
          const cplx v(e.real(), -sa * sb * e.imag());
          axis->forward[ia * n + ib] = v * axis->weights[ib] * inv_c;
        }
      }
    }
  }
  axis->diff = differentiation_matrix(half.nodes);
  return axis;
}

}  // namespace

std::shared_ptr<const AxisGrid> make_axis(double gamma, int half_points, double radius) {
  if (half_points < 2) throw DomainError("make_axis: need at least 2 points per half-axis");
  if (!(radius > 0.0)) throw DomainError("make_axis: radius must be positive");
  static std::mutex mutex;
  static std::map<std::tuple<double, int, double>, std::shared_ptr<const AxisGrid>> cache;
  const auto key = std::make_tuple(gamma, half_points, radius);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto axis = build_axis(gamma, half_points, radius);
  std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(axis)).first->second;
}

GridSpec GridSpec::defaults(int dimension) {
  GridSpec s;
  s.radius = 12.0;
  s.half_points = dimension == 1 ? 128 : dimension == 2 ? 96 : 24;
  return s;
}

Grid::Grid(const ReflectionSetup& setup, const GridSpec& spec) : setup_(setup), spec_(spec) {
  const int n = setup.dimension();
  for (int j = 0; j < n; ++j) axes_.push_back(make_axis(setup.multiplicity(j), spec.half_points, spec.radius));
  strides_.assign(n, 1);
  for (int j = n - 1; j >= 0; --j) {
    strides_[j] = size_;
    size_ *= axes_[j]->size();
  }
}

std::vector<std::size_t> Grid::index(std::size_t flat) const {
  std::vector<std::size_t> idx(dimension());
  for (int j = 0; j < dimension(); ++j) idx[j] = (flat / strides_[j]) % axes_[j]->size();
  return idx;
}

Point Grid::node(std::size_t flat) const {
  Point x(dimension());
  for (int j = 0; j < dimension(); ++j) x[j] = axes_[j]->nodes[(flat / strides_[j]) % axes_[j]->size()];
  return x;
}

double Grid::weight(std::size_t flat) const {
  double w = 1.0;
  for (int j = 0; j < dimension(); ++j) w *= axes_[j]->weights[(flat / strides_[j]) % axes_[j]->size()];
  return w;
}

std::size_t Grid::reflect_index(std::size_t flat, int j) const {
  const std::size_t i = (flat / strides_[j]) % axes_[j]->size();
  return flat + (axes_[j]->mirror(i) - i) * strides_[j];
}

std::size_t Grid::negate_index(std::size_t flat) const {
  for (int j = 0; j < dimension(); ++j) flat = reflect_index(flat, j);
  return flat;
}

GridPtr make_grid(const ReflectionSetup& setup, const GridSpec& spec) {
  return std::make_shared<const Grid>(setup, spec);
}

GridFunction::GridFunction(GridPtr grid, std::vector<cplx> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (values_.size() != grid_->size()) throw DomainError("GridFunction: value count does not match grid");
}

GridFunction::GridFunction(GridPtr grid) : grid_(std::move(grid)), values_(grid_->size(), 0.0) {}

GridFunction GridFunction::sample(GridPtr grid, const std::function<cplx(const Point&)>& fn) {
  GridFunction f(std::move(grid));
  for (std::size_t i = 0; i < f.size(); ++i) f.values_[i] = fn(f.grid_->node(i));
  return f;
}

void GridFunction::check_same(const GridFunction& o) const {
  if (grid_ != o.grid_) throw DomainError("GridFunction: operands live on different grids");
}

GridFunction GridFunction::operator+(const GridFunction& o) const {
  check_same(o);
  GridFunction r = *this;
  for (std::size_t i = 0; i < size(); ++i) r.values_[i] += o.values_[i];
  return r;
}

GridFunction GridFunction::operator-(const GridFunction& o) const {
  check_same(o);
  GridFunction r = *this;
  for (std::size_t i = 0; i < size(); ++i) r.values_[i] -= o.values_[i];
  return r;
}

GridFunction GridFunction::operator*(cplx s) const {
  GridFunction r = *this;
  for (auto& v : r.values_) v *= s;
  return r;
}

GridFunction GridFunction::multiplied(const std::function<cplx(const Point&)>& fn) const {
  GridFunction r = *this;
  for (std::size_t i = 0; i < size(); ++i) r.values_[i] *= fn(grid_->node(i));
  return r;
}

GridFunction GridFunction::negated() const {
  GridFunction r(grid_);
  for (std::size_t i = 0; i < size(); ++i) r.values_[grid_->negate_index(i)] = values_[i];
  return r;
}

double GridFunction::lp_norm(double p) const {
  if (!(p >= 1.0) || !std::isfinite(p)) throw DomainError("lp_norm: p must be finite and >= 1");
  double s = 0.0;
  for (std::size_t i = 0; i < size(); ++i) {
    const double a = std::abs(values_[i]);
    if (a < 1e-300) continue;
    s += std::pow(a, p) * grid_->weight(i);
  }
  return std::pow(s, 1.0 / p);
}

double GridFunction::sup_norm() const {
  double m = 0.0;
  for (const auto& v : values_) m = std::max(m, std::abs(v));
  return m;
}

cplx GridFunction::integral() const {
  cplx s = 0.0;
  for (std::size_t i = 0; i < size(); ++i) s += values_[i] * grid_->weight(i);
  return s;
}

TailMassError::TailMassError(double tail, double tolerance)
    : DomainError([&] {
        std::ostringstream os;
        os << "dunkl_transform: input not contained in the truncation box (tail mass " << tail
           << " exceeds " << tolerance << ")";
        return os.str();
      }()),
      tail_(tail) {}

double tail_mass(const GridFunction& f) {
  const Grid& g = f.grid();
  double total = 0.0, tail = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double m = std::abs(f[i]) * g.weight(i);
    total += m;
    const Point x = g.node(i);
    for (int j = 0; j < g.dimension(); ++j) {
      if (std::abs(x[j]) > 0.75 * g.axis(j).radius) {
        tail += m;
        break;
      }
    }
  }
  return total > 0.0 ? tail / total : 0.0;
}

GridFunction dunkl_transform(const GridFunction& f, bool check_tail) {
  if (check_tail) {
    const double t = tail_mass(f);
    if (t > 1e-10) throw TailMassError(t, 1e-10);
  }
  const Grid& g = f.grid();
  std::vector<cplx> cur = f.values();
  std::vector<cplx> next(cur.size());
  for (int j = 0; j < g.dimension(); ++j) {
    const AxisGrid& ax = g.axis(j);
    const auto n = static_cast<Eigen::Index>(ax.size());
    const auto inner = static_cast<Eigen::Index>(g.stride(j));
    const std::size_t outer = g.size() / (ax.size() * g.stride(j));
    Eigen::Map<const RowMat> m(ax.forward.data(), n, n);
    for (std::size_t o = 0; o < outer; ++o) {
      const std::size_t base = o * ax.size() * g.stride(j);
      Eigen::Map<const RowMat> x(cur.data() + base, n, inner);
      Eigen::Map<RowMat> y(next.data() + base, n, inner);
      y.noalias() = m * x;
    }
    cur.swap(next);
  }
  return GridFunction(f.grid_ptr(), std::move(cur));
}

GridFunction inverse_dunkl_transform(const GridFunction& spectrum) {
  return dunkl_transform(spectrum, false).negated();
}

double relative_l2(const GridFunction& a, const GridFunction& b) {
  const double nb = b.l2_norm();
  if (nb == 0.0) throw DomainError("relative_l2: reference has zero norm");
  return (a - b).l2_norm() / nb;
}

double plancherel_defect(const GridFunction& f) {
  const double n = f.l2_norm();
  if (n == 0.0) throw DomainError("plancherel_defect: zero-norm input");
  return std::abs(dunkl_transform(f).l2_norm() - n) / n;
}

GridFunction grid_dunkl_op(const GridFunction& f, int j) {
  const Grid& g = f.grid();
  if (j < 0 || j >= g.dimension()) throw DomainError("grid_dunkl_op: coordinate out of range");
  const AxisGrid& ax = g.axis(j);
  const std::size_t h = ax.half(), n = ax.size(), s = g.stride(j);
  const double gamma = ax.gamma;
  GridFunction out(f.grid_ptr());
  std::vector<cplx> deriv(n);
  for (std::size_t flat = 0; flat < g.size(); ++flat) {
    if ((flat / s) % n != 0) continue;  // visit each fiber along axis j once
    auto at = [&](std::size_t i) { return f[flat + i * s]; };
    for (std::size_t i = 0; i < h; ++i) {
      cplx dp = 0.0, dm = 0.0;
      for (std::size_t k = 0; k < h; ++k) {
        const double d = ax.diff[i * h + k];
        dp += d * at(h + k);
        dm += d * at(h - 1 - k);
      }
      deriv[h + i] = dp;
      deriv[h - 1 - i] = -dm;
    }
    for (std::size_t i = 0; i < n; ++i) {
      cplx v = deriv[i];
      if (gamma != 0.0) {
        const double x = ax.nodes[i];
        const std::size_t m = ax.mirror(i);
        if (std::abs(x) < 1e-8) {
          v += gamma * (deriv[i] + deriv[m]);
        } else {
          v += gamma * (at(i) - at(m)) / x;
        }
      }
      out[flat + i * s] = v;
    }
  }
  return out;
}

double multiplier_identity_defect(const GridFunction& f, int j) {
  Point v(f.grid().dimension(), 0.0);
  v.at(j) = 1.0;
  return multiplier_identity_defect(f, v);
}

double multiplier_identity_defect(const GridFunction& f, std::span<const double> v) {
  const int n = f.grid().dimension();
  GridFunction tf(f.grid_ptr());
  for (int j = 0; j < n; ++j)
    if (v[j] != 0.0) tf = tf + grid_dunkl_op(f, j) * v[j];
  const GridFunction lhs = dunkl_transform(tf, false);
  const GridFunction rhs = dunkl_transform(f).multiplied([&](const Point& xi) {
    return cplx(0.0, dot(v, xi));
  });
  return relative_l2(lhs, rhs);
}

GridFunction apply_multiplier(const GridFunction& f, const std::function<cplx(const Point&)>& m) {
  return inverse_dunkl_transform(dunkl_transform(f).multiplied(m));
}

SpectralEvaluator::SpectralEvaluator(GridFunction spectrum) : spectrum_(std::move(spectrum)) {
  for (int j = 0; j < spectrum_.grid().dimension(); ++j)
    inv_c_.push_back(1.0 / gaussian_mass_1d(spectrum_.grid().axis(j).gamma));
}

cplx SpectralEvaluator::operator()(std::span<const double> z) const {
  const Grid& g = spectrum_.grid();
  const int dim = g.dimension();
  std::vector<cplx> cur = spectrum_.values();
  std::vector<cplx> e;
  for (int j = dim - 1; j >= 0; --j) {
    const AxisGrid& ax = g.axis(j);
    const std::size_t n = ax.size(), h = ax.half();
    e.resize(n);
    for (std::size_t a = 0; a < h; ++a) {
      const cplx k = rank1_kernel(ax.gamma, cplx(0.0, z[j] * ax.nodes[h + a]));
      const double w = ax.weights[h + a] * inv_c_[j];
      e[h + a] = k * w;
      e[h - 1 - a] = std::conj(k) * w;
    }
    const std::size_t rest = cur.size() / n;
    std::vector<cplx> next(rest, 0.0);
    for (std::size_t o = 0; o < rest; ++o) {
      cplx acc = 0.0;
      const cplx* row = cur.data() + o * n;
      for (std::size_t a = 0; a < n; ++a) acc += row[a] * e[a];
      next[o] = acc;
    }
    cur.swap(next);
  }
  return cur[0];
}

PointBasis::PointBasis(GridPtr grid, std::vector<Point> points)
    : grid_(std::move(grid)), points_(std::move(points)) {
  const Grid& g = *grid_;
  for (int j = 0; j < g.dimension(); ++j) {
    const AxisGrid& ax = g.axis(j);
    const std::size_t n = ax.size(), h = ax.half();
    const double inv_c = 1.0 / gaussian_mass_1d(ax.gamma);
    std::vector<cplx> m(points_.size() * n);
    for (std::size_t p = 0; p < points_.size(); ++p) {
      cplx* row = m.data() + p * n;
      for (std::size_t a = 0; a < h; ++a) {
        const cplx k = rank1_kernel(ax.gamma, cplx(0.0, points_[p][j] * ax.nodes[h + a]));
        const double w = ax.weights[h + a] * inv_c;
        row[h + a] = k * w;
        row[h - 1 - a] = std::conj(k) * w;
      }
    }
    factors_.push_back(std::move(m));
  }
}

std::vector<cplx> evaluate_spectrum(const GridFunction& spectrum, const PointBasis& basis) {
  using Mat = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  const Grid& g = spectrum.grid();
  if (&g != &basis.grid()) throw DomainError("evaluate_spectrum: basis built on a different grid");
  const std::size_t np = basis.size();
  std::vector<cplx> out(np);
  if (g.dimension() == 1) {
    const std::size_t n = g.extent(0);
    Eigen::Map<const Mat> e(basis.factor(0).data(), np, n);
    Eigen::Map<const Eigen::VectorXcd> f(spectrum.values().data(), n);
    Eigen::Map<Eigen::VectorXcd>(out.data(), np) = e * f;
    return out;
  }
  if (g.dimension() == 2) {
    const std::size_t n1 = g.extent(0), n2 = g.extent(1);
    Eigen::Map<const Mat> f(spectrum.values().data(), n1, n2);
    Eigen::Map<const Mat> e1(basis.factor(0).data(), np, n1);
    Eigen::Map<const Mat> e2(basis.factor(1).data(), np, n2);
    const Mat m = e2 * f.transpose();  // np x n1
    for (std::size_t p = 0; p < np; ++p) out[p] = (e1.row(p).array() * m.row(p).array()).sum();
    return out;
  }
  // General dimension: contract the last axis first, point by point.
  for (std::size_t p = 0; p < np; ++p) {
    std::vector<cplx> cur = spectrum.values();
    for (int j = g.dimension() - 1; j >= 0; --j) {
      const std::size_t n = g.extent(j);
      const cplx* e = basis.factor(j).data() + p * n;
      std::vector<cplx> next(cur.size() / n, 0.0);
      for (std::size_t o = 0; o < next.size(); ++o)
        for (std::size_t a = 0; a < n; ++a) next[o] += cur[o * n + a] * e[a];
      cur.swap(next);
    }
    out[p] = cur[0];
  }
  return out;
}

GridFunction modulate(const GridFunction& spectrum, std::span<const double> x) {
  // E_k(i x, xi) factorises over coordinates; tabulate each axis once.
  const Grid& g = spectrum.grid();
  const int dim = g.dimension();
  std::vector<std::vector<cplx>> axes(dim);
  for (int j = 0; j < dim; ++j) {
    const AxisGrid& ax = g.axis(j);
    const std::size_t n = ax.size(), h = ax.half();
    axes[j].resize(n);
    for (std::size_t a = 0; a < h; ++a) {
      const cplx k = rank1_kernel(ax.gamma, cplx(0.0, x[j] * ax.nodes[h + a]));
      axes[j][h + a] = k;
      axes[j][h - 1 - a] = std::conj(k);
    }
  }
  GridFunction out = spectrum;
  for (std::size_t i = 0; i < g.size(); ++i) {
    std::size_t rem = i;
    cplx e = 1.0;
    for (int j = dim - 1; j >= 0; --j) {
      const std::size_t n = g.extent(j);
      e *= axes[j][rem % n];
      rem /= n;
    }
    out[i] *= e;
  }
  return out;
}

}  // namespace dunkl
