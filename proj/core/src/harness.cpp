#include "dunkl/harness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

namespace dunkl {

namespace {

void check_p(double p, const char* where) {
  if (!std::isfinite(p) || !(p > 1.0)) {
    std::ostringstream os;
    os << where << ": p must be finite and > 1 (got " << p << ")";
    throw DomainError(os.str());
  }
}

double gamma_sum(const ReflectionSetup& setup) { return compute_constants(setup).gamma_k; }

// Pointwise (sum_r |T_r f|^2)^{1/2}.
GridFunction gradient_modulus(const GridFunction& f) {
  const int n = f.grid().dimension();
  std::vector<double> acc(f.size(), 0.0);
  for (int r = 0; r < n; ++r) {
    const GridFunction t = grid_dunkl_op(f, r);
    for (std::size_t i = 0; i < f.size(); ++i) acc[i] += std::norm(t[i]);
  }
  GridFunction out(f.grid_ptr());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = std::sqrt(acc[i]);
  return out;
}

}  // namespace

LpScanReport lp_ratio_scan(GridPtr grid, int j, const std::vector<TestFunction>& corpus,
                           const std::vector<double>& p_grid) {
  for (double p : p_grid) check_p(p, "lp_ratio_scan");
  if (j < 0 || j >= grid->dimension()) throw DomainError("lp_ratio_scan: coordinate out of range");
  LpScanReport report;
  report.setup = grid->setup().describe();
  report.j = j;
  report.p_grid = p_grid;
  report.sup_per_p.assign(p_grid.size(), 0.0);
  for (const auto& tf : corpus) {
    report.corpus.push_back(tf.name);
    const GridFunction f = GridFunction::sample(grid, tf.fn);
    const GridFunction rf = riesz_multiplier(f, j);
    for (std::size_t k = 0; k < p_grid.size(); ++k) {
      const double ratio = rf.lp_norm(p_grid[k]) / f.lp_norm(p_grid[k]);
      report.rows.push_back({tf.name, p_grid[k], ratio});
      report.sup_per_p[k] = std::max(report.sup_per_p[k], ratio);
    }
  }
  return report;
}

std::vector<RieszInequalityRow> riesz_inequality_check(GridPtr grid, int r, int s,
                                                       const std::vector<TestFunction>& corpus, double p,
                                                       double skip_below) {
  check_p(p, "riesz_inequality_check");
  const int n = grid->dimension();
  if (r < 0 || r >= n || s < 0 || s >= n) throw DomainError("riesz_inequality_check: coordinate out of range");
  std::vector<RieszInequalityRow> rows;
  for (const auto& tf : corpus) {
    RieszInequalityRow row;
    row.function = tf.name;
    const GridFunction f = GridFunction::sample(grid, tf.fn);
    const double fnorm = f.lp_norm(p);
    GridFunction lap(grid);
    for (int i = 0; i < n; ++i) lap = lap + grid_dunkl_op(grid_dunkl_op(f, i), i);
    const double lap_norm = lap.lp_norm(p);
    if (f.sup_norm() == 0.0 || lap_norm <= skip_below * fnorm) {
      row.skipped = true;
      rows.push_back(row);
      continue;
    }
    const GridFunction trs = grid_dunkl_op(grid_dunkl_op(f, s), r);
    row.ratio = trs.lp_norm(p) / lap_norm;
    const GridFunction lhs = dunkl_transform(trs, false);
    const GridFunction rhs = dunkl_transform(lap * cplx(-1.0), false).multiplied([r, s](const Point& xi) {
      return riesz_symbol(xi, r) * riesz_symbol(xi, s);
    });
    row.factorization = relative_l2(rhs, lhs);
    rows.push_back(row);
  }
  return rows;
}

double sobolev_exponent(const ReflectionSetup& setup, double p) {
  const double d = 2.0 * gamma_sum(setup) + setup.dimension();
  if (!(d > 2.0)) throw DomainError("sobolev_exponent: empty window, 2 gamma_k + N must exceed 2");
  if (!std::isfinite(p) || !(p > 1.0) || !(p < d)) {
    std::ostringstream os;
    os << "sobolev_exponent: p = " << p << " outside (1, " << d << ")";
    throw DomainError(os.str());
  }
  return 1.0 / (1.0 / p - 1.0 / d);
}

namespace {

double sobolev_ratio(const GridFunction& f, double p, double q) {
  return f.lp_norm(q) / gradient_modulus(f).lp_norm(p);
}

}  // namespace

std::vector<SobolevRow> sobolev_inequality_check(GridPtr grid, const std::vector<TestFunction>& corpus, double p) {
  const double q = sobolev_exponent(grid->setup(), p);
  std::vector<SobolevRow> rows;
  for (const auto& tf : corpus) {
    const GridFunction f = GridFunction::sample(grid, tf.fn);
    rows.push_back({tf.name, p, q, sobolev_ratio(f, p, q)});
  }
  return rows;
}

double sobolev_dilation_drift(GridPtr grid, const TestFunction& f, double p, const std::vector<double>& dilations,
                              std::vector<double>* ratios) {
  const double q = sobolev_exponent(grid->setup(), p);
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  std::vector<double> out;
  for (double t : dilations) {
    if (!(t > 0.0)) throw DomainError("sobolev_dilation_drift: dilations must be positive");
    const GridFunction ft = GridFunction::sample(grid, [&](const Point& x) {
      Point y(x);
      for (double& v : y) v *= t;
      return f.fn(y);
    });
    const double ratio = sobolev_ratio(ft, p, q);
    out.push_back(ratio);
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  if (ratios) *ratios = out;
  return hi / lo - 1.0;
}

IdentityReport potential_identity_check(GridPtr grid, const TestFunction& f, const std::vector<Point>& points,
                                        const PotentialOptions& options) {
  const ReflectionSetup& setup = grid->setup();
  const double d = 2.0 * gamma_sum(setup) + setup.dimension();
  if (!(d > 1.0)) throw DomainError("potential_identity_check: needs 2 gamma_k + N > 1");
  const GridFunction fg = GridFunction::sample(grid, f.fn);

  // Spectrum of sum_j R_j T_j f.
  GridFunction spectrum(grid);
  for (int j = 0; j < setup.dimension(); ++j)
    spectrum = spectrum + dunkl_transform(grid_dunkl_op(fg, j), false).multiplied([j](const Point& xi) {
      return riesz_symbol(xi, j);
    });

  const PotentialRule rule = potential_rule(setup, 1.0, options);
  const PointBasis basis(grid, rule.points);
  const double half = 0.5 * options.outer_radius;
  // The integrand of I^1 decays like |y|^{-d-1} against |y|^{1-d} dm_k, so
  // the tail beyond R is O(R^-d).
  const double factor = 1.0 / (std::pow(2.0, d) - 1.0);

  IdentityReport report;
  report.points = points;
  const double scale = std::max(fg.sup_norm(), std::numeric_limits<double>::min());
  for (const Point& x : points) {
    const std::vector<cplx> v = evaluate_spectrum(modulate(spectrum, x), basis);
    cplx full = 0.0, inner = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const cplx term = rule.weights[i] * v[i];
      full += term;
      if (rule.radii[i] < half) inner += term;
    }
    const cplx value = full + (full - inner) * factor;
    const cplx expected = f.fn(x);
    report.reconstructed.push_back(value);
    report.expected.push_back(expected);
    report.defect = std::max(report.defect, std::abs(value - expected) / scale);
  }
  return report;
}

namespace {

double relative(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(b), std::numeric_limits<double>::min()); }

GridFunction centred_gaussian(GridPtr grid, double width) {
  return GridFunction::sample(grid, [width](const Point& y) { return cplx(std::exp(-0.5 * dot(y, y) / (width * width))); });
}

}  // namespace

std::vector<RouteConfig> separated_route_configs(GridPtr grid, int count, std::uint64_t seed) {
  const int n = grid->dimension();
  if (n > 2) throw DomainError("separated_route_configs: dimensions 1 and 2 only");
  std::mt19937_64 rng(seed);
  auto u = [&](double lo, double hi) { return lo + (hi - lo) * unit_uniform(rng()); };
  const KernelField probe(grid->setup(), KernelOptions{4, 2});
  std::vector<RouteConfig> out;
  int attempts = 0;
  while (static_cast<int>(out.size()) < count) {
    if (++attempts > 50 * count) throw DomainError("separated_route_configs: cannot place separated points");
    RouteConfig c;
    c.width = u(0.5, 0.65);
    // exp(-r^2 / (2 w^2)) = 1e-14 at r = w sqrt(2 ln 1e14).
    const double support = c.width * std::sqrt(2.0 * 14.0 * std::numbers::ln10);
    const double r = support + u(0.3, 1.0);
    if (n == 1) {
      c.x = {rng() % 2 ? r : -r};
    } else {
      const double phi = u(0.0, 2.0 * std::numbers::pi);
      c.x = {r * std::cos(phi), r * std::sin(phi)};
    }
    c.j = static_cast<int>(out.size()) % n;
    const GridFunction f = centred_gaussian(grid, c.width);
    try {
      // The separation checks run before any kernel evaluation of consequence.
      (void)riesz_kernel_route(probe, c.j, f, c.x);
    } catch (const DomainError&) {
      continue;
    }
    out.push_back(c);
  }
  return out;
}

RouteRow riesz_routes(GridPtr grid, const KernelField& field, const RouteConfig& config, bool truncated, bool kernel) {
  const ReflectionSetup& setup = grid->setup();
  const GridFunction f = centred_gaussian(grid, config.width);
  RouteRow row;
  row.config = config;
  row.multiplier = RieszMultiplierRoute(f, config.j)(config.x);
  std::vector<cplx> values{row.multiplier};
  if (truncated) {
    row.truncated = riesz_truncated(setup, config.j, translated_gaussian(setup, config.width, config.x), config.x,
                                    geometric_eps(0.5, 5))
                        .limit;
    values.push_back(row.truncated);
  }
  if (kernel) {
    row.kernel = riesz_kernel_route(field, config.j, f, config.x);
    values.push_back(row.kernel);
  }
  for (std::size_t a = 0; a < values.size(); ++a)
    for (std::size_t b = a + 1; b < values.size(); ++b)
      row.max_defect = std::max(row.max_defect, relative(values[a], values[b]));
  return row;
}

std::vector<std::pair<Point, Point>> hormander_pairs(const ReflectionSetup& setup, int count, std::uint64_t seed) {
  const int n = setup.dimension();
  std::mt19937_64 rng(seed);
  auto u = [&](double lo, double hi) { return lo + (hi - lo) * unit_uniform(rng()); };
  std::vector<std::pair<Point, Point>> out;
  while (static_cast<int>(out.size()) < count) {
    Point y0(n);
    for (double& v : y0) v = u(-2.0, 2.0);
    const double r0 = norm(y0);
    if (r0 < 0.2) continue;
    Point dir(n);
    for (double& v : dir) v = u(-1.0, 1.0);
    const double dn = norm(dir);
    if (dn < 0.1) continue;
    const double delta = u(0.05, 0.5) * r0;
    Point y(y0);
    for (int i = 0; i < n; ++i) y[i] += delta * dir[i] / dn;
    out.emplace_back(y, y0);
  }
  return out;
}

HormanderRow hormander_drift(const KernelField& field, int j, const Point& y, const Point& y0) {
  HormanderRow row{y, y0, j};
  const HormanderOptions base;
  HormanderOptions fine;
  double delta = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) delta += (y[i] - y0[i]) * (y[i] - y0[i]);
  fine.radius = 2.0 * 16.0 * (norm(y0) + std::sqrt(delta));
  fine.radial_points = 2 * base.radial_points;
  fine.angular_points = 2 * base.angular_points;
  row.base = hormander_estimate(field, j, y, y0, base).total();
  row.refined = hormander_estimate(field, j, y, y0, fine).total();
  row.drift = std::abs(row.refined - row.base) / row.refined;
  return row;
}

}  // namespace dunkl
