#include "dunkl/riesz.hpp"

#include "dunkl/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

namespace dunkl {

namespace {

// Neville extrapolation of (h_i, v_i) to h = 0.
cplx extrapolate_to_zero(const std::vector<double>& h, std::vector<cplx> v) {
  const std::size_t n = v.size();
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t i = n - 1; i >= k; --i) v[i] = (h[i - k] * v[i] - h[i] * v[i - 1]) / (h[i - k] - h[i]);
  return v.back();
}

double ipow(double x, int n) {
  double r = 1.0;
  for (; n > 0; n >>= 1, x *= x)
    if (n & 1) r *= x;
  return r;
}

void require_low_dimension(const ReflectionSetup& s, const char* what) {
  if (s.dimension() > 2) throw DomainError(std::string(what) + ": polar quadrature is implemented for N <= 2");
}

// Radial panels: the given breakpoints, then panels of at most `width` up to `outer`.
std::vector<double> radial_breaks(std::vector<double> breaks, double outer, double width) {
  double r = breaks.back();
  while (r < outer - 1e-12) {
    r = std::min(outer, r + width);
    breaks.push_back(r);
  }
  return breaks;
}

}  // namespace

SphereRule sphere_rule(const ReflectionSetup& setup, int per_quadrant) {
  require_low_dimension(setup, "sphere_rule");
  SphereRule s;
  if (setup.dimension() == 1) {
    const double w = std::pow(2.0, setup.multiplicity(0));
    s.directions = {{1.0}, {-1.0}};
    s.weights = {w, w};
    return s;
  }
  const double g1 = setup.multiplicity(0), g2 = setup.multiplicity(1);
  const Rule& r = gauss_jacobi(per_quadrant, 2.0 * g1, 2.0 * g2);
  const double q = std::numbers::pi / 4.0;
  auto sinc = [](double u) { return u == 0.0 ? 1.0 : std::sin(u) / u; };
  std::vector<double> phis, ws;
  for (std::size_t i = 0; i < r.size(); ++i) {
    const double t = r.nodes[i];
    const double u1 = q * (1.0 - t), u2 = q * (1.0 + t);
    phis.push_back(u2);
    ws.push_back(r.weights[i] * std::pow(q, 1.0 + 2.0 * g1 + 2.0 * g2) * std::pow(sinc(u1), 2.0 * g1) *
                 std::pow(sinc(u2), 2.0 * g2) * std::pow(2.0, g1 + g2));
  }
  // Quadrants I, II, then their antipodes III, IV.
  for (int quadrant = 0; quadrant < 4; ++quadrant) {
    for (std::size_t i = 0; i < phis.size(); ++i) {
      const double c = std::cos(phis[i]), sn = std::sin(phis[i]);
      Point d;
      switch (quadrant) {
        case 0: d = {c, sn}; break;
        case 1: d = {-c, sn}; break;
        case 2: d = {-c, -sn}; break;
        default: d = {c, -sn}; break;
      }
      s.directions.push_back(d);
      s.weights.push_back(ws[i]);
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// Kernel

KernelField::KernelField(const ReflectionSetup& setup, KernelOptions options)
    : setup_(setup), constants_(compute_constants(setup)), options_(options) {}

void KernelField::require_separated(std::span<const double> x, std::span<const double> y) const {
  if (orbit_distance(setup_, x, y) < options_.singular_tol)
    throw DomainError("Riesz kernel: y lies on the orbit of x (singular pair)");
}

IntertwiningMeasure KernelField::measure_for(std::span<const double> x, std::span<const double> y,
                                             int both_ends) const {
  const double amin = orbit_distance(setup_, x, y);
  std::vector<BetaRule> factors;
  for (int i = 0; i < setup_.dimension(); ++i) {
    const double g = setup_.multiplicity(i);
    if (x[i] == 0.0) {
      factors.push_back(BetaRule{{0.0}, {1.0}});
      continue;
    }
    const double a = 2.0 * std::abs(x[i] * y[i]);
    const double scale = a > 0.0 ? amin * amin / a : 1.0;
    if (g == 0.0 || scale >= 0.5) {
      factors.push_back(beta_rule(g, options_.mu_points));
    } else {
      const int side = i == both_ends ? 0 : (x[i] * y[i] > 0.0 ? 1 : -1);
      factors.push_back(graded_beta_rule(g, std::max(options_.panel_points, 4), side, 0.5 * scale));
    }
  }
  return IntertwiningMeasure(Point(x.begin(), x.end()), std::move(factors));
}

KernelField::Parts KernelField::parts(int j, std::span<const double> x, std::span<const double> y) const {
  require_separated(x, y);
  const double p = constants_.p_k;
  const double gj = setup_.multiplicity(j);
  const double base = dot(x, x) + dot(y, y);
  const double amin2 = std::pow(orbit_distance(setup_, x, y), 2);
  const double amax2 = std::pow(orbit_distance_max(setup_, x, y), 2);
  const double tol = 1e-12 * amax2;
  const double ny = norm(y);
  const bool on_hyperplane = std::abs(y[j]) <= options_.hyperplane_tol * ny;
  const double s = 0.5 * (2.0 - p);
  const bool integer_p = p == std::round(p) && p <= 64.0;
  const int ip = static_cast<int>(p);

  const auto mu = measure_for(x, y, gj > 0.0 ? j : -1);
  double k1 = 0.0, ka = 0.0;
  std::uint64_t bad = 0, count = 0;
  mu.for_each([&](const Point& eta, double w) {
    double a2 = base - 2.0 * dot(y, eta);
    ++count;
    if (a2 < amin2 - tol || a2 > amax2 + tol) ++bad;
    a2 = std::max(a2, amin2);
    const double u = integer_p ? std::sqrt(a2) : 0.0;
    const double amp = integer_p ? ipow(1.0 / u, ip) : std::exp(-0.5 * p * std::log(a2));  // A^{-p}
    k1 += w * (eta[j] - y[j]) * amp;
    if (on_hyperplane) {
      ka += w * eta[j] * amp;
      return;
    }
    const double b2 = a2 + 4.0 * y[j] * eta[j];  // A^2 at sigma_j y
    ++count;
    if (b2 < amin2 - tol || b2 > amax2 + tol) ++bad;
    if (integer_p) {
      // u^-q - v^-q = (v - u) sum_i v^i u^{q-1-i} / (u v)^q, q = p - 2.
      const double v = std::sqrt(std::max(b2, amin2));
      double acc = 0.0, vi = 1.0;
      for (int i = 0; i < ip - 2; ++i, vi *= v) acc += vi * ipow(u, ip - 3 - i);
      ka += w * (b2 - a2) / (u + v) * acc * (amp * a2) * ipow(1.0 / v, ip - 2);
      return;
    }
    // a^s - b^s without cancellation: a^s (1 - (b/a)^s).
    const double as = amp * a2;
    ka += -w * as * std::expm1(s * std::log1p((b2 - a2) / a2));
  });
  checked_ += count;
  violations_ += bad;

  Parts out;
  out.k1 = k1;
  out.kalpha = on_hyperplane ? std::numbers::sqrt2 * (p - 2.0) * ka : ka / (std::numbers::sqrt2 * y[j]);
  const double coupling = gj > 0.0 ? gj * std::numbers::sqrt2 / (p - 2.0) : 0.0;
  out.full = constants_.d_k * (out.k1 + coupling * out.kalpha);
  return out;
}

double KernelField::K1(int j, std::span<const double> x, std::span<const double> y) const {
  return parts(j, x, y).k1;
}

double KernelField::Kalpha(int r, std::span<const double> x, std::span<const double> y) const {
  return parts(r, x, y).kalpha;
}

double KernelField::full(int j, std::span<const double> x, std::span<const double> y) const {
  return parts(j, x, y).full;
}

double metric_A(const ReflectionSetup& setup, std::span<const double> x, std::span<const double> y,
                std::span<const double> eta) {
  for (int i = 0; i < setup.dimension(); ++i)
    if (std::abs(eta[i]) > std::abs(x[i]) * (1.0 + 1e-12) + 1e-300)
      throw DomainError("metric_A: eta is outside the convex hull of the orbit of x");
  return std::sqrt(std::max(0.0, dot(x, x) + dot(y, y) - 2.0 * dot(y, eta)));
}

double kernel_K1(const ReflectionSetup& setup, int j, std::span<const double> x, std::span<const double> y) {
  return KernelField(setup).K1(j, x, y);
}

double kernel_Kalpha(const ReflectionSetup& setup, int r, std::span<const double> x, std::span<const double> y) {
  return KernelField(setup).Kalpha(r, x, y);
}

double kernel_full(const ReflectionSetup& setup, int j, std::span<const double> x, std::span<const double> y) {
  return KernelField(setup).full(j, x, y);
}

// ---------------------------------------------------------------------------
// Multiplier route

cplx riesz_symbol(std::span<const double> xi, int j) {
  const double n = norm(xi);
  return n == 0.0 ? cplx(0.0) : cplx(0.0, -xi[j] / n);
}

GridFunction riesz_multiplier(const GridFunction& f, int j) {
  if (j < 0 || j >= f.grid().dimension()) throw DomainError("riesz_multiplier: coordinate out of range");
  return apply_multiplier(f, [j](const Point& xi) { return riesz_symbol(xi, j); });
}

RieszMultiplierRoute::RieszMultiplierRoute(const GridFunction& f, int j)
    : eval_(dunkl_transform(f).multiplied([j](const Point& xi) { return riesz_symbol(xi, j); })) {}

// ---------------------------------------------------------------------------
// Truncated singular integral

std::vector<double> geometric_eps(double eps0, int count) {
  std::vector<double> e;
  for (int m = 0; m < count; ++m) e.push_back(std::ldexp(eps0, -m));
  return e;
}

TruncatedResult riesz_truncated(const ReflectionSetup& setup, int j, const TranslatedFn& tau,
                                std::span<const double> x, const std::vector<double>& eps_sequence,
                                const TruncatedOptions& options) {
  require_low_dimension(setup, "riesz_truncated");
  if (eps_sequence.empty()) throw DomainError("riesz_truncated: empty eps sequence");
  for (std::size_t m = 0; m < eps_sequence.size(); ++m) {
    if (!(eps_sequence[m] > 0.0)) throw DomainError("riesz_truncated: eps must be positive");
    if (m && !(eps_sequence[m] < eps_sequence[m - 1]))
      throw DomainError("riesz_truncated: eps sequence must be strictly decreasing");
  }
  const auto c = compute_constants(setup);
  const double outer = options.outer_radius > 0.0 ? options.outer_radius : norm(x) + 12.0;
  const SphereRule sph = sphere_rule(setup, options.angular_points);
  const std::size_t half = sph.directions.size() / 2;

  // Paired angular integral at radius r, times r^{-1}.
  auto shell = [&](double r) {
    cplx s = 0.0;
    Point y(setup.dimension());
    Point ny(setup.dimension());
    for (std::size_t i = 0; i < half; ++i) {
      const Point& th = sph.directions[i];
      if (th[j] == 0.0) continue;
      for (int d = 0; d < setup.dimension(); ++d) {
        y[d] = r * th[d];
        ny[d] = -y[d];
      }
      s += sph.weights[i] * th[j] * (tau(ny) - tau(y));
    }
    return s / r;
  };
  auto integrate = [&](double lo, double hi) {
    const Rule r = gauss_legendre_on(options.radial_points, lo, hi);
    cplx s = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i) s += r.weights[i] * shell(r.nodes[i]);
    return s;
  };

  const double scale = c.d_k / c.c_k;
  TruncatedResult res;
  res.eps = eps_sequence;
  const auto outer_breaks = radial_breaks({eps_sequence.front()}, outer, options.panel_width);
  cplx tail = 0.0;
  for (std::size_t b = 0; b + 1 < outer_breaks.size(); ++b) tail += integrate(outer_breaks[b], outer_breaks[b + 1]);
  cplx acc = tail;
  res.values.push_back(scale * acc);
  for (std::size_t m = 1; m < eps_sequence.size(); ++m) {
    acc += integrate(eps_sequence[m], eps_sequence[m - 1]);
    res.values.push_back(scale * acc);
  }
  res.limit = extrapolate_to_zero(res.eps, res.values);
  return res;
}

// ---------------------------------------------------------------------------
// Kernel route

namespace {

[[noreturn]] void separation_error(const std::string& detail) {
  throw DomainError(
      "riesz_kernel_route: the kernel formula needs every reflection of x to lie outside the support of f, but " +
      detail);
}

// True if some corner of the grid cell containing z carries |f| > cut.
bool cell_touches_support(const GridFunction& f, const Point& z, double cut) {
  const Grid& g = f.grid();
  const int n = g.dimension();
  std::vector<std::size_t> lo(n);
  for (int d = 0; d < n; ++d) {
    const auto& nodes = g.axis(d).nodes;
    if (z[d] <= nodes.front() || z[d] >= nodes.back()) return false;
    lo[d] = static_cast<std::size_t>(std::upper_bound(nodes.begin(), nodes.end(), z[d]) - nodes.begin()) - 1;
  }
  for (unsigned corner = 0; corner < (1u << n); ++corner) {
    std::size_t flat = 0;
    for (int d = 0; d < n; ++d) flat += (lo[d] + ((corner >> d) & 1u)) * g.stride(d);
    if (std::abs(f[flat]) > cut) return true;
  }
  return false;
}

}  // namespace

cplx riesz_kernel_route(const KernelField& field, int j, const GridFunction& f, std::span<const double> x) {
  const Grid& g = f.grid();
  const double cut = 1e-14 * f.sup_norm();
  const double c_k = field.constants().c_k;
  for (const auto& el : field.setup().group_elements())
    if (cell_touches_support(f, el.apply(x), cut))
      separation_error("a point of the orbit of x lies inside it");
  cplx s = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!(std::abs(f[i]) > cut)) continue;
    const Point y = g.node(i);
    const double d = orbit_distance(field.setup(), x, y);
    if (d < 1e-3) separation_error("the orbit of x comes within " + std::to_string(d) + " of it");
    s += field.full(j, x, y) * f[i] * g.weight(i);
  }
  return s / c_k;
}

// ---------------------------------------------------------------------------
// Hormander integral

HormanderResult hormander_estimate(const KernelField& field, int j, std::span<const double> y,
                                   std::span<const double> y0, const HormanderOptions& options) {
  const ReflectionSetup& setup = field.setup();
  require_low_dimension(setup, "hormander_estimate");
  const int n = setup.dimension();
  Point diff(n);
  for (int i = 0; i < n; ++i) diff[i] = y[i] - y0[i];
  const double delta = norm(diff);
  if (delta == 0.0) throw DomainError("hormander_estimate: y must differ from y0");
  const std::span<const double> centre = options.centre_at_y0 ? y0 : y;
  Point cp(n);
  for (int i = 0; i < n; ++i) cp[i] = std::abs(centre[i]);
  const double R = options.radius > 0.0 ? options.radius : 16.0 * (norm(cp) + delta);
  const auto& groups = setup.group_elements();

  HormanderResult res;
  // |K(g u, y) - K(g u, y0)| summed over g; u in the closed positive orthant.
  auto delta_k = [&](const Point& u) {
    double s = 0.0;
    for (const auto& g : groups) {
      const Point x = g.apply(u);
      s += std::abs(field.full(j, x, y) - field.full(j, x, y0));
      res.kernel_evaluations += 2;
    }
    return s;
  };
  // Density of m_k at u, with coordinate `skip` replaced by 2^g |omega|^{2g}
  // (its vanishing factor (hi - rho)^{2g} is carried by the Jacobi rule).
  auto density = [&](const Point& u, int skip, const Point& omega) {
    double w = 1.0;
    for (int i = 0; i < n; ++i) {
      const double g = setup.multiplicity(i);
      if (g == 0.0) continue;
      w *= std::pow(2.0, g) * std::pow(std::abs(i == skip ? omega[i] : u[i]), 2.0 * g);
    }
    return w;
  };

  // Integral along the ray cp + rho omega, rho in [2 delta, rho_max].
  auto ray = [&](const Point& omega, double rho_max, int hit) {
    const double lo = 2.0 * delta;
    if (!(rho_max > lo)) return 0.0;
    std::vector<double> br{lo};
    while (br.back() * 2.0 < rho_max) br.push_back(br.back() * 2.0);
    br.push_back(rho_max);
    if (br.size() > 2 && br[br.size() - 1] - br[br.size() - 2] < 0.25 * (br[br.size() - 2] - br[br.size() - 3])) {
      br.erase(br.end() - 2);
    }
    double total = 0.0;
    Point u(n);
    for (std::size_t b = 0; b + 1 < br.size(); ++b) {
      const double a0 = br[b], a1 = br[b + 1];
      const bool last = b + 2 == br.size();
      const bool jac = last && hit >= 0 && setup.multiplicity(hit) > 0.0;
      Rule r;
      if (jac) {
        const double a = 2.0 * setup.multiplicity(hit);
        const Rule& ref = gauss_jacobi(options.radial_points + 2, a, 0.0);
        const double h = 0.5 * (a1 - a0);
        for (std::size_t i = 0; i < ref.size(); ++i) {
          r.nodes.push_back(a0 + h * (1.0 + ref.nodes[i]));
          r.weights.push_back(ref.weights[i] * std::pow(h, a + 1.0));
        }
      } else {
        r = gauss_legendre_on(options.radial_points, a0, a1);
      }
      for (std::size_t i = 0; i < r.size(); ++i) {
        const double rho = r.nodes[i];
        for (int d = 0; d < n; ++d) u[d] = std::max(0.0, cp[d] + rho * omega[d]);
        const double w = density(u, jac ? hit : -1, omega);
        total += r.weights[i] * std::pow(rho, n - 1) * w * delta_k(u);
      }
    }
    return total;
  };

  auto rho_limit = [&](const Point& omega, int& hit) {
    const double b = dot(cp, omega);
    double rho = -b + std::sqrt(std::max(0.0, b * b - dot(cp, cp) + R * R));
    hit = -1;
    for (int d = 0; d < n; ++d) {
      if (omega[d] < 0.0) {
        const double rd = cp[d] / -omega[d];
        if (rd < rho) {
          rho = rd;
          hit = d;
        }
      }
    }
    return rho;
  };

  if (n == 1) {
    for (double s : {1.0, -1.0}) {
      const Point omega{s};
      int hit = -1;
      const double rm = rho_limit(omega, hit);
      res.value += ray(omega, rm, hit);
    }
  } else {
    const double pi = std::numbers::pi;
    std::vector<double> cuts{0.0, 0.5 * pi, pi, 1.5 * pi, 2.0 * pi};
    auto add_dir = [&](double dx, double dy) {
      if (dx == 0.0 && dy == 0.0) return;
      double a = std::atan2(dy, dx);
      if (a < 0.0) a += 2.0 * pi;
      cuts.push_back(a);
    };
    add_dir(-cp[0], -cp[1]);
    add_dir(-cp[0], R - cp[1]);
    add_dir(R - cp[0], -cp[1]);
    std::sort(cuts.begin(), cuts.end());
    for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
      if (cuts[c + 1] - cuts[c] < 1e-12) continue;
      const Rule r = gauss_legendre_on(options.angular_points, cuts[c], cuts[c + 1]);
      for (std::size_t i = 0; i < r.size(); ++i) {
        const Point omega{std::cos(r.nodes[i]), std::sin(r.nodes[i])};
        int hit = -1;
        const double rm = rho_limit(omega, hit);
        res.value += r.weights[i] * ray(omega, rm, hit);
      }
    }
  }

  // Tail: shell integrand Phi(r) = r^{2 gamma + N - 1} int_S sum_g |dK| w, fitted as r^-q.
  const SphereRule sph = sphere_rule(setup, 16);
  const double gk = compute_constants(setup).gamma_k;
  auto shell = [&](double r) {
    double s = 0.0;
    for (std::size_t i = 0; i < sph.directions.size(); ++i) {
      Point x(n);
      for (int d = 0; d < n; ++d) x[d] = r * sph.directions[i][d];
      s += sph.weights[i] * std::abs(field.full(j, x, y) - field.full(j, x, y0));
      res.kernel_evaluations += 2;
    }
    return s * std::pow(r, 2.0 * gk + n - 1.0);
  };
  const double phi_half = shell(0.5 * R), phi_full = shell(R);
  res.decay = phi_full > 0.0 && phi_half > 0.0 ? std::log2(phi_half / phi_full) : 0.0;
  res.tail = res.decay > 1.0 ? R * phi_full / (res.decay - 1.0) : std::numeric_limits<double>::infinity();
  if (phi_full == 0.0) res.tail = 0.0;
  return res;
}

// ---------------------------------------------------------------------------
// Potential

double potential_constant(const ReflectionSetup& setup, double beta) {
  const auto c = compute_constants(setup);
  const double n = setup.dimension();
  return std::pow(2.0, beta - c.gamma_k - 0.5 * n) * std::tgamma(0.5 * beta) /
         std::tgamma(c.gamma_k + 0.5 * (n - beta));
}

PotentialRule potential_rule(const ReflectionSetup& setup, double beta, const PotentialOptions& options) {
  require_low_dimension(setup, "riesz_potential");
  const auto c = compute_constants(setup);
  const double dim = 2.0 * c.gamma_k + setup.dimension();
  if (!(beta > 0.0 && beta < dim)) throw DomainError("riesz_potential: need 0 < beta < 2 gamma_k + N");
  const SphereRule sph = sphere_rule(setup, options.angular_points);
  const double norm_factor = 1.0 / (c.c_k * potential_constant(setup, beta));
  PotentialRule rule;
  auto add_shell = [&](double r, double w) {
    for (std::size_t i = 0; i < sph.directions.size(); ++i) {
      Point y = sph.directions[i];
      for (double& v : y) v *= r;
      rule.points.push_back(std::move(y));
      rule.radii.push_back(r);
      rule.weights.push_back(w * sph.weights[i] * norm_factor);
    }
  };
  // r^{beta - 1} dr: Jacobi weight on the first panel, smooth beyond.
  const double h = options.panel_width;
  const Rule head = gauss_power_weight(options.radial_points, beta - 1.0, h);
  for (std::size_t i = 0; i < head.size(); ++i) add_shell(head.nodes[i], head.weights[i]);
  const double mid = 0.5 * options.outer_radius;  // always a panel boundary
  double lo = h;
  while (lo < options.outer_radius - 1e-12) {
    double hi = std::min(options.outer_radius, lo + std::max(h, options.panel_growth * lo));
    if (lo < mid && hi > mid) hi = mid;
    const Rule r = gauss_legendre_on(options.radial_points, lo, hi);
    for (std::size_t i = 0; i < r.size(); ++i) add_shell(r.nodes[i], r.weights[i] * std::pow(r.nodes[i], beta - 1.0));
    lo = hi;
  }
  return rule;
}

cplx riesz_potential(const ReflectionSetup& setup, double beta, const TranslatedFn& tau,
                     const PotentialOptions& options) {
  const PotentialRule rule = potential_rule(setup, beta, options);
  cplx total = 0.0;
  for (std::size_t i = 0; i < rule.points.size(); ++i) total += rule.weights[i] * tau(rule.points[i]);
  return total;
}

}  // namespace dunkl
