#include "dunkl/translate.hpp"

#include <cmath>
#include <memory>

namespace dunkl {

RadialProfile gaussian_profile(double width) {
  return {"gaussian", [width](double t) { return std::exp(-0.5 * t * t / (width * width)); }, 1.0, 0.0};
}

RadialProfile polynomial_gaussian_profile() {
  return {"polynomial_gaussian", [](double t) { return (1.0 + t * t) * std::exp(-0.5 * t * t); }, 2.0, 0.0};
}

RadialProfile rational_gaussian_profile() {
  return {"rational_gaussian",
          [](double t) {
            const double q = 1.0 + 0.25 * t * t;
            return std::exp(-0.5 * t * t) / (q * q);
          },
          1.0, 4.0};
}

std::vector<RadialProfile> radial_corpus() {
  return {gaussian_profile(1.0), gaussian_profile(0.7), gaussian_profile(1.1), polynomial_gaussian_profile(),
          rational_gaussian_profile()};
}

TranslatedFn translated_gaussian(const ReflectionSetup& setup, double width, std::span<const double> x) {
  const double inv = 1.0 / (width * width);
  std::vector<cplx> lambda;
  for (double v : x) lambda.push_back(-v * inv);
  const double xx = dot(x, x);
  return [setup, lambda, xx, inv](const Point& y) {
    return std::exp(-0.5 * (xx + dot(y, y)) * inv) * dunkl_kernel(setup, lambda, y);
  };
}

TranslatedFn translated_radial(const ReflectionSetup& setup, const RadialProfile& f, std::span<const double> x,
                               int npts) {
  auto etas = std::make_shared<std::vector<Point>>();
  auto ws = std::make_shared<std::vector<double>>();
  intertwining_measure(setup, x, npts).for_each([&](const Point& eta, double w) {
    etas->push_back(eta);
    ws->push_back(w);
  });
  const double xx = dot(x, x);
  return [f, etas, ws, xx](const Point& y) {
    const double base = xx + dot(y, y);
    double s = 0.0;
    for (std::size_t m = 0; m < etas->size(); ++m)
      s += (*ws)[m] * f(std::sqrt(std::max(0.0, base + 2.0 * dot(y, (*etas)[m]))));
    return cplx(s);
  };
}

TranslatedFn translated_spectral(const GridFunction& f, std::span<const double> x) {
  auto eval = std::make_shared<SpectralEvaluator>(modulate(dunkl_transform(f), x));
  return [eval](const Point& y) { return (*eval)(y); };
}

GridFunction translate_spectral(const GridFunction& f, std::span<const double> x) {
  if (dot(x, x) == 0.0) return f;  // E_k(0, .) = 1
  return inverse_dunkl_transform(modulate(dunkl_transform(f), x));
}

double translate_radial(const ReflectionSetup& setup, std::span<const double> x, const RadialProfile& f,
                        std::span<const double> y, int npts) {
  const double base = dot(x, x) + dot(y, y);
  const auto mu = intertwining_measure(setup, x, npts);
  double s = 0.0;
  mu.for_each([&](const Point& eta, double w) {
    const double r2 = std::max(0.0, base + 2.0 * dot(y, eta));
    s += w * f(std::sqrt(r2));
  });
  return s;
}

double translate_radial(const ReflectionSetup& setup, std::span<const double> x, const RadialProfile& f,
                        std::span<const double> y) {
  double prev = translate_radial(setup, x, f, y, 64);
  for (int n = 128; n <= 1024; n *= 2) {
    const double cur = translate_radial(setup, x, f, y, n);
    if (std::abs(cur - prev) < 1e-9) return cur;
    prev = cur;
  }
  return prev;
}

GridFunction translate_radial_grid(GridPtr grid, std::span<const double> x, const RadialProfile& f, int npts) {
  const auto mu = intertwining_measure(grid->setup(), x, npts);
  std::vector<Point> etas;
  std::vector<double> ws;
  mu.for_each([&](const Point& eta, double w) {
    etas.push_back(eta);
    ws.push_back(w);
  });
  const double xx = dot(x, x);
  return GridFunction::sample(grid, [&](const Point& y) {
    const double base = xx + dot(y, y);
    double s = 0.0;
    for (std::size_t m = 0; m < etas.size(); ++m) s += ws[m] * f(std::sqrt(std::max(0.0, base + 2.0 * dot(y, etas[m]))));
    return cplx(s);
  });
}

double check_symmetry(const ReflectionSetup& setup, const RadialProfile& f,
                      const std::vector<std::pair<Point, Point>>& pairs) {
  double worst = 0.0;
  for (const auto& [x, y] : pairs)
    worst = std::max(worst, std::abs(translate_radial(setup, x, f, y) - translate_radial(setup, y, f, x)));
  return worst;
}

double check_op_commutation(const GridFunction& f, std::span<const double> x) {
  const GridFunction tf = translate_spectral(f, x);
  double worst = 0.0;
  for (int j = 0; j < f.grid().dimension(); ++j) {
    const GridFunction a = grid_dunkl_op(tf, j);
    const GridFunction b = translate_spectral(grid_dunkl_op(f, j), x);
    worst = std::max(worst, relative_l2(a, b));
  }
  return worst;
}

double check_duality(const GridFunction& f, const GridFunction& g, std::span<const double> x) {
  const GridFunction tf = translate_spectral(f, x).negated();
  const GridFunction tg = translate_spectral(g, x).negated();
  cplx a = 0.0, b = 0.0;
  const Grid& grid = f.grid();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double w = grid.weight(i);
    a += tf[i] * g[i] * w;
    b += f[i] * tg[i] * w;
  }
  return std::abs(a - b);
}

std::vector<double> contraction_ratios(GridPtr grid, std::span<const double> x, const RadialProfile& f,
                                       const std::vector<double>& ps, int npts) {
  for (double p : ps)
    if (!(p >= 1.0 && p <= 2.0)) throw DomainError("contraction_ratio: only 1 <= p <= 2 is covered");
  const GridFunction t = translate_radial_grid(grid, x, f, npts);
  const GridFunction g = GridFunction::sample(grid, [&](const Point& y) { return f.on(y); });
  std::vector<double> out;
  for (double p : ps) out.push_back(t.lp_norm(p) / g.lp_norm(p));
  return out;
}

double contraction_ratio(GridPtr grid, std::span<const double> x, const RadialProfile& f, double p, int npts) {
  return contraction_ratios(grid, x, f, {p}, npts).front();
}

}  // namespace dunkl
