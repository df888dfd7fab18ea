#include "dunkl/corpus.hpp"

#include <cmath>
#include <random>

namespace dunkl {

namespace {

double sq(const Point& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s;
}

}  // namespace

double unit_uniform(std::uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1.0p-53; }

std::vector<TestFunction> deterministic_corpus(int dimension) {
  const int last = dimension - 1;
  std::vector<TestFunction> c;
  c.push_back({"gaussian", [](const Point& x) { return cplx(std::exp(-0.5 * sq(x))); }});
  c.push_back({"gaussian_narrow", [](const Point& x) { return cplx(std::exp(-2.0 * sq(x))); }});
  c.push_back({"gaussian_wide", [](const Point& x) { return cplx(std::exp(-sq(x) / 2.4)); }});
  c.push_back({"gaussian_shifted", [](const Point& x) {
                 Point d = x;
                 for (std::size_t j = 0; j < d.size(); ++j) d[j] -= j % 2 ? -0.4 : 0.7;
                 return cplx(std::exp(-0.5 * sq(d)));
               }});
  c.push_back({"odd_x1", [](const Point& x) { return cplx(x[0] * std::exp(-sq(x))); }});
  c.push_back({"cos_modulated", [](const Point& x) { return cplx(std::cos(2.0 * x[0]) * std::exp(-0.5 * sq(x))); }});
  c.push_back({"plane_wave", [](const Point& x) { return std::exp(cplx(-0.5 * sq(x), 1.5 * x[0])); }});
  c.push_back({"polynomial_weighted", [last](const Point& x) {
                 return cplx((1.0 + x[0] * x[0] - x[0] * x[last]) * std::exp(-0.5 * sq(x)));
               }});
  c.push_back({"smoothed_indicator", [](const Point& x) {
                 return cplx(0.5 * std::erfc((sq(x) - 4.0) / 4.0));
               }});
  c.push_back({"super_gaussian", [](const Point& x) { const double r2 = sq(x); return cplx(std::exp(-r2 * r2 / 16.0)); }});
  c.push_back({"mixed_parity", [last](const Point& x) {
                 return cplx(std::sin(x[0]) * (1.0 + 0.5 * x[last]) * std::exp(-0.5 * sq(x)));
               }});
  c.push_back({"rational_gaussian", [](const Point& x) { const double r2 = sq(x); return cplx(std::exp(-0.5 * r2) / (1.0 + 0.25 * r2)); }});
  return c;
}

std::vector<TestFunction> random_corpus(int dimension, std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  auto u = [&](double lo, double hi) { return lo + (hi - lo) * unit_uniform(rng()); };
  std::vector<TestFunction> c;
  for (int m = 0; m < count; ++m) {
    struct Bump {
      Point centre;
      double width;
      cplx amp;
    };
    std::vector<Bump> bumps(1 + rng() % 4);
    for (auto& b : bumps) {
      b.centre.resize(dimension);
      for (auto& v : b.centre) v = u(-1.5, 1.5);
      b.width = u(0.6, 1.0);
      b.amp = cplx(u(-1.0, 1.0), u(-1.0, 1.0));
    }
    c.push_back({"random_" + std::to_string(m), [bumps](const Point& x) {
                   cplx s = 0.0;
                   for (const auto& b : bumps) {
                     double r2 = 0.0;
                     for (std::size_t j = 0; j < x.size(); ++j) r2 += (x[j] - b.centre[j]) * (x[j] - b.centre[j]);
                     s += b.amp * std::exp(-0.5 * r2 / (b.width * b.width));
                   }
                   return s;
                 }});
  }
  return c;
}

std::vector<TestFunction> standard_corpus(int dimension, std::uint64_t seed) {
  auto c = deterministic_corpus(dimension);
  auto r = random_corpus(dimension, seed, 38);
  c.insert(c.end(), r.begin(), r.end());
  return c;
}

}  // namespace dunkl
