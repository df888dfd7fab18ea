#include "dunkl/rootsys.hpp"

#include "dunkl/quadrature.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace dunkl {

Point GroupElement::apply(std::span<const double> x) const {
  Point out(x.begin(), x.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] *= signs[i];
  return out;
}

ReflectionSetup::ReflectionSetup(std::vector<double> gammas) : gammas_(std::move(gammas)) {
  const int n = dimension();
  for (int j = 0; j < n; ++j) {
    Point alpha(n, 0.0);
    alpha[j] = std::numbers::sqrt2;
    roots_.push_back(std::move(alpha));
  }
  const std::uint32_t count = 1u << n;
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    GroupElement g;
    g.signs.resize(n);
    for (int j = 0; j < n; ++j) g.signs[j] = (mask >> j) & 1u ? -1 : 1;
    group_.push_back(std::move(g));
  }
}

ReflectionSetup ReflectionSetup::product(std::vector<double> multiplicities) {
  if (multiplicities.empty()) throw DomainError("ReflectionSetup: dimension must be positive");
  if (multiplicities.size() > 16) throw DomainError("ReflectionSetup: dimension too large");
  for (double k : multiplicities) {
    if (!std::isfinite(k) || k < 0.0)
      throw DomainError("ReflectionSetup: multiplicities must be finite and nonnegative");
  }
  return ReflectionSetup(std::move(multiplicities));
}

Point ReflectionSetup::reflect(int r, std::span<const double> x) const {
  // sigma_alpha(x) = x - <alpha, x> alpha, with |alpha|^2 = 2.
  const Point& alpha = roots_.at(r);
  const double c = dot(alpha, x);
  Point out(x.begin(), x.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= c * alpha[i];
  return out;
}

bool ReflectionSetup::is_classical() const {
  for (double k : gammas_)
    if (k != 0.0) return false;
  return true;
}

std::string ReflectionSetup::describe() const {
  std::ostringstream os;
  os << "Z2^" << dimension() << " k=(";
  for (int j = 0; j < dimension(); ++j) os << (j ? "," : "") << gammas_[j];
  os << ")";
  return os.str();
}

double gaussian_mass_1d(double gamma) {
  return std::pow(2.0, 2.0 * gamma + 0.5) * std::tgamma(gamma + 0.5);
}

DerivedConstants compute_constants(const ReflectionSetup& setup) {
  DerivedConstants c;
  const int n = setup.dimension();
  c.c_k = 1.0;
  for (int j = 0; j < n; ++j) {
    const double g = setup.multiplicity(j);
    c.gamma_k += g;
    c.c_k *= gaussian_mass_1d(g);
    c.weight_exponents.push_back(2.0 * g);
  }
  c.p_k = 2.0 * c.gamma_k + n + 1.0;
  c.d_k = std::pow(2.0, 0.5 * (c.p_k - 1.0)) * std::tgamma(0.5 * c.p_k) / std::sqrt(std::numbers::pi);
  return c;
}

double gaussian_mass_by_quadrature(const ReflectionSetup& setup, int points) {
  // integral_R exp(-x^2/2) 2^g |x|^{2g} dx = 2^{g+1} integral_0^inf: split [0, 40] into a
  // power-weighted panel near the origin and Legendre panels beyond.
  double total = 1.0;
  for (int j = 0; j < setup.dimension(); ++j) {
    const double g = setup.multiplicity(j);
    double acc = 0.0;
    const Rule head = gauss_power_weight(points, 2.0 * g, 1.0);
    for (std::size_t i = 0; i < head.size(); ++i)
      acc += head.weights[i] * std::exp(-0.5 * head.nodes[i] * head.nodes[i]);
    for (int panel = 1; panel < 40; ++panel) {
      const Rule r = gauss_legendre_on(points / 2 + 8, panel, panel + 1.0);
      for (std::size_t i = 0; i < r.size(); ++i) {
        const double x = r.nodes[i];
        acc += r.weights[i] * std::exp(-0.5 * x * x) * std::pow(x, 2.0 * g);
      }
    }
    total *= 2.0 * std::pow(2.0, g) * acc;
  }
  return total;
}

double weight_density(const ReflectionSetup& setup, std::span<const double> x) {
  double w = 1.0;
  const auto& roots = setup.positive_roots();
  for (std::size_t r = 0; r < roots.size(); ++r) {
    const double k = setup.root_multiplicity(static_cast<int>(r));
    if (k == 0.0) continue;
    w *= std::pow(std::abs(dot(roots[r], x)), 2.0 * k);
  }
  return w;
}

double orbit_distance(const ReflectionSetup& setup, std::span<const double> x,
                      std::span<const double> y) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& g : setup.group_elements()) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double d = g.signs[i] * x[i] - y[i];
      s += d * d;
    }
    best = std::min(best, s);
  }
  return std::sqrt(best);
}

double orbit_distance_max(const ReflectionSetup& setup, std::span<const double> x,
                          std::span<const double> y) {
  double best = 0.0;
  for (const auto& g : setup.group_elements()) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double d = g.signs[i] * x[i] - y[i];
      s += d * d;
    }
    best = std::max(best, s);
  }
  return std::sqrt(best);
}

double norm(std::span<const double> x) { return std::sqrt(dot(x, x)); }

double dot(std::span<const double> x, std::span<const double> y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

}  // namespace dunkl
