#include "dunkl/kernel.hpp"

#include "dunkl/quadrature.hpp"

#include <boost/math/special_functions/bessel.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>
#include <tuple>

namespace dunkl {

namespace {

constexpr int kMaxTerms = 500;
constexpr double kSeriesRadius = 8.0;

[[noreturn]] void nonconvergence(double gamma, cplx z) {
  std::ostringstream os;
  os << "rank1_kernel: series did not converge for gamma=" << gamma << " z=" << z;
  throw DomainError(os.str());
}

// sum_n t_n with t_n = t_{n-1} * ratio(n), t_0 = exp(-shift); stops once past
// the peak and the term is below 1e-16 of the running sum. The shift keeps
// the terms finite for large arguments; callers multiply by exp(shift).
template <class Ratio>
cplx positive_series(double gamma, cplx z, double peak, double shift, Ratio&& ratio) {
  cplx term = std::exp(-shift), sum = term;
  const int cap = kMaxTerms + static_cast<int>(2.0 * peak);
  for (int n = 1; n <= cap; ++n) {
    term *= ratio(n);
    sum += term;
    if (n > peak && std::abs(term) < 1e-16 * std::max(std::abs(sum), 1e-300)) return sum;
    if (term == 0.0) return sum;
  }
  nonconvergence(gamma, z);
}

// Offset for positive_series: the largest term is about exp(peak).
double series_shift(double peak) { return std::min(std::max(peak - 30.0, 0.0), 650.0); }

// Normalised Bessel function j_nu(x) = Gamma(nu+1) (2/x)^nu J_nu(x), x > 0.
double normalized_bessel(double nu, double x) {
  return std::exp(std::lgamma(nu + 1.0) + nu * std::log(2.0 / x)) * boost::math::cyl_bessel_j(nu, x);
}

}  // namespace

cplx rank1_kernel_series(double gamma, cplx z) {
  const double shift = z.real() > 0.0 ? series_shift(z.real()) : 0.0;
  const cplx s = positive_series(gamma, z, std::abs(z), shift, [&](int n) {
    return z / (n + ((n & 1) ? 2.0 * gamma : 0.0));
  });
  return shift == 0.0 ? s : std::exp(shift) * s;
}

cplx rank1_kernel(double gamma, cplx z) {
  if (gamma == 0.0) return std::exp(z);
  const double mag = std::abs(z);
  if (mag <= kSeriesRadius) return rank1_kernel_series(gamma, z);
  if (std::abs(z.real()) <= 1e-14 * mag) {
    const double theta = z.imag();
    const double a = std::abs(theta);
    const double even = normalized_bessel(gamma - 0.5, a);
    const double odd = theta / (2.0 * gamma + 1.0) * normalized_bessel(gamma + 0.5, a);
    return {even, odd};
  }
  if (z.real() >= 0.0) return rank1_kernel_series(gamma, z);
  // Kummer: E(z) = exp(z) 1F1(gamma; 2 gamma + 1; -2z), the series in -2z has Re > 0.
  const cplx w = -2.0 * z;
  const double shift = series_shift(w.real());
  const cplx m = positive_series(gamma, z, std::abs(w), shift, [&](int n) {
    return (gamma + n - 1.0) / (2.0 * gamma + n) * w / static_cast<double>(n);
  });
  return std::exp(z + shift) * m;
}

cplx dunkl_kernel(const ReflectionSetup& setup, std::span<const cplx> lambda,
                  std::span<const double> x) {
  cplx e = 1.0;
  for (int j = 0; j < setup.dimension(); ++j) e *= rank1_kernel(setup.multiplicity(j), lambda[j] * x[j]);
  return e;
}

cplx dunkl_kernel_imag(const ReflectionSetup& setup, std::span<const double> y,
                       std::span<const double> xi) {
  cplx e = 1.0;
  for (int j = 0; j < setup.dimension(); ++j)
    e *= rank1_kernel(setup.multiplicity(j), cplx(0.0, y[j] * xi[j]));
  return e;
}

namespace {

double beta_normalizer(double gamma) {
  return std::exp(std::lgamma(gamma + 0.5) - std::lgamma(gamma)) / std::sqrt(std::numbers::pi);
}

// Panel [lo, hi] of the measure c (1-t)^{g-1} (1+t)^g dt. Endpoint
// singularities at +-1 are absorbed into a Jacobi rule.
void append_panel(double gamma, int n, double lo, double hi, double c, BetaRule& out) {
  const bool right = hi == 1.0;
  const bool left = lo == -1.0;
  const double a = right ? gamma - 1.0 : 0.0;
  const double b = left ? gamma : 0.0;
  const Rule& ref = gauss_jacobi(n, a, b);
  const double half = 0.5 * (hi - lo);
  const double scale = std::pow(half, a + b + 1.0);
  for (std::size_t i = 0; i < ref.size(); ++i) {
    const double s = ref.nodes[i];
    const double t = lo + half * (1.0 + s);
    double w = c * ref.weights[i] * scale;
    if (!right) w *= std::pow(1.0 - t, gamma - 1.0);
    if (!left) w *= std::pow(1.0 + t, gamma);
    out.t.push_back(t);
    out.w.push_back(w);
  }
}

}  // namespace

namespace {

// Rules depend only on a few discrete parameters; memoised because kernel
// evaluation rebuilds the measure for every (x, y) pair.
using RuleKey = std::tuple<double, int, int, int>;

const BetaRule& cached_rule(const RuleKey& key, const std::function<BetaRule()>& build) {
  static std::mutex mutex;
  static std::map<RuleKey, std::unique_ptr<const BetaRule>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[key];
  if (!slot) slot = std::make_unique<const BetaRule>(build());
  return *slot;
}

}  // namespace

BetaRule beta_rule(double gamma, int npts) {
  if (npts < 1) throw DomainError("beta_rule: npts must be >= 1");
  if (gamma < 0.0) throw DomainError("beta_rule: negative multiplicity");
  BetaRule r;
  if (gamma == 0.0) {
    r.t = {1.0};
    r.w = {1.0};
    return r;
  }
  return cached_rule({gamma, npts, 2, 0}, [&] {
    append_panel(gamma, npts, -1.0, 1.0, beta_normalizer(gamma), r);
    return r;
  });
}

BetaRule graded_beta_rule(double gamma, int npts, int side, double scale) {
  if (gamma == 0.0 || !(scale < 0.5)) return beta_rule(gamma, npts);
  if (npts < 1) throw DomainError("graded_beta_rule: npts must be >= 1");
  const int levels = std::min(60, static_cast<int>(std::ceil(std::log2(1.0 / scale))));
  return cached_rule({gamma, npts, side, levels}, [&] {
    const double c = beta_normalizer(gamma);
    // Breakpoints measured from each graded endpoint: 1/2, 1/4, ..., 2^-levels.
    std::vector<double> cuts{-1.0, 1.0};
    if (side != 0) cuts.push_back(0.0);
    for (int m = 1; m <= levels; ++m) {
      const double d = std::ldexp(1.0, -m);
      if (side >= 0) cuts.push_back(1.0 - d);
      if (side <= 0) cuts.push_back(-1.0 + d);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    BetaRule r;
    for (std::size_t p = 0; p + 1 < cuts.size(); ++p) append_panel(gamma, npts, cuts[p], cuts[p + 1], c, r);
    return r;
  });
}

IntertwiningMeasure::IntertwiningMeasure(Point base, std::vector<BetaRule> factors)
    : base_(std::move(base)), factors_(std::move(factors)) {}

std::size_t IntertwiningMeasure::size() const {
  std::size_t s = 1;
  for (const auto& f : factors_) s *= f.t.size();
  return s;
}

double IntertwiningMeasure::total_mass() const {
  double m = 1.0;
  for (const auto& f : factors_) {
    double s = 0.0;
    for (double w : f.w) s += w;
    m *= s;
  }
  return m;
}

std::string IntertwiningMeasure::dump() const {
  std::ostringstream os;
  os.precision(17);
  for_each([&](const Point& eta, double w) {
    for (double e : eta) os << e << ' ';
    os << w << '\n';
  });
  return os.str();
}

IntertwiningMeasure intertwining_measure(const ReflectionSetup& setup, std::span<const double> x,
                                         int npts) {
  if (npts < 1) throw DomainError("intertwining_measure: npts must be >= 1");
  if (static_cast<int>(x.size()) != setup.dimension())
    throw DomainError("intertwining_measure: dimension mismatch");
  std::vector<BetaRule> factors;
  for (int j = 0; j < setup.dimension(); ++j) {
    if (x[j] == 0.0) {
      factors.push_back(BetaRule{{0.0}, {1.0}});
    } else {
      factors.push_back(beta_rule(setup.multiplicity(j), npts));
    }
  }
  return IntertwiningMeasure(Point(x.begin(), x.end()), std::move(factors));
}

}  // namespace dunkl
