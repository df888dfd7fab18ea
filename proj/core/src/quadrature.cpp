#include "dunkl/quadrature.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace dunkl {

double Rule::sum_weights() const {
  return std::accumulate(weights.begin(), weights.end(), 0.0);
}

namespace {

struct JacobiRecurrence {
  std::vector<double> alpha;  // diagonal
  std::vector<double> beta;   // beta[k] for k >= 1, off-diagonal is sqrt(beta[k])
  double mu0 = 0.0;
};

JacobiRecurrence jacobi_recurrence(int n, double a, double b) {
  JacobiRecurrence r;
  r.alpha.resize(n);
  r.beta.assign(n + 1, 0.0);
  for (int k = 0; k < n; ++k) {
    if (k == 0) {
      r.alpha[k] = (b - a) / (a + b + 2.0);
    } else {
      const double s = 2.0 * k + a + b;
      r.alpha[k] = (b * b - a * a) / (s * (s + 2.0));
    }
  }
  for (int k = 1; k <= n; ++k) {
    if (k == 1) {
      const double s = 2.0 + a + b;
      r.beta[k] = 4.0 * (1.0 + a) * (1.0 + b) / (s * s * (s + 1.0));
    } else {
      const double s = 2.0 * k + a + b;
      r.beta[k] = 4.0 * k * (k + a) * (k + b) * (k + a + b) / (s * s * (s + 1.0) * (s - 1.0));
    }
  }
  r.mu0 = std::exp((a + b + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) + std::lgamma(b + 1.0) -
                   std::lgamma(a + b + 2.0));
  return r;
}

// Orthonormal polynomials p_0..p_{n} at t; returns p_n, p_n' and sum_{k<n} p_k^2.
struct OrthoEval {
  double pn = 0.0;
  double dpn = 0.0;
  double christoffel = 0.0;
};

OrthoEval ortho_eval(const JacobiRecurrence& r, int n, double t) {
  double pm1 = 0.0, dpm1 = 0.0;
  double p = 1.0 / std::sqrt(r.mu0), dp = 0.0;
  double sum = 0.0;
  for (int k = 0; k < n; ++k) {
    sum += p * p;
    const double sb_next = std::sqrt(r.beta[k + 1]);
    const double sb = std::sqrt(r.beta[k]);
    const double pn = ((t - r.alpha[k]) * p - sb * pm1) / sb_next;
    const double dpn = (p + (t - r.alpha[k]) * dp - sb * dpm1) / sb_next;
    pm1 = p;
    dpm1 = dp;
    p = pn;
    dp = dpn;
  }
  return {p, dp, sum};
}

Rule compute_gauss_jacobi(int n, double a, double b) {
  const JacobiRecurrence rec = jacobi_recurrence(n, a, b);
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(std::max(n - 1, 0));
  for (int k = 0; k < n; ++k) diag[k] = rec.alpha[k];
  for (int k = 1; k < n; ++k) sub[k - 1] = std::sqrt(rec.beta[k]);

  Rule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  if (n == 1) {
    rule.nodes[0] = diag[0];
    rule.weights[0] = rec.mu0;
    return rule;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("gauss_jacobi: eigen solver failed");
  for (int i = 0; i < n; ++i) {
    double t = solver.eigenvalues()[i];
    for (int it = 0; it < 3; ++it) {
      const OrthoEval e = ortho_eval(rec, n, t);
      if (e.dpn == 0.0) break;
      const double step = e.pn / e.dpn;
      const double next = t - step;
      if (!(next > -1.0 && next < 1.0)) break;
      t = next;
      if (std::abs(step) < 1e-17) break;
    }
    rule.nodes[i] = t;
    rule.weights[i] = 1.0 / ortho_eval(rec, n, t).christoffel;
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return rule.nodes[i] < rule.nodes[j]; });
  Rule sorted;
  for (auto i : order) {
    sorted.nodes.push_back(rule.nodes[i]);
    sorted.weights.push_back(rule.weights[i]);
  }
  // Christoffel weights lose a few ulps near a singular endpoint; pin the zeroth moment.
  const double total = std::accumulate(sorted.weights.begin(), sorted.weights.end(), 0.0);
  for (double& w : sorted.weights) w *= rec.mu0 / total;
  return sorted;
}

}  // namespace

const Rule& gauss_jacobi(int n, double a, double b) {
  if (n < 1) throw std::invalid_argument("gauss_jacobi: need at least one node");
  if (!(a > -1.0) || !(b > -1.0)) throw std::invalid_argument("gauss_jacobi: exponents must exceed -1");
  static std::mutex mutex;
  static std::map<std::tuple<int, double, double>, Rule> cache;
  std::lock_guard lock(mutex);
  auto key = std::make_tuple(n, a, b);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  return cache.emplace(key, compute_gauss_jacobi(n, a, b)).first->second;
}

Rule gauss_legendre_on(int n, double lo, double hi) {
  const Rule& ref = gauss_legendre(n);
  Rule out;
  out.nodes.resize(n);
  out.weights.resize(n);
  const double half = 0.5 * (hi - lo), mid = 0.5 * (hi + lo);
  for (int i = 0; i < n; ++i) {
    out.nodes[i] = mid + half * ref.nodes[i];
    out.weights[i] = half * ref.weights[i];
  }
  return out;
}

Rule gauss_power_weight(int n, double exponent, double radius) {
  const Rule& ref = gauss_jacobi(n, 0.0, exponent);
  const double scale = std::pow(0.5 * radius, exponent + 1.0);
  Rule out;
  out.nodes.resize(n);
  out.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    out.nodes[i] = 0.5 * radius * (1.0 + ref.nodes[i]);
    out.weights[i] = scale * ref.weights[i];
  }
  return out;
}

std::vector<double> barycentric_weights(std::span<const double> nodes) {
  const std::size_t n = nodes.size();
  std::vector<double> logw(n, 0.0);
  std::vector<int> sign(n, 1);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      if (k == j) continue;
      const double d = nodes[j] - nodes[k];
      logw[j] -= std::log(std::abs(d));
      if (d < 0) sign[j] = -sign[j];
    }
  }
  const double top = *std::max_element(logw.begin(), logw.end());
  std::vector<double> w(n);
  for (std::size_t j = 0; j < n; ++j) w[j] = sign[j] * std::exp(logw[j] - top);
  return w;
}

std::vector<double> differentiation_matrix(std::span<const double> nodes) {
  const std::size_t n = nodes.size();
  const std::vector<double> w = barycentric_weights(nodes);
  std::vector<double> d(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double diag = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const double v = (w[j] / w[i]) / (nodes[i] - nodes[j]);
      d[i * n + j] = v;
      diag -= v;
    }
    d[i * n + i] = diag;
  }
  return d;
}

double barycentric_eval(std::span<const double> nodes, std::span<const double> bary,
                        std::span<const double> values, double x) {
  double num = 0.0, den = 0.0;
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    const double diff = x - nodes[j];
    if (diff == 0.0) return values[j];
    const double t = bary[j] / diff;
    num += t * values[j];
    den += t;
  }
  return num / den;
}

}  // namespace dunkl
