#include "dunkl/polycalc.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace dunkl {

Rational exact_rational(double value) {
  if (!std::isfinite(value)) throw DomainError("exact_rational: non-finite value");
  if (value == 0.0) return Rational(0);
  int exp = 0;
  const double mant = std::frexp(value, &exp);  // value = mant * 2^exp, |mant| in [0.5, 1)
  const auto scaled = static_cast<long long>(std::ldexp(mant, 53));
  Rational r(scaled);
  exp -= 53;
  if (exp > 0) {
    r *= Rational(boost::multiprecision::cpp_int(1) << exp);
  } else if (exp < 0) {
    r /= Rational(boost::multiprecision::cpp_int(1) << -exp);
  }
  return r;
}

Poly Poly::monomial(int variables, Exponent exponent, Rational coefficient) {
  Poly p(variables);
  p.add_term(exponent, coefficient);
  return p;
}

Poly Poly::constant(int variables, Rational value) {
  return monomial(variables, Exponent(variables, 0), std::move(value));
}

Poly Poly::random(int variables, int max_degree, std::uint64_t seed, int max_terms) {
  std::mt19937_64 rng(seed);
  Poly p(variables);
  const int terms = 1 + static_cast<int>(rng() % max_terms);
  for (int t = 0; t < terms; ++t) {
    Exponent e(variables, 0);
    int budget = static_cast<int>(rng() % (max_degree + 1));
    for (int v = 0; v < variables && budget > 0; ++v) {
      const int take = v + 1 == variables ? budget : static_cast<int>(rng() % (budget + 1));
      e[v] = take;
      budget -= take;
    }
    const long num = static_cast<long>(rng() % 19) - 9;
    const long den = 1 + static_cast<long>(rng() % 4);
    p.add_term(e, Rational(num, den));
  }
  return p;
}

int Poly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int v : e) s += v;
    d = std::max(d, s);
  }
  return d;
}

bool Poly::is_homogeneous() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int v : e) s += v;
    if (d >= 0 && s != d) return false;
    d = s;
  }
  return true;
}

Rational Poly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Exponent& e, const Rational& c) {
  if (static_cast<int>(e.size()) != vars_) throw DomainError("Poly: exponent arity mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

Poly Poly::operator*(const Rational& s) const {
  Poly r(vars_);
  if (s == 0) return r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * s);
  return r;
}

Poly Poly::derivative(int j) const {
  Poly r(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[j] == 0) continue;
    Exponent f = e;
    f[j] -= 1;
    r.add_term(f, c * e[j]);
  }
  return r;
}

Poly Poly::flip(int j) const {
  Poly r(vars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, e[j] % 2 ? Rational(-c) : c);
  return r;
}

Poly Poly::divide_by_variable(int j) const {
  Poly r(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[j] == 0) throw DomainError("Poly: not divisible by x_" + std::to_string(j + 1));
    Exponent f = e;
    f[j] -= 1;
    r.terms_.emplace(f, c);
  }
  return r;
}

double Poly::evaluate(std::span<const double> x) const {
  double s = 0.0;
  for (const auto& [e, c] : terms_) {
    double m = static_cast<double>(c);
    for (int v = 0; v < vars_; ++v)
      if (e[v]) m *= std::pow(x[v], e[v]);
    s += m;
  }
  return s;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    os << (first ? "" : " + ") << "(" << c << ")";
    for (int v = 0; v < vars_; ++v)
      if (e[v]) os << "*x" << v + 1 << (e[v] > 1 ? "^" + std::to_string(e[v]) : "");
    first = false;
  }
  return os.str();
}

Poly dunkl_apply(const ReflectionSetup& setup, std::span<const Rational> xi, const Poly& f) {
  const int n = setup.dimension();
  if (static_cast<int>(xi.size()) != n || f.variables() != n)
    throw DomainError("dunkl_apply: dimension mismatch");
  Poly out(n);
  for (int j = 0; j < n; ++j) {
    if (xi[j] == 0) continue;
    out = out + dunkl_apply(setup, j, f) * xi[j];
  }
  return out;
}

Poly dunkl_apply(const ReflectionSetup& setup, int j, const Poly& f) {
  // Root alpha = sqrt(2) e_j: k <alpha, e_j> (f - f o sigma)/<alpha, x> = k (f - f o sigma)/x_j,
  // and f - f o sigma only contains odd powers of x_j, so the division is exact.
  Poly out = f.derivative(j);
  const double k = setup.multiplicity(j);
  if (k != 0.0) {
    const Poly diff = f - f.flip(j);
    out = out + diff.divide_by_variable(j) * exact_rational(k);
  }
  return out;
}

Poly dunkl_laplacian(const ReflectionSetup& setup, const Poly& f) {
  Poly out(setup.dimension());
  for (int j = 0; j < setup.dimension(); ++j) out = out + dunkl_apply(setup, j, dunkl_apply(setup, j, f));
  return out;
}

CommutativityReport run_commutativity_suite(const ReflectionSetup& setup, int trials, int max_degree,
                                            std::uint64_t seed) {
  CommutativityReport rep;
  const int n = setup.dimension();
  for (int t = 0; t < trials; ++t) {
    const Poly f = Poly::random(n, max_degree, seed + static_cast<std::uint64_t>(t) * 7919u);
    ++rep.trials;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const Poly a = dunkl_apply(setup, i, dunkl_apply(setup, j, f));
        const Poly b = dunkl_apply(setup, j, dunkl_apply(setup, i, f));
        if (!(a == b)) ++rep.failures;
      }
    }
    // Degree lowering on each homogeneous component.
    std::map<int, Poly> parts;
    for (const auto& [e, c] : f.terms()) {
      int d = 0;
      for (int v : e) d += v;
      parts.try_emplace(d, Poly(n)).first->second.add_term(e, c);
    }
    for (const auto& [d, part] : parts) {
      for (int j = 0; j < n; ++j) {
        const Poly g = dunkl_apply(setup, j, part);
        if (g.is_zero()) continue;
        if (!g.is_homogeneous() || g.degree() != d - 1) ++rep.degree_failures;
      }
    }
  }
  return rep;
}

}  // namespace dunkl
