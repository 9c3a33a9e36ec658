#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "detvan/errors.hpp"
#include "detvan/polynomial.hpp"

namespace detvan {

/// Dense univariate polynomial, coefficients from degree 0 upward, never
/// carrying trailing zeros.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  static UPoly constant(const Rational& v) { return UPoly(std::vector<Rational>{v}); }
  static UPoly x() { return UPoly(std::vector<Rational>{Rational(0), Rational(1)}); }

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for zero.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const Rational& lead() const { return c_.back(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

  UPoly monic() const {
    if (is_zero()) return *this;
    UPoly r = *this;
    const Rational inv = Rational(1) / lead();
    for (auto& v : r.c_) v *= inv;
    return r;
  }

  UPoly derivative() const {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<unsigned long>(i));
    return UPoly(std::move(d));
  }

  Rational operator()(const Rational& at) const {
    Rational acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * at + c_[i];
    return acc;
  }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
    return UPoly(std::move(r));
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
    return UPoly(std::move(r));
  }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(r));
  }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  /// Euclidean division; throws DomainError on a zero divisor.
  friend std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw DomainError("division by the zero polynomial");
    if (a.degree() < b.degree()) return {UPoly(), a};
    std::vector<Rational> rem = a.c_;
    std::vector<Rational> quot(a.c_.size() - b.c_.size() + 1);
    const Rational inv = Rational(1) / b.lead();
    for (std::size_t k = quot.size(); k-- > 0;) {
      const Rational q = rem[k + b.c_.size() - 1] * inv;
      quot[k] = q;
      if (q == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) rem[k + j] -= q * b.c_[j];
    }
    return {UPoly(std::move(quot)), UPoly(std::move(rem))};
  }

  friend UPoly operator/(const UPoly& a, const UPoly& b) { return divmod(a, b).first; }
  friend UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

/// Monic gcd; gcd(0, 0) is a domain error.
inline UPoly gcd(UPoly a, UPoly b) {
  if (a.is_zero() && b.is_zero()) throw DomainError("gcd of two zero polynomials");
  while (!b.is_zero()) {
    UPoly r = a % b;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

struct SquarefreeFactor {
  UPoly factor;  // monic, squarefree
  unsigned multiplicity;
};

/// Yun's algorithm: f = lead(f) * prod factor_i^multiplicity_i with pairwise
/// coprime squarefree monic factors, listed by increasing multiplicity.
inline std::vector<SquarefreeFactor> squarefree_decompose(const UPoly& f) {
  if (f.is_zero()) throw DomainError("squarefree decomposition of the zero polynomial");
  std::vector<SquarefreeFactor> out;
  if (f.degree() == 0) return out;
  const UPoly g = f.monic();
  const UPoly dg = g.derivative();
  const UPoly a0 = gcd(g, dg);
  UPoly b = g / a0;
  UPoly c = dg / a0;
  UPoly d = c - b.derivative();
  for (unsigned i = 1; b.degree() > 0; ++i) {
    UPoly a = gcd(b, d);
    b = b / a;
    c = d / a;
    d = c - b.derivative();
    if (a.degree() > 0) out.push_back({a.monic(), i});
  }
  return out;
}

/// Distinct rational roots via the rational root test on the integer
/// primitive part. Only intended for small coefficients.
inline std::vector<Rational> rational_roots(const UPoly& f) {
  std::vector<Rational> roots;
  if (f.degree() <= 0) return roots;
  Integer lcm_den = 1;
  for (const auto& v : f.coeffs()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), v.get_den_mpz_t());
  std::vector<Integer> ic;
  for (const auto& v : f.coeffs()) ic.emplace_back(Rational(v * lcm_den).get_num());
  std::size_t low = 0;
  while (ic[low] == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  auto divisors = [](Integer n) {
    std::vector<Integer> ds;
    n = abs(n);
    if (n > 1000000) throw DomainError("rational root search: coefficient too large");
    for (Integer d = 1; d * d <= n; ++d) {
      if (n % d == 0) {
        ds.push_back(d);
        if (d * d != n) ds.push_back(n / d);
      }
    }
    return ds;
  };
  const auto ps = divisors(ic[low]);
  const auto qs = divisors(ic.back());
  for (const auto& p : ps) {
    for (const auto& q : qs) {
      for (int sign : {1, -1}) {
        Rational r(p * sign, q);
        r.canonicalize();
        if (f(r) == 0 && std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

/// Index of the single variable p depends on; nullopt for constants. Throws
/// DomainError when more than one variable occurs.
inline std::optional<std::size_t> univariate_variable(const Polynomial& p) {
  auto used = p.variables_used();
  if (used.size() > 1) throw DomainError("polynomial is not univariate: " + p.to_string());
  if (used.empty()) return std::nullopt;
  return used.front();
}

inline UPoly to_upoly(const Polynomial& p, std::size_t var) {
  std::vector<Rational> c(p.degree_in(var) + 1);
  for (const auto& t : p.terms()) {
    if (t.mono.degree() != t.mono[var]) throw DomainError("polynomial is not univariate in the given variable");
    c[t.mono[var]] += t.coeff;
  }
  return UPoly(std::move(c));
}

inline Polynomial from_upoly(const UPoly& u, const RingPtr& ring, std::size_t var) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < u.coeffs().size(); ++i)
    if (u.coeffs()[i] != 0)
      terms.push_back({Monomial::variable(ring->size(), var, static_cast<std::uint32_t>(i)), u.coeffs()[i]});
  return Polynomial::from_terms(ring, std::move(terms));
}

/// Monic gcd of two polynomials in (at most) one common variable.
inline Polynomial gcd_uni(const Polynomial& p, const Polynomial& q) {
  check_same(p, q);
  auto vp = univariate_variable(p);
  auto vq = univariate_variable(q);
  if (vp && vq && *vp != *vq) throw DomainError("gcd_uni: polynomials in different variables");
  const std::size_t var = vp ? *vp : (vq ? *vq : 0);
  if (p.is_zero() && q.is_zero()) throw DomainError("gcd of two zero polynomials");
  if (p.ring()->size() == 0) return Polynomial::constant(p.ring(), Rational(1));
  return from_upoly(gcd(to_upoly(p, var), to_upoly(q, var)), p.ring(), var);
}

struct PolySquarefreeFactor {
  Polynomial factor;
  unsigned multiplicity;
};

inline std::vector<PolySquarefreeFactor> squarefree_decompose(const Polynomial& p) {
  if (p.is_zero()) throw DomainError("squarefree decomposition of the zero polynomial");
  auto v = univariate_variable(p);
  std::vector<PolySquarefreeFactor> out;
  if (!v) return out;
  for (auto& f : squarefree_decompose(to_upoly(p, *v)))
    out.push_back({from_upoly(f.factor, p.ring(), *v), f.multiplicity});
  return out;
}

}  // namespace detvan
