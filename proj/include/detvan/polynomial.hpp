#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "detvan/errors.hpp"
#include "detvan/monomial.hpp"
#include "detvan/rational.hpp"

namespace detvan {

/// Ordered list of variable names shared by a family of polynomials.
class Ring {
 public:
  explicit Ring(std::vector<std::string> names) : names_(std::move(names)) {
    std::unordered_set<std::string> seen;
    for (const auto& n : names_) {
      if (n.empty()) throw StructuralError("empty variable name");
      if (!seen.insert(n).second) throw StructuralError("duplicate variable name '" + n + "'");
    }
    if (names_.size() > 63) throw StructuralError("at most 63 variables are supported");
  }

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<std::size_t> index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    return std::nullopt;
  }

  std::size_t require(std::string_view name) const {
    auto i = index_of(name);
    if (!i) throw StructuralError("unknown variable '" + std::string(name) + "'");
    return *i;
  }

  friend bool operator==(const Ring& a, const Ring& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> names) {
  return std::make_shared<const Ring>(std::move(names));
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

struct Term {
  Monomial mono;
  Rational coeff;
};

/// Sparse polynomial over the rationals. Terms are kept in descending
/// graded reverse lexicographic order with no zero coefficients, so two
/// polynomials over the same ring are equal iff their term lists are.
class Polynomial {
 public:
  Polynomial() : ring_(empty_ring()) {}
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, const Rational& c) {
    Polynomial p(ring);
    if (c != 0) p.terms_.push_back({Monomial(p.ring_->size()), c});
    return p;
  }

  static Polynomial variable(RingPtr ring, std::size_t index) {
    Polynomial p(ring);
    p.terms_.push_back({Monomial::variable(p.ring_->size(), index), Rational(1)});
    return p;
  }

  static Polynomial variable(RingPtr ring, std::string_view name) {
    const auto i = ring->require(name);
    return variable(std::move(ring), i);
  }

  static Polynomial monomial(RingPtr ring, Monomial m, const Rational& c = Rational(1)) {
    Polynomial p(ring);
    if (c != 0) p.terms_.push_back({std::move(m), c});
    return p;
  }

  /// Combines duplicate monomials, drops zeros, sorts canonically.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
      return degrevlex_compare(a.mono, b.mono) > 0;
    });
    for (auto& t : terms) {
      if (t.mono.size() != p.ring_->size())
        throw StructuralError("monomial length does not match ring");
      if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
        p.terms_.back().coeff += t.coeff;
        if (p.terms_.back().coeff == 0) p.terms_.pop_back();
      } else if (t.coeff != 0) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  const RingPtr& ring() const { return ring_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  Rational constant_term() const {
    if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
    return Rational(0);
  }

  Rational coefficient(const Monomial& m) const {
    for (const auto& t : terms_)
      if (t.mono == m) return t.coeff;
    return Rational(0);
  }

  /// Total degree; 0 for the zero polynomial.
  std::uint64_t total_degree() const { return terms_.empty() ? 0 : terms_.front().mono.degree(); }

  std::uint32_t degree_in(std::size_t var) const {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono[var]);
    return d;
  }

  /// Lowest total degree of a term (order of vanishing at the origin).
  std::uint64_t order() const {
    std::uint64_t d = terms_.empty() ? 0 : terms_.front().mono.degree();
    for (const auto& t : terms_) d = std::min(d, t.mono.degree());
    return d;
  }

  bool involves(std::size_t var) const {
    for (const auto& t : terms_)
      if (t.mono[var] != 0) return true;
    return false;
  }

  std::vector<std::size_t> variables_used() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < ring_->size(); ++i)
      if (involves(i)) out.push_back(i);
    return out;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, true); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_same(a, b);
    std::vector<Term> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) out.push_back({s.mono * t.mono, s.coeff * t.coeff});
    return from_terms(a.ring_, std::move(out));
  }

  friend Polynomial operator*(const Rational& c, const Polynomial& p) {
    if (c == 0) return Polynomial(p.ring_);
    Polynomial r = p;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!same_ring(a.ring_, b.ring_)) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff)
        return false;
    return true;
  }

  /// Scales so the leading coefficient is 1 (zero stays zero).
  Polynomial monic() const {
    if (terms_.empty()) return *this;
    return Rational(1) / terms_.front().coeff * *this;
  }

  /// Canonical text form: descending term order, `^` for powers, `*` between
  /// factors. Integer-coefficient output is accepted verbatim by parse_poly.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
      Rational c = t.coeff;
      if (c < 0) {
        out += "-";
        c = -c;
      } else if (!first) {
        out += "+";
      }
      first = false;
      std::string mono = render_monomial(t.mono);
      if (mono.empty()) {
        out += detvan::to_string(c);
      } else if (c == 1) {
        out += mono;
      } else {
        out += detvan::to_string(c) + "*" + mono;
      }
    }
    return out;
  }

  static const RingPtr& empty_ring() {
    static const RingPtr r = make_ring({});
    return r;
  }

 private:
  friend void check_same(const Polynomial& a, const Polynomial& b) {
    if (!same_ring(a.ring_, b.ring_)) throw StructuralError("variable-list mismatch");
  }

  static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
    check_same(a, b);
    Polynomial r(a.ring_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      int cmp;
      if (i == a.terms_.size()) cmp = -1;
      else if (j == b.terms_.size()) cmp = 1;
      else cmp = degrevlex_compare(a.terms_[i].mono, b.terms_[j].mono);
      if (cmp > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (cmp < 0) {
        Term t = b.terms_[j++];
        if (subtract) t.coeff = -t.coeff;
        r.terms_.push_back(std::move(t));
      } else {
        Rational c = a.terms_[i].coeff;
        if (subtract) c -= b.terms_[j].coeff;
        else c += b.terms_[j].coeff;
        if (c != 0) r.terms_.push_back({a.terms_[i].mono, c});
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::string render_monomial(const Monomial& m) const {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += ring_->name(i);
      if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s;
  }

  RingPtr ring_;
  std::vector<Term> terms_;
};

enum class ArithOp { add, sub, mul };

inline Polynomial arith(const Polynomial& p, const Polynomial& q, ArithOp op) {
  switch (op) {
    case ArithOp::add: return p + q;
    case ArithOp::sub: return p - q;
    case ArithOp::mul: return p * q;
  }
  return p;
}

inline Polynomial pow(const Polynomial& p, unsigned n) {
  Polynomial result = Polynomial::constant(p.ring(), Rational(1));
  Polynomial base = p;
  while (n) {
    if (n & 1u) result *= base;
    n >>= 1u;
    if (n) base *= base;
  }
  return result;
}

inline Polynomial differentiate(const Polynomial& p, std::size_t var) {
  if (var >= p.ring()->size()) throw StructuralError("variable index out of range");
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    if (t.mono[var] == 0) continue;
    Monomial m = t.mono;
    m.set(var, t.mono[var] - 1);
    out.push_back({std::move(m), t.coeff * t.mono[var]});
  }
  return Polynomial::from_terms(p.ring(), std::move(out));
}

inline Polynomial differentiate(const Polynomial& p, std::string_view var) {
  return differentiate(p, p.ring()->require(var));
}

/// Re-expresses p over `target`, matching variables by name. Every variable
/// that occurs in p must exist in the target ring.
inline Polynomial change_ring(const Polynomial& p, const RingPtr& target) {
  if (same_ring(p.ring(), target)) return Polynomial::from_terms(target, {p.terms().begin(), p.terms().end()});
  std::vector<std::optional<std::size_t>> map(p.ring()->size());
  for (std::size_t i = 0; i < p.ring()->size(); ++i) map[i] = target->index_of(p.ring()->name(i));
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    Monomial m(target->size());
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!map[i])
        throw StructuralError("variable '" + p.ring()->name(i) + "' missing from target ring");
      m.set(*map[i], t.mono[i]);
    }
    out.push_back({std::move(m), t.coeff});
  }
  return Polynomial::from_terms(target, std::move(out));
}

/// Replaces bound variables by polynomials. All bound images share one ring,
/// which becomes the result ring; unbound variables of p are carried over by
/// name and must exist there.
inline Polynomial substitute(const Polynomial& p, const std::map<std::string, Polynomial>& bindings) {
  if (bindings.empty()) return p;
  const RingPtr target = bindings.begin()->second.ring();
  for (const auto& [name, image] : bindings) {
    if (!p.ring()->index_of(name))
      throw StructuralError("binding for unknown variable '" + name + "'");
    if (!same_ring(image.ring(), target))
      throw StructuralError("bindings for '" + name + "' live over a different variable list");
  }
  const std::size_t n = p.ring()->size();
  std::vector<Polynomial> images(n, Polynomial(target));
  std::vector<bool> ready(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& name = p.ring()->name(i);
    if (auto it = bindings.find(name); it != bindings.end()) {
      images[i] = it->second;
      ready[i] = true;
    }
  }
  std::vector<std::map<std::uint32_t, Polynomial>> powers(n);
  auto power_of = [&](std::size_t i, std::uint32_t e) -> const Polynomial& {
    auto it = powers[i].find(e);
    if (it != powers[i].end()) return it->second;
    if (!ready[i]) {
      auto idx = target->index_of(p.ring()->name(i));
      if (!idx)
        throw StructuralError("unbound variable '" + p.ring()->name(i) +
                              "' does not exist in the binding ring");
      images[i] = Polynomial::variable(target, *idx);
      ready[i] = true;
    }
    return powers[i].emplace(e, pow(images[i], e)).first->second;
  };
  Polynomial result(target);
  for (const auto& t : p.terms()) {
    Polynomial term = Polynomial::constant(target, t.coeff);
    for (std::size_t i = 0; i < n; ++i)
      if (t.mono[i] != 0) term *= power_of(i, t.mono[i]);
    result += term;
  }
  return result;
}

/// Substitutes constants for some variables, keeping the ring.
inline Polynomial specialize(const Polynomial& p, const std::map<std::string, Rational>& values) {
  std::map<std::string, Polynomial> bindings;
  for (const auto& [name, v] : values) bindings.emplace(name, Polynomial::constant(p.ring(), v));
  return substitute(p, bindings);
}

inline Rational evaluate_rational(const Polynomial& p, const std::map<std::string, Rational>& point) {
  const std::size_t n = p.ring()->size();
  std::vector<std::optional<Rational>> values(n);
  for (const auto& [name, v] : point) {
    auto i = p.ring()->index_of(name);
    if (!i) throw StructuralError("point binds unknown variable '" + name + "'");
    values[*i] = v;
  }
  Rational sum = 0;
  for (const auto& t : p.terms()) {
    Rational term = t.coeff;
    for (std::size_t i = 0; i < n; ++i) {
      if (t.mono[i] == 0) continue;
      if (!values[i]) throw StructuralError("unbound variable '" + p.ring()->name(i) + "'");
      Rational pw;
      mpq_class base = *values[i];
      mpz_pow_ui(pw.get_num_mpz_t(), base.get_num_mpz_t(), t.mono[i]);
      mpz_pow_ui(pw.get_den_mpz_t(), base.get_den_mpz_t(), t.mono[i]);
      term *= pw;
    }
    sum += term;
  }
  return sum;
}

/// Translation x_var -> x_var + shift, used to move a point to the origin.
inline Polynomial translate(const Polynomial& p, std::size_t var, const Rational& shift) {
  if (shift == 0) return p;
  std::map<std::string, Polynomial> b;
  b.emplace(p.ring()->name(var),
            Polynomial::variable(p.ring(), var) + Polynomial::constant(p.ring(), shift));
  return substitute(p, b);
}

}  // namespace detvan
