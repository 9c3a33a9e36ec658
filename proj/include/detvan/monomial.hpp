#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <vector>

namespace detvan {

/// Dense exponent vector, one slot per ring variable. The total degree is
/// cached because every order comparison starts with it.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
    degree_ = std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
  }

  static Monomial variable(std::size_t nvars, std::size_t index, std::uint32_t power = 1) {
    Monomial m(nvars);
    m.exps_[index] = power;
    m.degree_ = power;
    return m;
  }

  std::size_t size() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return exps_; }
  std::uint64_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  void set(std::size_t i, std::uint32_t e) {
    degree_ = degree_ - exps_[i] + e;
    exps_[i] = e;
  }

  bool divides(const Monomial& other) const {
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  bool coprime(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] != 0 && other.exps_[i] != 0) return false;
    return true;
  }

  /// Support: the set of variables with a positive exponent, as a bit mask.
  std::uint64_t support_mask() const {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] != 0) mask |= std::uint64_t{1} << i;
    return mask;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.exps_[i] = a.exps_[i] + b.exps_[i];
    r.degree_ = a.degree_ + b.degree_;
    return r;
  }

  /// a / b, assuming b divides a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.exps_[i] = a.exps_[i] - b.exps_[i];
    r.degree_ = a.degree_ - b.degree_;
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
      d += r.exps_[i];
    }
    r.degree_ = d;
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

  /// Lexicographic on exponent vectors; only used for associative containers.
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.exps_ < b.exps_; }

 private:
  std::vector<std::uint32_t> exps_;
  std::uint64_t degree_ = 0;
};

/// Reverse-lexicographic tie break shared by the graded orders: the monomial
/// with the smaller exponent in the last differing variable is larger.
inline int revlex_compare(const Monomial& a, const Monomial& b) {
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

/// +1 if a > b, -1 if a < b, 0 if equal, in graded reverse lexicographic order.
inline int degrevlex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  return revlex_compare(a, b);
}

class MonomialOrder {
 public:
  enum class Kind {
    degrevlex,     // global graded reverse lex
    negdegrevlex,  // local: lower degree is larger, revlex tie break
    elimination,   // global: degree in the first `block` variables, then degrevlex
  };

  static MonomialOrder degrevlex() { return MonomialOrder(Kind::degrevlex, 0); }
  static MonomialOrder negdegrevlex() { return MonomialOrder(Kind::negdegrevlex, 0); }
  static MonomialOrder elimination(std::size_t block) {
    return MonomialOrder(Kind::elimination, block);
  }

  Kind kind() const { return kind_; }
  std::size_t block() const { return block_; }
  bool is_global() const { return kind_ != Kind::negdegrevlex; }

  int compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
      case Kind::degrevlex:
        return degrevlex_compare(a, b);
      case Kind::negdegrevlex:
        if (a.degree() != b.degree()) return a.degree() < b.degree() ? 1 : -1;
        return revlex_compare(a, b);
      case Kind::elimination: {
        std::uint64_t da = 0, db = 0;
        for (std::size_t i = 0; i < block_; ++i) {
          da += a[i];
          db += b[i];
        }
        if (da != db) return da > db ? 1 : -1;
        return degrevlex_compare(a, b);
      }
    }
    return 0;
  }

  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

 private:
  MonomialOrder(Kind k, std::size_t block) : kind_(k), block_(block) {}
  Kind kind_;
  std::size_t block_;
};

}  // namespace detvan
