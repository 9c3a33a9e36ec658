#pragma once

// Test-only reference computations. None of these call into the ideal
// engine: they work on dense or monomial-indexed linear algebra over Q.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "detvan/abelian.hpp"
#include "detvan/polynomial.hpp"

namespace oracle {

using detvan::Integer;
using detvan::Monomial;
using detvan::Polynomial;
using detvan::Rational;

/// Rank over Q by Gaussian elimination on a dense copy.
inline std::size_t dense_rank(std::vector<std::vector<Rational>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

inline std::size_t dense_rank(const detvan::IntMatrix& a) {
  std::vector<std::vector<Rational>> m(a.rows(), std::vector<Rational>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = Rational(a(i, j));
  return dense_rank(std::move(m));
}

/// Incremental row echelon form over sparse rows keyed by column index.
class SparseEchelon {
 public:
  void insert(std::map<std::size_t, Rational> row) {
    while (!row.empty()) {
      const auto [col, val] = *row.begin();
      auto it = pivots_.find(col);
      if (it == pivots_.end()) {
        const Rational inv = 1 / val;
        for (auto& [k, v] : row) v *= inv;
        pivots_.emplace(col, std::move(row));
        return;
      }
      const Rational f = val;
      for (const auto& [k, v] : it->second) {
        Rational& slot = row[k];
        slot -= f * v;
        if (slot == 0) row.erase(k);
      }
    }
  }
  std::size_t rank() const { return pivots_.size(); }

 private:
  std::map<std::size_t, std::map<std::size_t, Rational>> pivots_;
};

inline void monomials_below(std::size_t nvars, std::uint64_t bound, std::vector<Monomial>& out) {
  std::vector<std::uint32_t> e(nvars, 0);
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t v, std::uint64_t left) {
    if (v == nvars) {
      Monomial x(nvars);
      for (std::size_t i = 0; i < nvars; ++i) x.set(i, e[i]);
      out.push_back(x);
      return;
    }
    for (std::uint64_t k = 0; k < left; ++k) {
      e[v] = static_cast<std::uint32_t>(k);
      rec(v + 1, left - k);
    }
    e[v] = 0;
  };
  rec(0, bound);
}

/// dim_Q of Q[x]/(I + m^D): monomials of degree < D modulo the span of
/// all truncated products x^a * g with deg x^a < D.
inline std::size_t truncated_quotient_dim(const std::vector<Polynomial>& gens, std::uint64_t D) {
  if (gens.empty()) return 0;
  const std::size_t n = gens.front().ring()->size();
  std::vector<Monomial> cols;
  monomials_below(n, D, cols);
  std::map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < cols.size(); ++i) index.emplace(cols[i], i);
  SparseEchelon ech;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    const std::uint64_t low = g.order();
    for (const auto& a : cols) {
      if (a.degree() + low >= D) continue;
      std::map<std::size_t, Rational> row;
      for (const auto& t : g.terms()) {
        const Monomial m = a * t.mono;
        if (m.degree() >= D) continue;
        row[index.at(m)] += t.coeff;
      }
      ech.insert(std::move(row));
    }
  }
  return cols.size() - ech.rank();
}

/// Local colength at the origin. dim Q[x]/(I + m^D) is nondecreasing in D,
/// and the first D where it stops growing gives m^D inside I locally
/// (Nakayama), so that value is the colength. nullopt when no plateau shows
/// up below max_D.
inline std::optional<std::size_t> macaulay_colength(const std::vector<Polynomial>& gens, std::uint64_t max_D = 40) {
  std::size_t prev = truncated_quotient_dim(gens, 1);
  for (std::uint64_t D = 2; D <= max_D; ++D) {
    const std::size_t cur = truncated_quotient_dim(gens, D);
    if (cur == prev) return cur;
    prev = cur;
  }
  return std::nullopt;
}

/// Milnor number as the Macaulay colength of the Jacobian ideal.
inline std::optional<std::size_t> macaulay_milnor(const Polynomial& f, std::uint64_t max_D = 40) {
  std::vector<Polynomial> partials;
  for (std::size_t v = 0; v < f.ring()->size(); ++v) partials.push_back(detvan::differentiate(f, v));
  return macaulay_colength(partials, max_D);
}

/// Number of monomials outside a monomial ideal, by enumeration inside the
/// box bounded by the pure powers among the generators.
inline std::optional<std::size_t> staircase_count(const std::vector<Monomial>& gens, std::size_t nvars) {
  std::vector<std::uint32_t> box(nvars, 0);
  for (std::size_t v = 0; v < nvars; ++v) {
    for (const auto& g : gens) {
      bool pure = true;
      for (std::size_t w = 0; w < nvars; ++w)
        if (w != v && g[w] != 0) pure = false;
      if (pure && g[v] > 0 && (box[v] == 0 || g[v] < box[v])) box[v] = g[v];
    }
    if (box[v] == 0) return std::nullopt;
  }
  std::size_t count = 0;
  std::vector<std::uint32_t> e(nvars, 0);
  for (;;) {
    Monomial m(nvars);
    for (std::size_t i = 0; i < nvars; ++i) m.set(i, e[i]);
    bool inside = false;
    for (const auto& g : gens)
      if (g.divides(m)) inside = true;
    if (!inside) ++count;
    std::size_t i = 0;
    while (i < nvars && ++e[i] == box[i]) e[i++] = 0;
    if (i == nvars) break;
  }
  return count;
}

/// All partitions of n written as non-increasing parts.
inline void partitions(unsigned n, unsigned max_part, std::vector<unsigned>& cur,
                       std::vector<std::vector<unsigned>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (unsigned p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions(n - p, p, cur, out);
    cur.pop_back();
  }
}

/// Minimal generators of the two-variable ideal whose staircase is the
/// Young diagram of `parts` (row i has parts[i] boxes along x).
inline std::vector<Monomial> staircase_generators(const std::vector<unsigned>& parts) {
  std::vector<Monomial> g;
  const std::size_t rows = parts.size();
  auto mono = [](std::uint32_t a, std::uint32_t b) {
    Monomial m(2);
    m.set(0, a);
    m.set(1, b);
    return m;
  };
  g.push_back(mono(parts[0], 0));
  for (std::size_t i = 1; i < rows; ++i)
    if (parts[i] < parts[i - 1]) g.push_back(mono(parts[i], static_cast<std::uint32_t>(i)));
  g.push_back(mono(0, static_cast<std::uint32_t>(rows)));
  return g;
}

/// Plane partitions of n as height arrays; each yields a three-variable
/// staircase. Heights are non-increasing along both axes.
inline void plane_partitions(unsigned n, std::vector<std::vector<std::vector<unsigned>>>& out) {
  const unsigned side = n;
  std::vector<std::vector<unsigned>> h(side, std::vector<unsigned>(side, 0));
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t cell, unsigned left) {
    if (left == 0) {
      out.push_back(h);
      return;
    }
    if (cell == side * side) return;
    const std::size_t i = cell / side, j = cell % side;
    unsigned cap = left;
    if (i > 0) cap = std::min(cap, h[i - 1][j]);
    if (j > 0) cap = std::min(cap, h[i][j - 1]);
    for (unsigned v = cap;; --v) {
      h[i][j] = v;
      rec(cell + 1, left - v);
      if (v == 0) break;
    }
    h[i][j] = 0;
  };
  rec(0, n);
}

/// Monomial generators (not minimal) of the ideal whose standard monomials
/// are the boxes of a plane partition.
inline std::vector<Monomial> plane_partition_generators(const std::vector<std::vector<unsigned>>& h) {
  std::vector<Monomial> g;
  const std::size_t side = h.size();
  for (std::size_t i = 0; i <= side; ++i)
    for (std::size_t j = 0; j <= side; ++j) {
      const unsigned height = (i < side && j < side) ? h[i][j] : 0;
      Monomial m(3);
      m.set(0, static_cast<std::uint32_t>(i));
      m.set(1, static_cast<std::uint32_t>(j));
      m.set(2, height);
      g.push_back(m);
    }
  return g;
}

/// Seeded generator of random test inputs.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : eng_(seed) {}
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng_); }
  long nonzero(long bound) {
    long v = 0;
    while (v == 0) v = integer(-bound, bound);
    return v;
  }
  bool coin() { return integer(0, 1) == 1; }

  detvan::IntMatrix int_matrix(std::size_t r, std::size_t c, long bound) {
    detvan::IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = integer(-bound, bound);
    return m;
  }

  /// Random polynomial with `terms` terms of total degree in [lo, hi].
  Polynomial poly(const detvan::RingPtr& ring, std::size_t terms, unsigned lo, unsigned hi, long coeff = 5) {
    Polynomial p(ring);
    for (std::size_t k = 0; k < terms; ++k) {
      const auto d = static_cast<unsigned>(integer(lo, hi));
      Monomial m(ring->size());
      for (unsigned e = 0; e < d; ++e) {
        const auto v = static_cast<std::size_t>(integer(0, static_cast<long>(ring->size()) - 1));
        m.set(v, m[v] + 1);
      }
      p += Polynomial::monomial(ring, m, Rational(nonzero(coeff)));
    }
    return p;
  }

  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace oracle
