#pragma once

// Integer matrices, Smith normal form, finitely generated abelian groups and
// the exact-sequence bookkeeping that produces homology groups.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "detvan/errors.hpp"
#include "detvan/rational.hpp"

namespace detvan {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Throws StructuralError on ragged input.
  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows.front().size() : 0;
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw StructuralError("ragged integer matrix");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw StructuralError("matrix product dimension mismatch");
    IntMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += a(i, k) * b(k, j);
      }
    return r;
  }

  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw StructuralError("matrix difference dimension mismatch");
    IntMatrix r(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = a.data_[k] - b.data_[k];
    return r;
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  /// row[dst] += f * row[src]
  void add_row(std::size_t dst, std::size_t src, const Integer& f) {
    if (f == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += f * (*this)(src, j);
  }
  /// col[dst] += f * col[src]
  void add_col(std::size_t dst, std::size_t src, const Integer& f) {
    if (f == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += f * (*this)(i, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Integer> data_;
};

/// Determinant by fraction-free Gaussian elimination (Bareiss).
inline Integer determinant(IntMatrix m) {
  if (m.rows() != m.cols()) throw StructuralError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = v;
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

struct SmithForm {
  IntMatrix U, S, V;  // U * M * V = S
  std::size_t rank = 0;
};

namespace detail {

// Floor division keeps remainders in [0, |b|), so the pivot strictly
// decreases whenever a remainder survives.
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace detail

/// Smith normal form with the minimal-|entry| pivot, ties broken by lowest
/// row then lowest column. Diagonal entries are nonnegative and each divides
/// the next.
inline SmithForm smith_normal_form(const IntMatrix& M) {
  SmithForm f{IntMatrix::identity(M.rows()), M, IntMatrix::identity(M.cols()), 0};
  IntMatrix& S = f.S;
  const std::size_t m = S.rows(), n = S.cols();
  const std::size_t d = std::min(m, n);

  for (std::size_t t = 0; t < d; ++t) {
    for (;;) {
      // Pivot search over the trailing block.
      std::optional<std::pair<std::size_t, std::size_t>> piv;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (S(i, j) == 0) continue;
          if (!piv || abs(S(i, j)) < abs(S(piv->first, piv->second))) piv = {i, j};
        }
      if (!piv) {
        f.rank = t;
        goto finish;
      }
      if (piv->first != t) {
        S.swap_rows(t, piv->first);
        f.U.swap_rows(t, piv->first);
      }
      if (piv->second != t) {
        S.swap_cols(t, piv->second);
        f.V.swap_cols(t, piv->second);
      }
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (S(i, t) == 0) continue;
        const Integer q = detail::floor_div(S(i, t), S(t, t));
        S.add_row(i, t, -q);
        f.U.add_row(i, t, -q);
        if (S(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (S(t, j) == 0) continue;
        const Integer q = detail::floor_div(S(t, j), S(t, t));
        S.add_col(j, t, -q);
        f.V.add_col(j, t, -q);
        if (S(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: fold an offending row into the pivot row and retry.
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(S(i, j).get_mpz_t(), S(t, t).get_mpz_t())) {
            S.add_row(t, i, 1);
            f.U.add_row(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (S(t, t) < 0) {
      S.negate_row(t);
      f.U.negate_row(t);
    }
  }
  f.rank = 0;
  for (std::size_t t = 0; t < d; ++t)
    if (S(t, t) != 0) ++f.rank;
finish:
  return f;
}

/// Finitely generated abelian group Z^r + Z/d_1 + ... with d_1 | d_2 | ...
class AbelianGroup {
 public:
  AbelianGroup() = default;

  /// Accepts arbitrary cyclic orders: 1 is dropped, 0 counts as free.
  AbelianGroup(std::size_t free_rank, const std::vector<Integer>& orders) : free_(free_rank) {
    IntMatrix diag(orders.size(), orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) diag(i, i) = abs(orders[i]);
    const auto snf = smith_normal_form(diag);
    for (std::size_t i = 0; i < orders.size(); ++i) {
      const Integer& v = snf.S(i, i);
      if (v == 0) ++free_;
      else if (v != 1) torsion_.push_back(v);
    }
  }

  static AbelianGroup free(std::size_t r) { return AbelianGroup(r, {}); }
  static AbelianGroup zero() { return AbelianGroup(); }

  std::size_t free_rank() const { return free_; }
  const std::vector<Integer>& torsion() const { return torsion_; }
  bool is_zero() const { return free_ == 0 && torsion_.empty(); }

  friend AbelianGroup operator+(const AbelianGroup& a, const AbelianGroup& b) {
    std::vector<Integer> t = a.torsion_;
    t.insert(t.end(), b.torsion_.begin(), b.torsion_.end());
    return AbelianGroup(a.free_ + b.free_, t);
  }

  friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
    return a.free_ == b.free_ && a.torsion_ == b.torsion_;
  }

  /// "0", "Z", "Z^14", "Z + Z/2".
  std::string to_string() const {
    std::vector<std::string> parts;
    if (free_ == 1) parts.emplace_back("Z");
    else if (free_ > 1) parts.push_back("Z^" + std::to_string(free_));
    for (const auto& d : torsion_) parts.push_back("Z/" + d.get_str());
    if (parts.empty()) return "0";
    std::string s = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) s += " + " + parts[i];
    return s;
  }

 private:
  std::size_t free_ = 0;
  std::vector<Integer> torsion_;
};

struct KerCoker {
  std::size_t kernel_rank;
  AbelianGroup cokernel;
};

inline KerCoker ker_coker(const IntMatrix& M) {
  const auto snf = smith_normal_form(M);
  std::vector<Integer> orders;
  for (std::size_t i = 0; i < snf.rank; ++i) orders.push_back(snf.S(i, i));
  return {M.cols() - snf.rank, AbelianGroup(M.rows() - snf.rank, orders)};
}

/// Homology by degree, with the rank of the vertical summand in each degree
/// recorded separately (the splitting itself is not canonical).
struct GradedHomology {
  std::map<unsigned, AbelianGroup> groups;
  std::map<unsigned, std::size_t> vertical;

  std::size_t betti(unsigned q) const {
    auto it = groups.find(q);
    return it == groups.end() ? 0 : it->second.free_rank();
  }
};

/// Homology of a space fibred over the circle with fibre F, where F has
/// homology Z^r in degree n-1 acted on by T, plus the point and circle
/// classes in low degrees.
inline GradedHomology wang_homology(const IntMatrix& T, unsigned n) {
  if (n < 2) throw DomainError("wang_homology needs n >= 2");
  if (T.rows() != T.cols()) throw StructuralError("monodromy must be square");
  const auto kc = ker_coker(T - IntMatrix::identity(T.rows()));
  GradedHomology h;
  h.groups[n] = AbelianGroup::free(kc.kernel_rank);
  if (n == 2) {
    h.groups[1] = kc.cokernel + AbelianGroup::free(1);
    h.vertical[1] = 1;
  } else {
    h.groups[n - 1] = kc.cokernel;
    for (unsigned q = 2; q + 1 < n; ++q) h.groups[q] = AbelianGroup::zero();
    h.groups[1] = AbelianGroup::free(1);
  }
  h.groups[0] = AbelianGroup::free(1);
  return h;
}

/// N×(N+1): first column all ones, identity in the remaining columns.
inline IntMatrix iota1_matrix(std::size_t N) {
  IntMatrix m(N, N + 1);
  for (std::size_t i = 0; i < N; ++i) {
    m(i, 0) = 1;
    m(i, i + 1) = 1;
  }
  return m;
}

struct BoundaryPiece {
  enum class Kind { special_point, axis };
  Kind kind = Kind::special_point;
  unsigned n = 3;
  std::optional<IntMatrix> monodromy;
  bool dinfty = false;
  std::size_t count = 1;

  /// A transversal A_1 whose discriminant root is simple. Going once around
  /// the point swaps the two halves of the vanishing sphere by a reflection,
  /// so the monodromy on its top class is -1.
  static BoundaryPiece d_infinity(unsigned n, std::size_t count) {
    IntMatrix t(1, 1);
    t(0, 0) = -1;
    return {Kind::special_point, n, t, true, count};
  }
};

struct AxisClass {
  enum class Kind { a_infinity, icis };
  Kind kind = Kind::a_infinity;
  std::size_t milnor = 0;

  static AxisClass a_infinity() { return {}; }
  static AxisClass icis(std::size_t mu) { return {Kind::icis, mu}; }
  std::string name() const { return kind == Kind::a_infinity ? "A_infinity" : "ICIS"; }
};

/// Either full homology, or (supported == false) only the facts that hold
/// for every configuration: connected, b_1 = 0, one vertical class, and for
/// threefolds b_2 = 1.
struct AssembledHomology {
  bool supported = true;
  std::string reason;
  unsigned n = 3;
  GradedHomology homology;                  // complete when supported
  std::map<unsigned, std::size_t> known_betti;  // always filled
  std::size_t vertical_rank = 1;
};

namespace detail {

inline AssembledHomology unsupported_assembly(unsigned n, std::string reason) {
  AssembledHomology r;
  r.supported = false;
  r.reason = std::move(reason);
  r.n = n;
  r.known_betti = {{0, 1}, {1, 0}};
  r.homology.groups[0] = AbelianGroup::free(1);
  if (n == 3) {
    r.known_betti[2] = 1;
    r.homology.groups[1] = AbelianGroup::zero();
    r.homology.groups[2] = AbelianGroup::free(1);
    r.homology.vertical[2] = 1;
  }
  return r;
}

inline void fill_betti(AssembledHomology& r) {
  for (const auto& [q, g] : r.homology.groups) r.known_betti[q] = g.free_rank();
}

}  // namespace detail

/// Homology of the rank-one perturbed Tjurina transform assembled from its
/// boundary pieces. With include_axis false, returns the homology of the
/// part over the affine chart away from the axis fibre.
inline AssembledHomology assemble_rank1_homology(unsigned n, const std::vector<BoundaryPiece>& pieces,
                                                 const AxisClass& axis, const AbelianGroup& transversal,
                                                 bool include_axis = true) {
  if (n != 2 && n != 3) throw DomainError("assembly is implemented for n = 2 and n = 3 only");
  for (const auto& p : pieces) {
    if (p.n != n) throw StructuralError("boundary piece dimension differs from n");
    if (p.dinfty && (!p.monodromy || p.monodromy->rows() != 1 || p.monodromy->cols() != 1))
      throw StructuralError("D_infinity piece needs a 1x1 monodromy");
  }
  std::size_t k = 0;
  for (const auto& p : pieces) {
    if (p.kind != BoundaryPiece::Kind::special_point || !p.dinfty)
      return detail::unsupported_assembly(n, "special point that is not of type D_infinity");
    k += p.count;
  }
  if (axis.kind != AxisClass::Kind::a_infinity)
    return detail::unsupported_assembly(n, "axis fibre carries an ICIS of Milnor number " +
                                               std::to_string(axis.milnor));

  AssembledHomology r;
  r.n = n;
  auto& g = r.homology.groups;
  if (!include_axis) {
    if (n != 3) return detail::unsupported_assembly(n, "affine-part homology is implemented for n = 3 only");
    g[0] = AbelianGroup::free(1);
    g[1] = AbelianGroup::zero();
    if (k == 0) {
      g[2] = transversal;
      g[3] = AbelianGroup::zero();
    } else {
      // A bouquet of 3-spheres: two per special point, one fewer since the
      // transversal class is killed once.
      g[2] = AbelianGroup::zero();
      g[3] = AbelianGroup::free(2 * k - 1);
    }
    r.vertical_rank = 0;
    detail::fill_betti(r);
    return r;
  }
  if (k > 0 && n == 2)
    return detail::unsupported_assembly(
        n, "horizontal part of H_2 for surfaces with special points is not implemented");
  g[0] = AbelianGroup::free(1);
  g[1] = AbelianGroup::zero();
  g[2] = AbelianGroup::free(1);
  r.homology.vertical[2] = 1;
  if (n == 3) g[3] = AbelianGroup::free(2 * k);
  detail::fill_betti(r);
  return r;
}

}  // namespace detvan
