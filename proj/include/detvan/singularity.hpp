#pragma once

// Jacobians and minors, Milnor numbers of hypersurfaces and complete
// intersections, singular-locus and polar-locus ideals.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "detvan/errors.hpp"
#include "detvan/ideal.hpp"
#include "detvan/polynomial.hpp"
#include "detvan/rational.hpp"

namespace detvan {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// Rows are equations, columns are ring variables.
inline PolyMatrix jacobian(const std::vector<Polynomial>& eqs) {
  PolyMatrix j;
  for (const auto& f : eqs) {
    std::vector<Polynomial> row;
    for (std::size_t v = 0; v < f.ring()->size(); ++v) row.push_back(differentiate(f, v));
    j.push_back(std::move(row));
  }
  return j;
}

/// Laplace expansion along the first row; fine for the small sizes used here.
inline Polynomial determinant(const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) throw DomainError("determinant of an empty matrix");
  for (const auto& row : m)
    if (row.size() != n) throw StructuralError("determinant of a non-square matrix");
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  Polynomial acc(m[0][0].ring());
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    PolyMatrix sub;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      sub.push_back(std::move(row));
    }
    Polynomial term = m[0][c] * determinant(sub);
    if (c % 2 == 0) acc += term;
    else acc -= term;
  }
  return acc;
}

namespace detail {

inline void for_each_subset(std::size_t n, std::size_t k,
                            const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace detail

/// All nonzero k×k minors, rows and columns in lexicographic subset order.
inline std::vector<Polynomial> minors(const PolyMatrix& m, std::size_t k) {
  std::vector<Polynomial> out;
  if (m.empty() || k == 0) return out;
  const std::size_t rows = m.size(), cols = m.front().size();
  detail::for_each_subset(rows, k, [&](const std::vector<std::size_t>& rs) {
    detail::for_each_subset(cols, k, [&](const std::vector<std::size_t>& cs) {
      PolyMatrix sub;
      for (auto r : rs) {
        std::vector<Polynomial> row;
        for (auto c : cs) row.push_back(m[r][c]);
        sub.push_back(std::move(row));
      }
      Polynomial d = determinant(sub);
      if (!d.is_zero()) out.push_back(std::move(d));
    });
  });
  return out;
}

inline Multiplicity milnor_hypersurface(const Polynomial& f, bool at_origin, const BasisOptions& opts = {}) {
  if (at_origin && f.constant_term() != 0)
    throw DomainError("germ is a unit at the origin: " + f.to_string());
  if (f.ring()->size() == 0) return Multiplicity(0);
  std::vector<Polynomial> partials;
  for (std::size_t v = 0; v < f.ring()->size(); ++v) partials.push_back(differentiate(f, v));
  if (at_origin) return colength(standard_basis_local(partials, opts));
  return colength(groebner_basis(partials, MonomialOrder::degrevlex(), opts));
}

/// Milnor number of the complete intersection germ f_1 = ... = f_k = 0 at
/// the origin, by the Lê–Greuel recursion
///   μ(f_1..f_i) + μ(f_1..f_{i-1}) = colength(f_1..f_{i-1}, i×i minors of J(f_1..f_i)).
/// Every partial system must itself be an isolated complete intersection.
inline std::size_t milnor_icis_le_greuel(const std::vector<Polynomial>& fs, const BasisOptions& opts = {}) {
  if (fs.empty()) throw DomainError("empty equation list");
  for (const auto& f : fs) {
    check_same(f, fs.front());
    if (f.constant_term() != 0) throw DomainError("equation does not vanish at the origin: " + f.to_string());
  }
  long previous = 0;
  for (std::size_t i = 1; i <= fs.size(); ++i) {
    std::vector<Polynomial> head(fs.begin(), fs.begin() + static_cast<std::ptrdiff_t>(i));
    std::vector<Polynomial> gens(fs.begin(), fs.begin() + static_cast<std::ptrdiff_t>(i - 1));
    for (auto& m : minors(jacobian(head), i)) gens.push_back(std::move(m));
    if (gens.empty()) throw NonIsolatedError("Jacobian of the partial system vanishes identically", i);
    const Multiplicity c = colength(standard_basis_local(gens, opts));
    if (!c.is_finite()) throw NonIsolatedError("partial complete intersection is not isolated", i);
    const long mu = static_cast<long>(c.value()) - previous;
    if (mu < 0) throw NonIsolatedError("negative Milnor number; partial system is not an ICIS", i);
    previous = mu;
  }
  return static_cast<std::size_t>(previous);
}

/// Lê–Greuel on the given order first, then on seeded random invertible
/// combinations when a partial system fails to be isolated.
inline std::size_t milnor_icis_generic(const std::vector<Polynomial>& fs, std::uint64_t seed,
                                       unsigned attempts = 8, const BasisOptions& opts = {}) {
  try {
    return milnor_icis_le_greuel(fs, opts);
  } catch (const NonIsolatedError&) {
    if (fs.size() == 1) throw;
  }
  const RingPtr scalars = make_ring({});
  SeededRng rng(seed);
  const std::size_t k = fs.size();
  for (unsigned a = 0; a < attempts; ++a) {
    PolyMatrix c(k, std::vector<Polynomial>(k, Polynomial(scalars)));
    for (auto& row : c)
      for (auto& e : row) e = Polynomial::constant(scalars, Rational(rng.uniform(-5, 5)));
    if (determinant(c).is_zero()) continue;
    std::vector<Polynomial> combo;
    for (std::size_t i = 0; i < k; ++i) {
      Polynomial g(fs.front().ring());
      for (std::size_t j = 0; j < k; ++j) g += c[i][j].constant_term() * fs[j];
      combo.push_back(std::move(g));
    }
    try {
      return milnor_icis_le_greuel(combo, opts);
    } catch (const NonIsolatedError&) {
    }
  }
  return milnor_icis_le_greuel(fs, opts);
}

/// eqs together with all c×c minors of their Jacobian.
inline Ideal singular_locus_ideal(const std::vector<Polynomial>& eqs, std::size_t expected_codim) {
  if (eqs.empty()) throw StructuralError("singular locus of an empty system");
  std::vector<Polynomial> gens = eqs;
  for (auto& m : minors(jacobian(eqs), expected_codim)) gens.push_back(std::move(m));
  return Ideal(std::move(gens));
}

struct PolarCurve {
  Ideal ideal;
  bool is_generic;
  std::optional<std::size_t> dimension;  // nullopt: empty locus
};

/// Locus on Y* = V(ystar) where dL_a and df are dependent, with
/// L_a = x_1 - sum a_i x_{i+1}. The ideal is not saturated, so the
/// dimension can only overestimate the polar curve.
inline PolarCurve polar_curve(const Polynomial& f, const std::vector<Polynomial>& ystar,
                              const std::vector<Rational>& bend, const BasisOptions& opts = {}) {
  const RingPtr& ring = f.ring();
  const std::size_t n = ring->size();
  if (n == 0 || bend.size() != n - 1)
    throw StructuralError("bend vector must have one entry per variable after the first");
  Polynomial L = Polynomial::variable(ring, 0);
  for (std::size_t i = 0; i + 1 < n; ++i) L -= bend[i] * Polynomial::variable(ring, i + 1);
  std::vector<Polynomial> eqs = ystar;
  eqs.push_back(f);
  eqs.push_back(L);
  const auto jac = jacobian(eqs);
  std::vector<Polynomial> gens = ystar;
  for (auto& m : minors(jac, ystar.size() + 2)) gens.push_back(std::move(m));
  if (gens.empty()) gens.push_back(Polynomial(ring));
  Ideal I(gens);
  auto dim = ideal_dimension(groebner_basis(I, opts));
  bool generic = !dim || *dim <= 1;
  if (!generic) {
    // Only the germ at the origin matters; far-away components are harmless.
    dim = ideal_dimension(standard_basis_local(I.generators(), opts));
    generic = !dim || *dim <= 1;
  }
  return {std::move(I), generic, dim};
}

}  // namespace detvan
