#pragma once

// 3×2 polynomial matrices, their minors, the two affine charts of the
// Tjurina transform, the rank-one perturbation, and the chart-level
// geometry: hypersurface reduction, quadratic families, degeneracy points
// and the axis fibre.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "detvan/abelian.hpp"
#include "detvan/errors.hpp"
#include "detvan/ideal.hpp"
#include "detvan/polynomial.hpp"
#include "detvan/rational.hpp"
#include "detvan/singularity.hpp"
#include "detvan/univariate.hpp"

namespace detvan {

class DetModel {
 public:
  using Grid = std::array<std::array<Polynomial, 2>, 3>;

  /// Checks the germ condition A(0) = 0 and a common ring.
  DetModel(RingPtr ring, Grid a) : ring_(std::move(ring)), a_(std::move(a)) {
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        if (!same_ring(a_[i][j].ring(), ring_)) throw StructuralError("matrix entry over a different ring");
        if (a_[i][j].constant_term() != 0)
          throw ModelError("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                           ") does not vanish at the origin");
      }
  }

  const RingPtr& ring() const { return ring_; }
  const Grid& A() const { return a_; }
  const Polynomial& entry(std::size_t i, std::size_t j) const { return a_[i][j]; }
  std::size_t N() const { return ring_->size(); }
  static constexpr unsigned t = 2;

  /// Minors deleting row 3, 2, 1 in that order.
  std::vector<Polynomial> minors() const {
    auto m = [&](std::size_t i, std::size_t j) { return a_[i][0] * a_[j][1] - a_[i][1] * a_[j][0]; };
    return {m(0, 1), m(0, 2), m(1, 2)};
  }

  DetModel swap_columns() const {
    Grid g;
    for (std::size_t i = 0; i < 3; ++i) g[i] = {a_[i][1], a_[i][0]};
    return DetModel(ring_, g);
  }

  /// U * A for a constant 3×3 matrix U.
  DetModel row_transform(const std::array<std::array<Rational, 3>, 3>& U) const {
    Grid g;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        Polynomial acc(ring_);
        for (std::size_t k = 0; k < 3; ++k) acc += U[i][k] * a_[k][j];
        g[i][j] = acc;
      }
    return DetModel(ring_, g);
  }

 private:
  RingPtr ring_;
  Grid a_;
};

struct ValidationReport {
  std::vector<Polynomial> minors;
  std::size_t dimension = 0;  // germ dimension of the minors ideal
  bool expected_codimension = false;
  bool smoothable = false;
  bool isolated = false;
  std::optional<std::size_t> singular_dimension;  // nullopt: empty singular locus
};

/// Throws ModelError when the minors do not cut out a germ of codimension 2.
inline ValidationReport validate_model(const DetModel& M, const BasisOptions& opts = {}) {
  ValidationReport r;
  r.minors = M.minors();
  const auto dim = ideal_dimension(standard_basis_local(r.minors, opts));
  if (!dim) throw ModelError("minors ideal is the unit ideal at the origin");
  r.dimension = *dim;
  r.expected_codimension = r.dimension + 2 == M.N();
  if (!r.expected_codimension)
    throw ModelError("minors ideal has dimension " + std::to_string(r.dimension) + ", expected " +
                     std::to_string(M.N() >= 2 ? M.N() - 2 : 0));
  r.smoothable = M.N() < 6;
  const Ideal sing = singular_locus_ideal(r.minors, 2);
  auto sdim = ideal_dimension(groebner_basis(sing, opts));
  if (sdim && *sdim > 0) sdim = ideal_dimension(standard_basis_local(sing.generators(), opts));
  r.singular_dimension = sdim;
  r.isolated = !sdim || *sdim == 0;
  return r;
}

/// One affine chart of the Tjurina transform in the ring
/// (coordinate, ambient variables...).
struct Chart {
  unsigned index = 0;
  std::string coordinate;
  RingPtr ring;
  std::vector<Polynomial> equations;
  // Filled by reduce_to_hypersurface.
  std::optional<Polynomial> hypersurface;
  RingPtr hypersurface_ring;
  std::map<std::string, Polynomial> eliminated;
  std::string reduction_route;
};

namespace detail {

inline std::string fresh_name(const RingPtr& ring, std::string base) {
  while (ring->index_of(base)) base += "_";
  return base;
}

}  // namespace detail

inline RingPtr chart_ring(const DetModel& M, unsigned index, std::string* coordinate = nullptr) {
  const std::string c = detail::fresh_name(M.ring(), index == 0 ? "s" : "t");
  if (coordinate) *coordinate = c;
  std::vector<std::string> names{c};
  for (const auto& n : M.ring()->names()) names.push_back(n);
  return make_ring(names);
}

/// Chart 0 uses the rows a_i1 + s*a_i2, chart 1 the rows t*a_i1 + a_i2.
inline Chart tjurina_chart(const DetModel& M, unsigned index) {
  if (index > 1) throw StructuralError("chart index must be 0 or 1");
  Chart c;
  c.index = index;
  c.ring = chart_ring(M, index, &c.coordinate);
  const Polynomial p = Polynomial::variable(c.ring, 0);
  for (std::size_t i = 0; i < 3; ++i) {
    const Polynomial a1 = change_ring(M.entry(i, 0), c.ring);
    const Polynomial a2 = change_ring(M.entry(i, 1), c.ring);
    c.equations.push_back(index == 0 ? a1 + p * a2 : p * a1 + a2);
  }
  return c;
}

/// Generic rank-one perturbation A - delta*B with B = e_3 (1, -c): in the
/// coordinates A*[[1,c],[0,1]] this is the elementary matrix at (3,1), and
/// its section vanishes at the chart-1 point t = c (the axis point).
struct Perturbation {
  std::array<std::array<Rational, 2>, 3> B{};
  unsigned rank = 1;
  unsigned axis_chart = 1;
  Rational axis_value;
  unsigned attempt = 0;
  std::string delta;
  RingPtr ring0, ring1;  // chart rings extended by delta
  std::vector<Polynomial> chart0, chart1;
};

struct Reseed {
  std::string reason;
};

namespace detail {

inline Rational axis_candidate(std::uint64_t seed, unsigned attempt) {
  if (attempt == 0) return Rational(0);
  SeededRng rng(mix_seed(seed, 0xa715 + attempt));
  const long num = rng.nonzero(9);
  const long den = rng.uniform(1, 4);
  return make_rational(num, den);
}

inline std::vector<Polynomial> slice_equations(const Chart& chart1, const Rational& c) {
  std::vector<Polynomial> out;
  const RingPtr ambient = make_ring({chart1.ring->names().begin() + 1, chart1.ring->names().end()});
  for (const auto& e : chart1.equations)
    out.push_back(change_ring(specialize(e, {{chart1.coordinate, c}}), ambient));
  return out;
}

/// Milnor number of the slice of the chart-1 transform at t = c through the
/// origin; nullopt when the slice is not isolated there.
inline std::optional<std::size_t> slice_milnor(const Chart& chart1, const Rational& c, std::uint64_t seed,
                                               const BasisOptions& opts) {
  try {
    return milnor_icis_generic(slice_equations(chart1, c), seed, 4, opts);
  } catch (const NonIsolatedError&) {
    return std::nullopt;
  }
}

}  // namespace detail

/// Builds the perturbation whose axis point is t = c, without checking it.
inline Perturbation rank1_perturbation_at(const DetModel& M, const Rational& c, unsigned attempt = 0) {
  Perturbation p;
  p.attempt = attempt;
  p.axis_value = c;
  p.B[2][0] = 1;
  p.B[2][1] = -c;

  const Chart c0 = tjurina_chart(M, 0), c1 = tjurina_chart(M, 1);
  p.delta = detail::fresh_name(c0.ring, "delta");
  auto extend = [&](const Chart& ch) {
    auto names = ch.ring->names();
    names.push_back(p.delta);
    return make_ring(names);
  };
  p.ring0 = extend(c0);
  p.ring1 = extend(c1);
  const Polynomial d0 = Polynomial::variable(p.ring0, p.delta);
  const Polynomial d1 = Polynomial::variable(p.ring1, p.delta);
  const Polynomial s = Polynomial::variable(p.ring0, 0);
  const Polynomial t = Polynomial::variable(p.ring1, 0);
  const Polynomial one0 = Polynomial::constant(p.ring0, 1), one1 = Polynomial::constant(p.ring1, 1);
  for (std::size_t i = 0; i < 3; ++i) {
    p.chart0.push_back(change_ring(c0.equations[i], p.ring0));
    p.chart1.push_back(change_ring(c1.equations[i], p.ring1));
  }
  p.chart0[2] -= d0 * (one0 - c * s);
  p.chart1[2] -= d1 * (t - c * one1);
  return p;
}

/// Attempt 0 places the axis at t = 0; later attempts draw t = c from the
/// seed. Returns Reseed when the slice at the axis is more singular than
/// the generic slice, i.e. the axis sits on a special point.
inline std::variant<Perturbation, Reseed> generic_rank1_perturbation(const DetModel& M, std::uint64_t seed,
                                                                      unsigned attempt,
                                                                      const BasisOptions& opts = {}) {
  Perturbation p = rank1_perturbation_at(M, detail::axis_candidate(seed, attempt), attempt);
  const Chart c1 = tjurina_chart(M, 1);
  const auto at_axis = detail::slice_milnor(c1, p.axis_value, mix_seed(seed, attempt), opts);
  std::optional<std::size_t> generic;
  SeededRng rng(mix_seed(seed, 0x51ce + attempt));
  for (int k = 0; k < 3 && !generic; ++k) {
    const Rational probe = make_rational(rng.nonzero(50), rng.uniform(1, 7));
    generic = detail::slice_milnor(c1, probe, mix_seed(seed, 0x51ce + k), opts);
  }
  if (!at_axis || (generic && *at_axis != *generic))
    return Reseed{"axis point t = " + to_string(p.axis_value) + " lies on a special point of the transform"};
  return p;
}

/// Seeded combination for the Y* construction; attempt 0 is the identity.
inline std::array<std::array<Rational, 3>, 3> ystar_combination(std::uint64_t seed, unsigned attempt) {
  std::array<std::array<Rational, 3>, 3> c{};
  for (std::size_t i = 0; i < 3; ++i) c[i][i] = 1;
  if (attempt == 0) return c;
  SeededRng rng(mix_seed(seed, 0x7e57 + attempt));
  for (auto& row : c)
    for (auto& e : row) e = rng.uniform(-4, 4);
  return c;
}

struct YStar {
  Polynomial f;
  std::vector<Polynomial> ystar;
  std::optional<std::size_t> singular_dimension;  // nullopt: Y* smooth
};

/// Combines the chart equations by `combo`; the first two define Y*, the
/// third is f. Reseed when the combination is singular or Sing(Y*) has
/// dimension above one.
inline std::variant<YStar, Reseed> ystar_reduction(const Chart& chart,
                                                  const std::array<std::array<Rational, 3>, 3>& combo,
                                                  const BasisOptions& opts = {}) {
  {
    const RingPtr k = make_ring({});
    PolyMatrix m(3, std::vector<Polynomial>(3, Polynomial(k)));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) m[i][j] = Polynomial::constant(k, combo[i][j]);
    if (determinant(m).is_zero()) return Reseed{"combination matrix is singular"};
  }
  std::vector<Polynomial> g;
  for (std::size_t i = 0; i < 3; ++i) {
    Polynomial acc(chart.ring);
    for (std::size_t j = 0; j < 3; ++j) acc += combo[i][j] * chart.equations[j];
    g.push_back(acc);
  }
  YStar y{g[2], {g[0], g[1]}, std::nullopt};
  const Ideal sing = singular_locus_ideal(y.ystar, 2);
  y.singular_dimension = ideal_dimension(groebner_basis(sing, opts));
  if (y.singular_dimension && *y.singular_dimension > 1) {
    y.singular_dimension = ideal_dimension(standard_basis_local(sing.generators(), opts));
    if (y.singular_dimension && *y.singular_dimension > 1)
      return Reseed{"Y* has a singular locus of dimension " + std::to_string(*y.singular_dimension)};
  }
  return y;
}

struct NotReducible {
  std::string reason;
};

namespace detail {

inline Rational linear_coefficient(const Polynomial& e, std::size_t var) {
  return e.coefficient(Monomial::variable(e.ring()->size(), var));
}

inline RingPtr drop_vars(const RingPtr& ring, std::size_t a, std::size_t b) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < ring->size(); ++i)
    if (i != a && i != b) names.push_back(ring->name(i));
  return make_ring(names);
}

inline bool verify_reduction(const Chart& c, const Chart& reduced, const BasisOptions& opts) {
  std::vector<Polynomial> gens;
  for (const auto& [name, phi] : reduced.eliminated)
    gens.push_back(Polynomial::variable(c.ring, name) - change_ring(phi, c.ring));
  gens.push_back(change_ring(*reduced.hypersurface, c.ring));
  return same_ideal(Ideal(c.equations), Ideal(gens), opts);
}

inline std::optional<Chart> reduce_structural(const Chart& c, const BasisOptions& opts) {
  const std::size_t n = c.ring->size();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      if (i == j) continue;
      for (std::size_t u1 = 1; u1 < n; ++u1)
        for (std::size_t u2 = 1; u2 < n; ++u2) {
          if (u1 == u2) continue;
          const Rational c1 = linear_coefficient(c.equations[i], u1);
          const Rational c2 = linear_coefficient(c.equations[j], u2);
          if (c1 == 0 || c2 == 0) continue;
          const Polynomial r1 = c.equations[i] - c1 * Polynomial::variable(c.ring, u1);
          const Polynomial r2 = c.equations[j] - c2 * Polynomial::variable(c.ring, u2);
          if (r1.involves(u1) || r1.involves(u2) || r2.involves(u1) || r2.involves(u2)) continue;
          Chart out = c;
          out.hypersurface_ring = drop_vars(c.ring, u1, u2);
          out.eliminated[c.ring->name(u1)] = change_ring(-(Rational(1) / c1) * r1, out.hypersurface_ring);
          out.eliminated[c.ring->name(u2)] = change_ring(-(Rational(1) / c2) * r2, out.hypersurface_ring);
          const std::size_t k = 3 - i - j;
          out.hypersurface = substitute(c.equations[k], out.eliminated);
          out.reduction_route = "substitution";
          if (verify_reduction(c, out, opts)) return out;
        }
    }
  return std::nullopt;
}

inline std::optional<Chart> reduce_by_elimination(const Chart& c, const BasisOptions& opts) {
  const std::size_t n = c.ring->size();
  for (std::size_t u1 = 1; u1 < n; ++u1)
    for (std::size_t u2 = u1 + 1; u2 < n; ++u2) {
      bool invertible = false;
      for (std::size_t i = 0; i < 3 && !invertible; ++i)
        for (std::size_t j = i + 1; j < 3 && !invertible; ++j) {
          const Rational d = linear_coefficient(c.equations[i], u1) * linear_coefficient(c.equations[j], u2) -
                             linear_coefficient(c.equations[i], u2) * linear_coefficient(c.equations[j], u1);
          invertible = d != 0;
        }
      if (!invertible) continue;
      std::vector<std::string> order{c.ring->name(u1), c.ring->name(u2)};
      for (std::size_t v = 0; v < n; ++v)
        if (v != u1 && v != u2) order.push_back(c.ring->name(v));
      const RingPtr er = make_ring(order);
      std::vector<Polynomial> gens;
      for (const auto& e : c.equations) gens.push_back(change_ring(e, er));
      StandardBasis gb;
      try {
        gb = groebner_basis(gens, MonomialOrder::elimination(2), opts);
      } catch (const ResourceError&) {
        continue;
      }
      const RingPtr rest = drop_vars(c.ring, u1, u2);
      std::optional<Polynomial> phi1, phi2;
      std::vector<Polynomial> free;
      for (std::size_t k = 0; k < gb.elements.size(); ++k) {
        const Monomial& lm = gb.leading[k];
        const Polynomial& g = gb.elements[k];
        if (!g.involves(0) && !g.involves(1)) {
          free.push_back(change_ring(g, rest));
          continue;
        }
        for (std::size_t slot = 0; slot < 2; ++slot) {
          if (!(lm == Monomial::variable(er->size(), slot))) continue;
          const Polynomial tail = g - Polynomial::variable(er, slot);
          if (tail.involves(0) || tail.involves(1)) continue;
          (slot == 0 ? phi1 : phi2) = change_ring(-tail, rest);
        }
      }
      if (!phi1 || !phi2 || free.size() != 1) continue;
      Chart out = c;
      out.hypersurface_ring = rest;
      out.eliminated[c.ring->name(u1)] = *phi1;
      out.eliminated[c.ring->name(u2)] = *phi2;
      out.hypersurface = free.front().monic();
      out.reduction_route = "elimination";
      if (verify_reduction(c, out, opts)) return out;
    }
  return std::nullopt;
}

}  // namespace detail

/// Solves two chart equations for two ambient variables and substitutes
/// into the third. Tries a direct substitution first, then a Gröbner
/// elimination which also catches row-mixed presentations.
inline std::variant<Chart, NotReducible> reduce_to_hypersurface(const Chart& c, const BasisOptions& opts = {}) {
  if (c.equations.size() != 3) throw StructuralError("chart must carry three equations");
  if (auto r = detail::reduce_structural(c, opts)) return *r;
  if (auto r = detail::reduce_by_elimination(c, opts)) return *r;
  return NotReducible{"no pair of chart equations solves for two ambient variables polynomially"};
}

/// h = u^T Q(param) u over the transversal variables u.
struct QuadraticFamily {
  std::string param;
  RingPtr param_ring;
  std::vector<std::string> vars;
  PolyMatrix Q;

  Polynomial reconstruct(const RingPtr& ring) const {
    Polynomial h(ring);
    for (std::size_t i = 0; i < vars.size(); ++i)
      for (std::size_t j = 0; j < vars.size(); ++j)
        h += change_ring(Q[i][j], ring) * Polynomial::variable(ring, vars[i]) * Polynomial::variable(ring, vars[j]);
    return h;
  }
};

struct NotQuadratic {
  std::string reason;
};

inline std::variant<QuadraticFamily, NotQuadratic> quadratic_family(const Polynomial& h, const std::string& param) {
  const RingPtr& ring = h.ring();
  const std::size_t pi = ring->require(param);
  QuadraticFamily q;
  q.param = param;
  q.param_ring = make_ring({param});
  std::vector<std::size_t> idx;
  for (std::size_t v = 0; v < ring->size(); ++v)
    if (v != pi) {
      idx.push_back(v);
      q.vars.push_back(ring->name(v));
    }
  const std::size_t n = idx.size();
  q.Q.assign(n, std::vector<Polynomial>(n, Polynomial(q.param_ring)));
  for (const auto& t : h.terms()) {
    const std::uint64_t tdeg = t.mono.degree() - t.mono[pi];
    if (tdeg != 2)
      return NotQuadratic{"term of transversal degree " + std::to_string(tdeg) + " in " + h.to_string()};
    std::vector<std::size_t> hit;
    for (std::size_t a = 0; a < n; ++a)
      for (std::uint32_t e = 0; e < t.mono[idx[a]]; ++e) hit.push_back(a);
    const Polynomial pc =
        Polynomial::monomial(q.param_ring, Monomial::variable(1, 0, t.mono[pi]), t.coeff);
    if (hit[0] == hit[1]) {
      q.Q[hit[0]][hit[0]] += pc;
    } else {
      const Polynomial half = Rational(1, 2) * pc;
      q.Q[hit[0]][hit[1]] += half;
      q.Q[hit[1]][hit[0]] += half;
    }
  }
  return q;
}

struct SpecialPointClass {
  Polynomial minpoly;  // squarefree, monic, in the parameter
  std::size_t degree = 0;
  unsigned multiplicity = 1;
  std::size_t corank = 0;
  bool dinfty = false;

  std::string class_name() const { return dinfty ? "D_infinity" : "unsupported"; }
};

struct SpecialPoints {
  Polynomial det;
  bool degenerate = false;  // det Q vanishes identically
  std::vector<SpecialPointClass> classes;

  std::size_t total_points() const {
    std::size_t k = 0;
    for (const auto& c : classes) k += c.degree;
    return k;
  }
};

namespace detail {

/// Inverse of a modulo p, assuming gcd(a, p) = 1.
inline UPoly inverse_mod(const UPoly& a, const UPoly& p) {
  UPoly r0 = p, r1 = a % p, s0, s1 = UPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    UPoly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r0 is a nonzero constant.
  return (UPoly::constant(Rational(1) / r0.lead()) * s0) % p;
}

struct CorankBranch {
  UPoly modulus;
  std::size_t corank;
};

/// Rank over Q[x]/(p) by Gaussian elimination, splitting p whenever a pivot
/// candidate is a zero divisor.
inline void corank_dynamic(std::vector<std::vector<UPoly>> m, const UPoly& p, std::vector<CorankBranch>& out) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (auto& row : m)
    for (auto& e : row) e = e % p;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::optional<std::size_t> pivot;
    for (std::size_t r = rank; r < rows; ++r) {
      if (m[r][c].is_zero()) continue;
      const UPoly g = gcd(m[r][c], p);
      if (g.degree() > 0) {
        corank_dynamic(m, g, out);
        corank_dynamic(m, p / g, out);
        return;
      }
      pivot = r;
      break;
    }
    if (!pivot) continue;
    std::swap(m[rank], m[*pivot]);
    const UPoly inv = inverse_mod(m[rank][c], p);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][c].is_zero()) continue;
      const UPoly f = (m[r][c] * inv) % p;
      for (std::size_t k = c; k < cols; ++k) m[r][k] = (m[r][k] - f * m[rank][k]) % p;
    }
    ++rank;
  }
  out.push_back({p.monic(), cols - rank});
}

}  // namespace detail

inline SpecialPoints special_points(const QuadraticFamily& q) {
  SpecialPoints sp;
  sp.det = q.Q.empty() ? Polynomial::constant(q.param_ring, 1) : determinant(q.Q);
  if (sp.det.is_zero()) {
    sp.degenerate = true;
    return sp;
  }
  std::vector<std::vector<UPoly>> um;
  for (const auto& row : q.Q) {
    std::vector<UPoly> r;
    for (const auto& e : row) r.push_back(to_upoly(e, 0));
    um.push_back(std::move(r));
  }
  for (const auto& f : squarefree_decompose(to_upoly(sp.det, 0))) {
    std::vector<detail::CorankBranch> branches;
    detail::corank_dynamic(um, f.factor, branches);
    std::map<std::size_t, UPoly> merged;
    for (const auto& b : branches) {
      auto it = merged.find(b.corank);
      if (it == merged.end()) merged.emplace(b.corank, b.modulus);
      else it->second = it->second * b.modulus;
    }
    for (const auto& [corank, mod] : merged) {
      SpecialPointClass c;
      c.minpoly = from_upoly(mod.monic(), q.param_ring, 0);
      c.degree = static_cast<std::size_t>(mod.degree());
      c.multiplicity = f.multiplicity;
      c.corank = corank;
      c.dinfty = f.multiplicity == 1 && corank == 1;
      sp.classes.push_back(std::move(c));
    }
  }
  return sp;
}

/// Evaluates Q at a rational parameter value.
inline Polynomial quadratic_det_at(const QuadraticFamily& q, const Rational& v) {
  if (q.Q.empty()) return Polynomial::constant(make_ring({}), 1);
  const RingPtr k = make_ring({});
  PolyMatrix m;
  for (const auto& row : q.Q) {
    std::vector<Polynomial> r;
    for (const auto& e : row) r.push_back(Polynomial::constant(k, evaluate_rational(e, {{q.param, v}})));
    m.push_back(std::move(r));
  }
  return determinant(m);
}

/// A_infinity when Q is nondegenerate at the axis value; otherwise the
/// Milnor number of the perturbed chart-1 complete intersection at the
/// axis point, with delta fixed to a seeded nonzero value. A non-isolated
/// residual singularity there violates the model hypotheses.
inline AxisClass classify_axis(const QuadraticFamily& chart1_family, const Perturbation& p, std::uint64_t seed,
                               const BasisOptions& opts = {}) {
  if (!quadratic_det_at(chart1_family, p.axis_value).is_zero()) return AxisClass::a_infinity();
  SeededRng rng(mix_seed(seed, 0xd17a));
  const Rational delta = make_rational(rng.nonzero(20), rng.uniform(1, 5));
  auto names = p.ring1->names();
  names.pop_back();
  const RingPtr ring = make_ring(names);
  std::vector<Polynomial> eqs;
  for (const auto& e : p.chart1) {
    Polynomial g = change_ring(specialize(e, {{p.delta, delta}}), ring);
    eqs.push_back(translate(g, 0, p.axis_value));
  }
  // The equations vanish at the axis point once delta*(t - c) does.
  try {
    return AxisClass::icis(milnor_icis_generic(eqs, mix_seed(seed, 0xd17b), 8, opts));
  } catch (const NonIsolatedError& e) {
    throw ModelError(std::string("residual singularity at the axis is not isolated: ") + e.what());
  }
}

}  // namespace detvan
