#pragma once

// Gröbner bases for global orders (Buchberger with the Gebauer–Möller pair
// update) and standard bases for the local order (Mora's tangent cone
// normal form with écart-minimal reducer selection), plus everything read
// off a leading-term ideal: colength, Krull dimension, membership.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "detvan/errors.hpp"
#include "detvan/monomial.hpp"
#include "detvan/polynomial.hpp"

namespace detvan {

enum class Ordering { global_degrevlex, local_negdegrevlex };

struct BasisOptions {
  unsigned max_degree = 24;
};

class Ideal {
 public:
  explicit Ideal(std::vector<Polynomial> generators, Ordering ordering = Ordering::global_degrevlex)
      : gens_(std::move(generators)), ordering_(ordering) {
    if (gens_.empty()) throw StructuralError("ideal needs at least one generator");
    for (const auto& g : gens_)
      if (!same_ring(g.ring(), gens_.front().ring()))
        throw StructuralError("ideal generators over different variable lists");
  }

  const std::vector<Polynomial>& generators() const { return gens_; }
  Ordering ordering() const { return ordering_; }
  const RingPtr& ring() const { return gens_.front().ring(); }

  MonomialOrder monomial_order() const {
    return ordering_ == Ordering::global_degrevlex ? MonomialOrder::degrevlex()
                                                   : MonomialOrder::negdegrevlex();
  }

  Ideal with_ordering(Ordering o) const { return Ideal(gens_, o); }

  Ideal operator+(const Ideal& other) const {
    auto g = gens_;
    g.insert(g.end(), other.gens_.begin(), other.gens_.end());
    return Ideal(std::move(g), ordering_);
  }

 private:
  std::vector<Polynomial> gens_;
  Ordering ordering_;
};

/// Result of a basis computation. `leading[i]` is the leading monomial of
/// `elements[i]` for `order`; elements are monic with respect to it.
struct StandardBasis {
  RingPtr ring;
  MonomialOrder order = MonomialOrder::degrevlex();
  std::vector<Polynomial> elements;
  std::vector<Monomial> leading;
  bool is_reduced = false;

  bool is_unit() const {
    return std::any_of(leading.begin(), leading.end(), [](const Monomial& m) { return m.is_one(); });
  }
};

/// Colength-style count that may be infinite.
class Multiplicity {
 public:
  static Multiplicity infinite() { return Multiplicity(); }
  explicit Multiplicity(std::size_t v) : value_(v) {}

  bool is_finite() const { return value_.has_value(); }
  std::size_t value() const {
    if (!value_) throw DomainError("multiplicity is infinite");
    return *value_;
  }
  std::string to_string() const { return value_ ? std::to_string(*value_) : "infinite"; }

  friend bool operator==(const Multiplicity&, const Multiplicity&) = default;

 private:
  Multiplicity() = default;
  std::optional<std::size_t> value_;
};

namespace detail {

/// Polynomial with terms sorted descending for a specific monomial order.
struct OPoly {
  std::vector<Term> t;

  bool empty() const { return t.empty(); }
  const Monomial& lm() const { return t.front().mono; }
  const Rational& lc() const { return t.front().coeff; }

  std::uint64_t max_degree() const {
    std::uint64_t d = 0;
    for (const auto& x : t) d = std::max(d, x.mono.degree());
    return d;
  }
  /// deg(f) - deg(LM(f)).
  std::uint64_t ecart() const { return max_degree() - lm().degree(); }

  void make_monic() {
    if (t.empty() || t.front().coeff == 1) return;
    const Rational inv = Rational(1) / t.front().coeff;
    for (auto& x : t) x.coeff *= inv;
  }
};

inline OPoly to_opoly(const Polynomial& p, const MonomialOrder& ord) {
  OPoly o{{p.terms().begin(), p.terms().end()}};
  if (ord.kind() != MonomialOrder::Kind::degrevlex)
    std::sort(o.t.begin(), o.t.end(),
              [&](const Term& a, const Term& b) { return ord.greater(a.mono, b.mono); });
  return o;
}

inline Polynomial from_opoly(const OPoly& o, const RingPtr& ring) {
  return Polynomial::from_terms(ring, o.t);
}

/// h <- h - c * m * g, all sorted by `ord`.
inline void sub_mul(OPoly& h, const Rational& c, const Monomial& m, const OPoly& g,
                    const MonomialOrder& ord) {
  std::vector<Term> out;
  out.reserve(h.t.size() + g.t.size());
  std::size_t i = 0, j = 0;
  Monomial shifted;
  bool have = false;
  while (i < h.t.size() || j < g.t.size()) {
    if (j < g.t.size() && !have) {
      shifted = m * g.t[j].mono;
      have = true;
    }
    int cmp;
    if (i == h.t.size()) cmp = -1;
    else if (j == g.t.size()) cmp = 1;
    else cmp = ord.compare(h.t[i].mono, shifted);
    if (cmp > 0) {
      out.push_back(std::move(h.t[i++]));
    } else if (cmp < 0) {
      out.push_back({shifted, -c * g.t[j].coeff});
      ++j;
      have = false;
    } else {
      Rational v = h.t[i].coeff - c * g.t[j].coeff;
      if (v != 0) out.push_back({std::move(h.t[i].mono), std::move(v)});
      ++i;
      ++j;
      have = false;
    }
  }
  h.t = std::move(out);
}

inline OPoly spoly(const OPoly& f, const OPoly& g, const Monomial& l, const MonomialOrder& ord) {
  OPoly h;
  const Monomial mf = l / f.lm();
  for (const auto& x : f.t) h.t.push_back({mf * x.mono, x.coeff / f.lc()});
  sub_mul(h, Rational(1) / g.lc(), l / g.lm(), g, ord);
  return h;
}

/// Full reduction by a list of basis polynomials (global orders).
inline OPoly full_reduce(OPoly h, const std::vector<const OPoly*>& basis, const MonomialOrder& ord) {
  OPoly rem;
  while (!h.empty()) {
    const OPoly* red = nullptr;
    for (const OPoly* g : basis) {
      if (g->lm().divides(h.lm())) {
        if (!red || g->t.size() < red->t.size()) red = g;
      }
    }
    if (red) {
      const Rational c = h.lc() / red->lc();
      const Monomial m = h.lm() / red->lm();
      sub_mul(h, c, m, *red, ord);
    } else {
      rem.t.push_back(std::move(h.t.front()));
      h.t.erase(h.t.begin());
    }
  }
  return rem;
}

struct CritPair {
  std::size_t i, j;
  Monomial lcm;
};

/// Gebauer–Möller update. `use_product` disables the coprime-leading-term
/// criterion for local orders.
inline void gm_update(std::vector<CritPair>& pairs, std::vector<std::size_t>& active,
                      const std::vector<OPoly>& polys, std::size_t h, bool use_product,
                      bool drop_redundant) {
  const Monomial& lh = polys[h].lm();
  std::vector<CritPair> cand;
  for (std::size_t g : active) cand.push_back({g, h, lcm(polys[g].lm(), lh)});

  auto coprime = [&](const CritPair& p) {
    return use_product && polys[p.i].lm().coprime(lh);
  };

  // Chain criterion among the new pairs.
  std::vector<CritPair> kept;
  for (std::size_t a = 0; a < cand.size(); ++a) {
    bool drop = false;
    if (!coprime(cand[a])) {
      for (std::size_t b = 0; b < cand.size() && !drop; ++b) {
        if (a == b) continue;
        if (cand[b].lcm.divides(cand[a].lcm)) {
          // Among equal lcms keep the first one.
          if (cand[b].lcm == cand[a].lcm && b > a) continue;
          if (cand[b].lcm == cand[a].lcm && coprime(cand[b])) continue;
          drop = true;
        }
      }
    }
    if (!drop) kept.push_back(cand[a]);
  }
  std::vector<CritPair> fresh;
  for (auto& p : kept)
    if (!coprime(p)) fresh.push_back(std::move(p));

  // Prune old pairs made redundant by the new leading monomial.
  std::vector<CritPair> old;
  for (auto& p : pairs) {
    const bool divides = lh.divides(p.lcm);
    const bool strict = !(lcm(polys[p.i].lm(), lh) == p.lcm) && !(lcm(polys[p.j].lm(), lh) == p.lcm);
    if (!(divides && strict)) old.push_back(std::move(p));
  }
  old.insert(old.end(), std::make_move_iterator(fresh.begin()), std::make_move_iterator(fresh.end()));
  pairs = std::move(old);

  if (drop_redundant) {
    std::vector<std::size_t> next;
    for (std::size_t g : active)
      if (!lh.divides(polys[g].lm())) next.push_back(g);
    next.push_back(h);
    active = std::move(next);
  } else {
    active.push_back(h);
  }
}

inline std::size_t select_pair(const std::vector<CritPair>& pairs, const MonomialOrder& ord) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < pairs.size(); ++k) {
    const auto& a = pairs[k].lcm;
    const auto& b = pairs[best].lcm;
    // Normal strategy on degree first, then the order (reversed for local).
    if (a.degree() != b.degree()) {
      if (a.degree() < b.degree()) best = k;
    } else if (ord.is_global() ? ord.greater(b, a) : ord.greater(a, b)) {
      best = k;
    }
  }
  return best;
}

/// Counts standard monomials of a zero-dimensional monomial ideal and
/// reports the largest degree among them; nullopt if not zero-dimensional.
struct Staircase {
  std::size_t count = 0;
  std::uint64_t max_degree = 0;
};

inline std::optional<Staircase> staircase(const std::vector<Monomial>& leads, std::size_t nvars) {
  std::vector<std::uint32_t> bound(nvars, 0);
  for (std::size_t v = 0; v < nvars; ++v) {
    std::uint32_t best = 0;
    for (const auto& m : leads) {
      if (m.degree() == m[v] && m[v] > 0 && (best == 0 || m[v] < best)) best = m[v];
    }
    if (best == 0) {
      bool unit = std::any_of(leads.begin(), leads.end(), [](const Monomial& m) { return m.is_one(); });
      if (!unit) return std::nullopt;
    }
    bound[v] = best;
  }
  if (std::any_of(leads.begin(), leads.end(), [](const Monomial& m) { return m.is_one(); }))
    return Staircase{0, 0};
  Staircase s;
  Monomial cur(nvars);
  // Depth-first enumeration; a monomial in the ideal prunes the rest of its
  // row in the last variable since multiples stay in the ideal.
  auto in_ideal = [&](const Monomial& m) {
    for (const auto& l : leads)
      if (l.divides(m)) return true;
    return false;
  };
  std::function<void(std::size_t)> rec = [&](std::size_t v) {
    if (v == nvars) {
      ++s.count;
      s.max_degree = std::max(s.max_degree, cur.degree());
      return;
    }
    for (std::uint32_t e = 0; e < bound[v]; ++e) {
      cur.set(v, e);
      if (in_ideal(cur)) break;
      rec(v + 1);
    }
    cur.set(v, 0);
  };
  rec(0);
  return s;
}

inline void truncate_above(OPoly& p, std::uint64_t bound) {
  if (p.empty()) return;
  // The leading monomial is kept even if it is above the bound.
  std::vector<Term> out;
  out.push_back(std::move(p.t.front()));
  for (std::size_t k = 1; k < p.t.size(); ++k)
    if (p.t[k].mono.degree() < bound) out.push_back(std::move(p.t[k]));
  p.t = std::move(out);
}

inline void check_budget(std::uint64_t degree, const BasisOptions& opts) {
  if (degree > opts.max_degree)
    throw ResourceError("basis computation exceeded degree budget " + std::to_string(opts.max_degree) +
                        " (reached " + std::to_string(degree) + ")");
}

inline StandardBasis package(const RingPtr& ring, const MonomialOrder& ord, std::vector<OPoly> polys,
                             bool reduced) {
  std::sort(polys.begin(), polys.end(),
            [&](const OPoly& a, const OPoly& b) { return ord.greater(b.lm(), a.lm()); });
  StandardBasis sb;
  sb.ring = ring;
  sb.order = ord;
  sb.is_reduced = reduced;
  for (auto& p : polys) {
    sb.leading.push_back(p.lm());
    sb.elements.push_back(from_opoly(p, ring));
  }
  return sb;
}

/// Keeps one element per minimal leading monomial.
inline std::vector<OPoly> minimalize(std::vector<OPoly> polys) {
  std::vector<bool> keep(polys.size(), true);
  for (std::size_t a = 0; a < polys.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < polys.size() && !redundant; ++b) {
      if (a == b) continue;
      if (polys[b].lm().divides(polys[a].lm())) {
        if (polys[b].lm() == polys[a].lm()) redundant = b < a;
        else redundant = true;
      }
    }
    keep[a] = !redundant;
  }
  std::vector<OPoly> out;
  for (std::size_t a = 0; a < polys.size(); ++a)
    if (keep[a]) out.push_back(std::move(polys[a]));
  return out;
}

}  // namespace detail

/// Reduced Gröbner basis for a global monomial order.
inline StandardBasis groebner_basis(std::span<const Polynomial> gens, const MonomialOrder& ord,
                                    const BasisOptions& opts = {}) {
  using namespace detail;
  if (!ord.is_global()) throw StructuralError("groebner_basis requires a global order");
  if (gens.empty()) throw StructuralError("empty generator list");
  const RingPtr ring = gens.front().ring();
  std::vector<OPoly> polys;
  std::vector<std::size_t> active;
  std::vector<CritPair> pairs;
  auto add = [&](OPoly p) {
    p.make_monic();
    polys.push_back(std::move(p));
    gm_update(pairs, active, polys, polys.size() - 1, true, true);
  };
  for (const auto& g : gens) {
    if (!same_ring(g.ring(), ring)) throw StructuralError("variable-list mismatch in ideal");
    if (g.is_zero()) continue;
    check_budget(g.total_degree(), opts);
    std::vector<const OPoly*> basis;
    for (auto i : active) basis.push_back(&polys[i]);
    OPoly r = full_reduce(to_opoly(g, ord), basis, ord);
    if (!r.empty()) add(std::move(r));
  }
  if (polys.empty()) {
    StandardBasis sb;
    sb.ring = ring;
    sb.order = ord;
    sb.is_reduced = true;
    return sb;
  }
  while (!pairs.empty()) {
    const std::size_t k = select_pair(pairs, ord);
    CritPair p = pairs[k];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(k));
    check_budget(p.lcm.degree(), opts);
    std::vector<const OPoly*> basis;
    for (auto i : active) basis.push_back(&polys[i]);
    OPoly h = full_reduce(spoly(polys[p.i], polys[p.j], p.lcm, ord), basis, ord);
    if (!h.empty()) {
      add(std::move(h));
      if (polys.back().lm().is_one()) break;
    }
  }
  std::vector<OPoly> g;
  for (auto i : active) g.push_back(polys[i]);
  if (std::any_of(g.begin(), g.end(), [](const OPoly& p) { return p.lm().is_one(); })) {
    OPoly one;
    one.t.push_back({Monomial(ring->size()), Rational(1)});
    return package(ring, ord, {one}, true);
  }
  g = minimalize(std::move(g));
  for (std::size_t a = 0; a < g.size(); ++a) {
    std::vector<const OPoly*> others;
    for (std::size_t b = 0; b < g.size(); ++b)
      if (b != a) others.push_back(&g[b]);
    OPoly head;
    head.t.push_back(g[a].t.front());
    OPoly tail;
    tail.t.assign(g[a].t.begin() + 1, g[a].t.end());
    OPoly rt = full_reduce(std::move(tail), others, ord);
    head.t.insert(head.t.end(), rt.t.begin(), rt.t.end());
    head.make_monic();
    g[a] = std::move(head);
  }
  return package(ring, ord, std::move(g), true);
}

namespace detail {

/// Mora's normal form. Reducers are chosen among `reducers` plus earlier
/// intermediate results with minimal écart; `bound` truncates terms of
/// degree >= bound (valid once m^bound lies in the ideal).
inline OPoly mora_nf(OPoly h, std::vector<OPoly> reducers, const MonomialOrder& ord,
                     std::optional<std::uint64_t> bound, const BasisOptions& opts) {
  while (!h.empty()) {
    if (bound) {
      if (h.lm().degree() >= *bound) return {};
      truncate_above(h, *bound);
    }
    const OPoly* best = nullptr;
    std::uint64_t best_ecart = 0;
    for (const auto& g : reducers) {
      if (!g.lm().divides(h.lm())) continue;
      const auto e = g.ecart();
      if (!best || e < best_ecart || (e == best_ecart && g.t.size() < best->t.size())) {
        best = &g;
        best_ecart = e;
      }
    }
    if (!best) return h;
    OPoly g = *best;
    if (best_ecart > h.ecart()) reducers.push_back(h);
    const Rational c = h.lc() / g.lc();
    const Monomial m = h.lm() / g.lm();
    sub_mul(h, c, m, g, ord);
    if (!h.empty()) check_budget(h.max_degree(), opts);
  }
  return h;
}

}  // namespace detail

/// Standard basis in the local ring at the origin (negative degree reverse
/// lexicographic order). The result is minimal (pairwise non-divisible
/// leading monomials) with monic elements.
inline StandardBasis standard_basis_local(std::span<const Polynomial> gens, const BasisOptions& opts = {}) {
  using namespace detail;
  if (gens.empty()) throw StructuralError("empty generator list");
  const RingPtr ring = gens.front().ring();
  const MonomialOrder ord = MonomialOrder::negdegrevlex();
  std::vector<OPoly> polys;
  std::vector<std::size_t> active;
  std::vector<CritPair> pairs;
  std::optional<std::uint64_t> bound;

  auto refresh_bound = [&]() {
    std::vector<Monomial> leads;
    for (auto i : active) leads.push_back(polys[i].lm());
    if (auto st = staircase(leads, ring->size())) {
      const std::uint64_t b = st->max_degree + 1;
      if (!bound || b < *bound) {
        bound = b;
        for (auto i : active) truncate_above(polys[i], b);
      }
    }
  };
  auto reducers = [&]() {
    std::vector<OPoly> r;
    for (auto i : active) r.push_back(polys[i]);
    return r;
  };
  auto add = [&](OPoly p) {
    p.make_monic();
    polys.push_back(std::move(p));
    gm_update(pairs, active, polys, polys.size() - 1, false, false);
    refresh_bound();
  };

  for (const auto& g : gens) {
    if (!same_ring(g.ring(), ring)) throw StructuralError("variable-list mismatch in ideal");
    if (g.is_zero()) continue;
    check_budget(g.total_degree(), opts);
    OPoly h = mora_nf(to_opoly(g, ord), reducers(), ord, bound, opts);
    if (!h.empty()) add(std::move(h));
  }
  while (!pairs.empty()) {
    if (std::any_of(active.begin(), active.end(), [&](std::size_t i) { return polys[i].lm().is_one(); }))
      break;
    const std::size_t k = select_pair(pairs, ord);
    CritPair p = pairs[k];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(k));
    if (bound && p.lcm.degree() >= *bound) continue;
    OPoly s = spoly(polys[p.i], polys[p.j], p.lcm, ord);
    OPoly h = mora_nf(std::move(s), reducers(), ord, bound, opts);
    if (!h.empty()) add(std::move(h));
  }
  std::vector<OPoly> g;
  for (auto i : active) g.push_back(polys[i]);
  if (std::any_of(g.begin(), g.end(), [](const OPoly& p) { return p.lm().is_one(); })) {
    OPoly one;
    one.t.push_back({Monomial(ring->size()), Rational(1)});
    return package(ring, ord, {one}, true);
  }
  return package(ring, ord, minimalize(std::move(g)), false);
}

inline StandardBasis groebner_basis(const Ideal& I, const BasisOptions& opts = {}) {
  if (I.ordering() != Ordering::global_degrevlex)
    throw StructuralError("groebner_basis requires a global ordering");
  return groebner_basis(I.generators(), MonomialOrder::degrevlex(), opts);
}

inline StandardBasis standard_basis_local(const Ideal& I, const BasisOptions& opts = {}) {
  if (I.ordering() != Ordering::local_negdegrevlex)
    throw StructuralError("standard_basis_local requires a local ordering");
  return standard_basis_local(I.generators(), opts);
}

inline StandardBasis compute_basis(const Ideal& I, const BasisOptions& opts = {}) {
  return I.ordering() == Ordering::global_degrevlex ? groebner_basis(I, opts) : standard_basis_local(I, opts);
}

/// Remainder of f modulo a global Gröbner basis.
inline Polynomial normal_form(const Polynomial& f, const StandardBasis& sb) {
  using namespace detail;
  if (!sb.order.is_global()) throw StructuralError("normal_form requires a global basis");
  check_same(f, Polynomial(sb.ring));
  std::vector<OPoly> basis;
  for (const auto& e : sb.elements) basis.push_back(to_opoly(e, sb.order));
  std::vector<const OPoly*> ptrs;
  for (const auto& b : basis) ptrs.push_back(&b);
  return from_opoly(full_reduce(to_opoly(f, sb.order), ptrs, sb.order), sb.ring);
}

/// Membership test. For a local basis this asks whether f lies in the ideal
/// of the local ring (weak normal form is zero).
inline bool basis_contains(const StandardBasis& sb, const Polynomial& f, const BasisOptions& opts = {}) {
  using namespace detail;
  if (f.is_zero()) return true;
  if (sb.is_unit()) return true;
  if (sb.order.is_global()) return normal_form(f, sb).is_zero();
  std::vector<OPoly> red;
  for (const auto& e : sb.elements) red.push_back(to_opoly(e, sb.order));
  return mora_nf(to_opoly(f, sb.order), red, sb.order, std::nullopt, opts).empty();
}

/// dim_Q of the quotient by the leading-term ideal; infinite unless the
/// leading ideal is zero-dimensional. With the local ordering this is the
/// colength in the local ring at the origin.
inline Multiplicity colength(const StandardBasis& sb) {
  auto st = detail::staircase(sb.leading, sb.ring->size());
  if (!st) return Multiplicity::infinite();
  return Multiplicity(st->count);
}

inline Multiplicity colength(const Ideal& I, const BasisOptions& opts = {}) {
  return colength(compute_basis(I, opts));
}

/// Krull dimension of the quotient by a monomial ideal: the size of a
/// largest variable set containing no leading monomial's support.
inline std::optional<std::size_t> monomial_dimension(const std::vector<Monomial>& leads, std::size_t nvars) {
  if (std::any_of(leads.begin(), leads.end(), [](const Monomial& m) { return m.is_one(); }))
    return std::nullopt;
  std::vector<std::uint64_t> supports;
  for (const auto& m : leads) supports.push_back(m.support_mask());
  std::size_t best = 0;
  const std::uint64_t full = nvars == 64 ? ~0ULL : ((std::uint64_t{1} << nvars) - 1);
  for (std::uint64_t set = 0;; ++set) {
    const auto size = static_cast<std::size_t>(__builtin_popcountll(set));
    if (size > best) {
      bool independent = true;
      for (auto s : supports)
        if ((s & ~set) == 0) {
          independent = false;
          break;
        }
      if (independent) best = size;
    }
    if (set == full) break;
  }
  return best;
}

/// Krull dimension of R/I; nullopt for the unit ideal (empty zero set). With
/// the local ordering, the dimension of the germ at the origin.
inline std::optional<std::size_t> ideal_dimension(const StandardBasis& sb) {
  return monomial_dimension(sb.leading, sb.ring->size());
}

inline std::optional<std::size_t> ideal_dimension(const Ideal& I, const BasisOptions& opts = {}) {
  return ideal_dimension(compute_basis(I, opts));
}

/// g in rad(I) via 1 in I + (1 - y*g) over a ring with one extra variable.
inline bool radical_contains(const Ideal& I, const Polynomial& g, const BasisOptions& opts = {}) {
  auto names = I.ring()->names();
  std::string extra = "_rab";
  while (std::find(names.begin(), names.end(), extra) != names.end()) extra += "_";
  names.push_back(extra);
  const RingPtr big = make_ring(names);
  std::vector<Polynomial> gens;
  for (const auto& f : I.generators()) gens.push_back(change_ring(f, big));
  const Polynomial y = Polynomial::variable(big, big->size() - 1);
  gens.push_back(Polynomial::constant(big, Rational(1)) - y * change_ring(g, big));
  return groebner_basis(gens, MonomialOrder::degrevlex(), opts).is_unit();
}

/// Generators of I ∩ Q[remaining variables] over the ring without `vars`.
inline std::vector<Polynomial> eliminate(const Ideal& I, const std::vector<std::string>& vars,
                                         const BasisOptions& opts = {}) {
  std::vector<std::string> order = vars;
  std::vector<std::string> rest;
  for (const auto& n : I.ring()->names()) {
    if (std::find(vars.begin(), vars.end(), n) == vars.end()) rest.push_back(n);
    else I.ring()->require(n);
  }
  for (const auto& v : vars) I.ring()->require(v);
  order.insert(order.end(), rest.begin(), rest.end());
  const RingPtr elim_ring = make_ring(order);
  const RingPtr rest_ring = make_ring(rest);
  std::vector<Polynomial> gens;
  for (const auto& f : I.generators()) gens.push_back(change_ring(f, elim_ring));
  auto gb = groebner_basis(gens, MonomialOrder::elimination(vars.size()), opts);
  std::vector<Polynomial> out;
  for (const auto& e : gb.elements) {
    bool free = true;
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (e.involves(i)) free = false;
    if (free) out.push_back(change_ring(e, rest_ring));
  }
  return out;
}

/// Ideal equality via mutual containment of global Gröbner bases.
inline bool same_ideal(const Ideal& a, const Ideal& b, const BasisOptions& opts = {}) {
  const auto ga = groebner_basis(a.generators(), MonomialOrder::degrevlex(), opts);
  const auto gb = groebner_basis(b.generators(), MonomialOrder::degrevlex(), opts);
  for (const auto& f : b.generators())
    if (!basis_contains(ga, f)) return false;
  for (const auto& f : a.generators())
    if (!basis_contains(gb, f)) return false;
  return true;
}

}  // namespace detvan
