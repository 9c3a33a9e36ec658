#pragma once

// End-to-end analysis: classify the singular locus of the Tjurina
// transform, compute the pieces that enter the homology, assemble, audit.

#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "detvan/abelian.hpp"
#include "detvan/detmodel.hpp"
#include "detvan/errors.hpp"
#include "detvan/ideal.hpp"
#include "detvan/singularity.hpp"
#include "detvan/univariate.hpp"

namespace detvan {

enum class Classification { smooth_transform, isolated_tjurina, line_quadratic, unsupported };

inline std::string to_string(Classification c) {
  switch (c) {
    case Classification::smooth_transform: return "smooth_transform";
    case Classification::isolated_tjurina: return "isolated_tjurina";
    case Classification::line_quadratic: return "line_quadratic";
    case Classification::unsupported: return "unsupported";
  }
  return "unsupported";
}

struct TraceRecord {
  std::string step;
  std::string detail;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  bool vacuous = false;
  std::string detail;
};

struct SpecialPointReport {
  std::string minpoly;
  std::size_t degree = 0;
  unsigned multiplicity = 1;
  std::size_t corank = 0;
  std::string cls;
};

struct HomologyReport {
  unsigned dimension = 3;
  Classification classification = Classification::unsupported;
  std::string unsupported_reason;
  std::map<unsigned, AbelianGroup> homology;               // known groups
  std::map<unsigned, std::optional<std::size_t>> betti;    // degrees 0..n
  std::size_t vertical_rank = 1;
  std::optional<long> euler;
  std::vector<SpecialPointReport> special_points;
  std::optional<AxisClass> axis;
  std::vector<TraceRecord> trace;
  std::vector<CheckResult> checks;
  std::uint64_t seed = 1;

  std::optional<std::size_t> b(unsigned q) const {
    auto it = betti.find(q);
    return it == betti.end() ? std::nullopt : it->second;
  }
};

/// Homology when the transform has only isolated singularities with the
/// given Milnor numbers: the vanishing cycles sit in the top degree and the
/// section over the exceptional line gives one vertical class in H_2.
inline GradedHomology betti_isolated(unsigned n, const std::vector<std::size_t>& milnor_numbers) {
  if (n != 2 && n != 3) throw DomainError("betti_isolated: n must be 2 or 3");
  std::size_t r = 0;
  for (auto m : milnor_numbers) r += m;
  GradedHomology h;
  h.groups[0] = AbelianGroup::free(1);
  if (n == 3) {
    h.groups[1] = AbelianGroup::zero();
    h.groups[2] = AbelianGroup::free(1);
    h.groups[3] = AbelianGroup::free(r);
  } else {
    // Only the rank of H_1 is known for surfaces; torsion is left open.
    h.groups[2] = AbelianGroup::free(r) + AbelianGroup::free(1);
  }
  h.vertical[2] = 1;
  return h;
}

struct AnalyzeOptions {
  std::uint64_t seed = 1;
  BasisOptions basis;
  unsigned max_reseeds = 32;
};

/// DETVAN_MAX_RESEEDS when set to a positive integer, else 32.
inline unsigned max_reseeds_from_env() {
  if (const char* v = std::getenv("DETVAN_MAX_RESEEDS")) {
    char* end = nullptr;
    const long n = std::strtol(v, &end, 10);
    if (end && *end == '\0' && n > 0) return static_cast<unsigned>(n);
  }
  return 32;
}

inline std::vector<CheckResult> consistency_checks(const HomologyReport& r) {
  std::vector<CheckResult> out;
  const unsigned n = r.dimension;
  auto b = [&](unsigned q) { return r.b(q); };

  out.push_back({"b1_zero", b(1).has_value() && *b(1) == 0, false, "first Betti number vanishes"});

  {
    CheckResult c{"vanishing_range", true, n < 3, "b_i = 0 for 0 < i <= n - 2"};
    for (unsigned i = 1; i + 2 <= n; ++i)
      if (!b(i) || *b(i) != 0) c.passed = false;
    out.push_back(c);
  }

  out.push_back({"vertical_rank_one", r.vertical_rank == 1, false,
                 "exactly one vertical class pairs with the pulled-back generator"});

  if (n == 3) {
    out.push_back({"b2_vertical_only", b(2).has_value() && *b(2) == 1, false,
                   "H_2 is generated by the single vertical class"});
  } else {
    out.push_back({"b2_vertical_only", true, true, "only stated for threefolds"});
  }

  {
    CheckResult c{"euler_identity", true, false, "b3 = -chi + 2"};
    if (n != 3) {
      c.vacuous = true;
      c.detail = "identity is stated for threefolds only";
    } else if (!r.euler || !b(3)) {
      c.vacuous = true;
      c.detail = "b3 = -chi + 2 with chi unknown";
    } else {
      c.passed = static_cast<long>(*b(3)) == -*r.euler + 2;
    }
    out.push_back(c);
  }

  {
    // Betti numbers must agree with the listed groups.
    CheckResult c{"betti_matches_groups", true, false, "betti vector equals free ranks of the groups"};
    for (const auto& [q, g] : r.homology)
      if (!b(q) || *b(q) != g.free_rank()) c.passed = false;
    out.push_back(c);
  }
  return out;
}

namespace detail {

inline void fill_from_groups(HomologyReport& r, const GradedHomology& h) {
  r.homology = h.groups;
  r.betti.clear();
  for (unsigned q = 0; q <= r.dimension; ++q) r.betti[q] = h.betti(q);
  long chi = 0;
  for (unsigned q = 0; q <= r.dimension; ++q) chi += (q % 2 == 0 ? 1 : -1) * static_cast<long>(h.betti(q));
  r.euler = chi;
  r.vertical_rank = 0;
  for (const auto& [q, v] : h.vertical) r.vertical_rank += v;
}

/// Keep only what holds for every Milnor fibre in scope.
inline void mark_unsupported(HomologyReport& r, const std::string& reason) {
  r.classification = Classification::unsupported;
  r.unsupported_reason = reason;
  r.homology.clear();
  r.betti.clear();
  r.euler.reset();
  r.vertical_rank = 1;
  r.homology[0] = AbelianGroup::free(1);
  r.betti[0] = 1;
  r.betti[1] = 0;
  for (unsigned q = 2; q <= r.dimension; ++q) r.betti[q] = std::nullopt;
  if (r.dimension == 3) {
    r.homology[1] = AbelianGroup::zero();
    r.homology[2] = AbelianGroup::free(1);
    r.betti[2] = 1;
  }
  r.trace.push_back({"unsupported", reason});
}

inline void finish(HomologyReport& r) { r.checks = consistency_checks(r); }

struct RestrictedLocus {
  bool whole_line = false;
  std::optional<UPoly> points;  // gcd in the chart coordinate; constant: none
};

/// Intersects the singular locus of the chart with the exceptional line
/// (all ambient coordinates zero).
inline RestrictedLocus restrict_to_exceptional(const Chart& c) {
  const Ideal sing = singular_locus_ideal(c.equations, 3);
  std::map<std::string, Rational> zero;
  for (std::size_t v = 1; v < c.ring->size(); ++v) zero[c.ring->name(v)] = 0;
  std::optional<UPoly> g;
  for (const auto& f : sing.generators()) {
    const Polynomial r = specialize(f, zero);
    if (r.is_zero()) continue;
    const UPoly u = to_upoly(r, 0);
    g = g ? gcd(*g, u) : u.monic();
  }
  RestrictedLocus out;
  if (!g) out.whole_line = true;
  else out.points = g;
  return out;
}

inline std::string upoly_string(const UPoly& u, const std::string& var) {
  return from_upoly(u, make_ring({var}), 0).to_string();
}

inline std::vector<Polynomial> translated(const std::vector<Polynomial>& eqs, const Rational& shift) {
  std::vector<Polynomial> out;
  for (const auto& e : eqs) out.push_back(translate(e, 0, shift));
  return out;
}

inline std::string axis_string(const AxisClass& a) {
  return a.kind == AxisClass::Kind::a_infinity ? "A_infinity" : "ICIS(mu=" + std::to_string(a.milnor) + ")";
}

}  // namespace detail

inline HomologyReport analyze(const DetModel& M, const AnalyzeOptions& opt = {}) {
  const BasisOptions& bo = opt.basis;
  HomologyReport r;
  r.seed = opt.seed;
  if (M.N() < 4 || M.N() > 5)
    throw ModelError("analysis needs N = 4 or 5 ambient variables, got " + std::to_string(M.N()));
  r.dimension = static_cast<unsigned>(M.N() - 2);
  const unsigned n = r.dimension;

  const ValidationReport vr = validate_model(M, bo);
  if (!vr.isolated) throw ModelError("minors ideal does not define an isolated singularity");
  r.trace.push_back({"validate", "minors ideal of dimension " + std::to_string(vr.dimension) +
                                     ", smoothable, isolated at the origin"});
  r.trace.push_back({"assumption", "polynomial input: Milnor-ball conditions taken as satisfied by construction"});

  const Chart c0 = tjurina_chart(M, 0), c1 = tjurina_chart(M, 1);
  for (const Chart* c : {&c0, &c1}) {
    std::string eqs;
    for (const auto& e : c->equations) eqs += (eqs.empty() ? "" : ", ") + e.to_string();
    r.trace.push_back({"chart" + std::to_string(c->index), eqs});
  }

  const detail::RestrictedLocus l0 = detail::restrict_to_exceptional(c0);
  const detail::RestrictedLocus l1 = detail::restrict_to_exceptional(c1);

  if (!l0.whole_line && !l1.whole_line) {
    const bool none0 = l0.points->degree() == 0;
    const bool at_infinity = (*l1.points)(Rational(0)) == 0;
    if (none0 && !at_infinity) {
      r.classification = Classification::smooth_transform;
      r.trace.push_back({"singular_locus", "transform is smooth in both charts"});
      detail::fill_from_groups(r, betti_isolated(n, {}));
      detail::finish(r);
      return r;
    }
    r.classification = Classification::isolated_tjurina;
    std::vector<std::size_t> mus;
    try {
      if (!none0) {
        const UPoly sq = [&] {
          UPoly acc = UPoly::constant(1);
          for (const auto& f : squarefree_decompose(*l0.points)) acc = acc * f.factor;
          return acc;
        }();
        const auto roots = rational_roots(sq);
        r.trace.push_back({"singular_locus", "chart 0 points: " + detail::upoly_string(sq, c0.coordinate) +
                                                 " = 0, rational roots " + std::to_string(roots.size())});
        if (static_cast<long>(roots.size()) != sq.degree()) {
          detail::mark_unsupported(r, "isolated singular points at irrational chart coordinates");
          detail::finish(r);
          return r;
        }
        for (const auto& root : roots) {
          const std::size_t mu = milnor_icis_generic(detail::translated(c0.equations, root),
                                                     mix_seed(opt.seed, 0x150), 8, bo);
          r.trace.push_back({"milnor", c0.coordinate + " = " + to_string(root) + ": mu = " + std::to_string(mu)});
          mus.push_back(mu);
        }
      }
      if (at_infinity) {
        const std::size_t mu = milnor_icis_generic(c1.equations, mix_seed(opt.seed, 0x151), 8, bo);
        r.trace.push_back({"milnor", c1.coordinate + " = 0: mu = " + std::to_string(mu)});
        mus.push_back(mu);
      }
    } catch (const DomainError& e) {
      detail::mark_unsupported(r, std::string("isolated point analysis failed: ") + e.what());
      detail::finish(r);
      return r;
    }
    detail::fill_from_groups(r, betti_isolated(n, mus));
    r.trace.push_back({"assembly", "top-degree cycles are the vanishing cycles of the isolated singular points"});
    detail::finish(r);
    return r;
  }

  // Singular along the whole exceptional line.
  r.classification = Classification::line_quadratic;
  r.trace.push_back({"singular_locus", "transform is singular along the exceptional line"});
  try {
    std::optional<Perturbation> pert;
    for (unsigned attempt = 0; attempt < opt.max_reseeds && !pert; ++attempt) {
      auto res = generic_rank1_perturbation(M, opt.seed, attempt, bo);
      if (auto* p = std::get_if<Perturbation>(&res)) pert = *p;
      else r.trace.push_back({"reseed", std::get<Reseed>(res).reason});
    }
    if (!pert)
      throw ResourceError("no admissible rank-one perturbation within " + std::to_string(opt.max_reseeds) +
                          " attempts");
    r.trace.push_back({"perturbation", "B = e3*(1, " + to_string(-pert->axis_value) + "), axis at " +
                                           c1.coordinate + " = " + to_string(pert->axis_value) + ", attempt " +
                                           std::to_string(pert->attempt)});

    auto red0 = reduce_to_hypersurface(c0, bo);
    auto red1 = reduce_to_hypersurface(c1, bo);
    for (auto* red : {&red0, &red1})
      if (auto* nr = std::get_if<NotReducible>(red)) {
        detail::mark_unsupported(r, "chart not reducible to a hypersurface: " + nr->reason);
        detail::finish(r);
        return r;
      }
    const Chart& h0 = std::get<Chart>(red0);
    const Chart& h1 = std::get<Chart>(red1);
    for (const Chart* h : {&h0, &h1})
      r.trace.push_back({"reduction", "chart " + std::to_string(h->index) + ": h = " + h->hypersurface->to_string() +
                                          " (" + h->reduction_route + ")"});

    auto q0v = quadratic_family(*h0.hypersurface, h0.coordinate);
    auto q1v = quadratic_family(*h1.hypersurface, h1.coordinate);
    for (auto* q : {&q0v, &q1v})
      if (auto* nq = std::get_if<NotQuadratic>(q)) {
        detail::mark_unsupported(r, "transversal type is not quadratic: " + nq->reason);
        detail::finish(r);
        return r;
      }
    const QuadraticFamily& q0 = std::get<QuadraticFamily>(q0v);
    const QuadraticFamily& q1 = std::get<QuadraticFamily>(q1v);

    const SpecialPoints sp0 = special_points(q0);
    const SpecialPoints sp1 = special_points(q1);
    if (sp0.degenerate || sp1.degenerate) {
      detail::mark_unsupported(r, "quadratic family degenerates identically");
      detail::finish(r);
      return r;
    }
    r.trace.push_back({"special_points", "chart 0 det Q = " + sp0.det.to_string() + "; chart 1 det Q = " +
                                             sp1.det.to_string()});

    // Special set: chart-0 points plus the point t = 0 when it is special.
    std::vector<SpecialPointClass> special = sp0.classes;
    const UPoly d0 = to_upoly(sp0.det, 0), d1 = to_upoly(sp1.det, 0);
    const Rational zero(0);
    const bool infinity_special = d1(zero) == 0;
    if (infinity_special) {
      unsigned mult = 0;
      UPoly rest = d1;
      while (rest(zero) == 0) {
        rest = rest / UPoly::x();
        ++mult;
      }
      const auto rk = [&] {
        std::vector<std::vector<UPoly>> um;
        for (const auto& row : q1.Q) {
          std::vector<UPoly> rr;
          for (const auto& e : row) rr.push_back(to_upoly(e, 0));
          um.push_back(std::move(rr));
        }
        std::vector<detail::CorankBranch> br;
        detail::corank_dynamic(um, UPoly::x(), br);
        return br.front().corank;
      }();
      SpecialPointClass c;
      c.minpoly = Polynomial::variable(q1.param_ring, 0);
      c.degree = 1;
      c.multiplicity = mult;
      c.corank = rk;
      c.dinfty = mult == 1 && rk == 1;
      special.push_back(c);
    }

    // Cross-check: points with s != 0 and with t != 0 are the same set.
    auto nonzero_count = [&](const SpecialPoints& sp, const UPoly& d) {
      return sp.total_points() - (d(zero) == 0 ? 1 : 0);
    };
    const std::size_t n0 = nonzero_count(sp0, d0), n1 = nonzero_count(sp1, d1);
    std::size_t total = 0;
    for (const auto& c : special) total += c.degree;
    r.trace.push_back({"cross_check", std::to_string(n0) + " points with " + c0.coordinate + " != 0, " +
                                          std::to_string(n1) + " with " + c1.coordinate + " != 0; " +
                                          std::to_string(total) + " special points in total"});
    if (n0 != n1) {
      detail::mark_unsupported(r, "special points seen from the two charts disagree");
      detail::finish(r);
      return r;
    }

    for (const auto& c : special)
      r.special_points.push_back(
          {c.minpoly.to_string(), c.degree, c.multiplicity, c.corank, c.class_name()});

    // Transversal Milnor number at a generic parameter value.
    std::size_t transversal_mu = 0;
    {
      SeededRng rng(mix_seed(opt.seed, 0x7a5));
      Rational cval;
      do {
        cval = make_rational(rng.nonzero(30), rng.uniform(1, 5));
      } while (d0(cval) == 0);
      std::vector<std::string> tv(q0.vars.begin(), q0.vars.end());
      const RingPtr tr = make_ring(tv);
      const Polynomial slice = change_ring(specialize(*h0.hypersurface, {{h0.coordinate, cval}}), tr);
      const Multiplicity mu = milnor_hypersurface(slice, true, bo);
      if (!mu.is_finite()) {
        detail::mark_unsupported(r, "transversal slice is not an isolated singularity");
        detail::finish(r);
        return r;
      }
      transversal_mu = mu.value();
      r.trace.push_back({"transversal", "slice at " + h0.coordinate + " = " + to_string(cval) +
                                            ": mu = " + std::to_string(transversal_mu)});
    }

    const AxisClass axis = classify_axis(q1, *pert, opt.seed, bo);
    r.axis = axis;
    r.trace.push_back({"axis", detail::axis_string(axis)});

    // Y* for the first chart and the polar-curve genericity witness.
    {
      bool done = false;
      for (unsigned attempt = 0; attempt < opt.max_reseeds && !done; ++attempt) {
        auto ys = ystar_reduction(c0, ystar_combination(opt.seed, attempt), bo);
        if (auto* rs = std::get_if<Reseed>(&ys)) {
          r.trace.push_back({"reseed", "Y*: " + rs->reason});
          continue;
        }
        const YStar& y = std::get<YStar>(ys);
        const Ideal sing_y0 = singular_locus_ideal(c0.equations, 3);
        const Ideal sing_ys = singular_locus_ideal(y.ystar, 2);
        bool contained = true;
        for (const auto& g : sing_y0.generators())
          if (!radical_contains(sing_ys, g, bo)) {
            contained = false;
            break;
          }
        r.trace.push_back({"ystar", std::string(y.singular_dimension ? "Y* singular in dimension " +
                                                                           std::to_string(*y.singular_dimension)
                                                                     : "Y* smooth") +
                                        "; Sing(Y*) inside Sing(Y0): " + (contained ? "yes" : "no")});
        if (!contained) {
          r.trace.push_back({"reseed", "Y*: singular locus not contained in that of the transform"});
          continue;
        }
        done = true;
      }
      if (!done) throw ResourceError("no admissible Y* combination within the reseed cap");
    }
    {
      bool done = false;
      for (unsigned attempt = 0; attempt < opt.max_reseeds && !done; ++attempt) {
        SeededRng rng(mix_seed(opt.seed, 0xbe0d + attempt));
        std::vector<Rational> bend;
        for (std::size_t i = 0; i + 1 < h1.hypersurface_ring->size(); ++i)
          bend.push_back(make_rational(rng.uniform(-9, 9), rng.uniform(1, 5)));
        const PolarCurve pc = polar_curve(*h1.hypersurface, {}, bend, bo);
        std::string bs;
        for (const auto& b : bend) bs += (bs.empty() ? "" : ",") + to_string(b);
        r.trace.push_back({"polar_curve", "chart 1 bend (" + bs + "): dimension " +
                                              (pc.dimension ? std::to_string(*pc.dimension) : "empty") +
                                              (pc.is_generic ? ", generic" : ", reseed")});
        done = pc.is_generic;
      }
      if (!done) throw ResourceError("no generic bend for the polar curve within the reseed cap");
    }

    std::vector<BoundaryPiece> pieces;
    for (const auto& c : special) {
      if (c.dinfty) pieces.push_back(BoundaryPiece::d_infinity(n, c.degree));
      else pieces.push_back({BoundaryPiece::Kind::special_point, n, std::nullopt, false, c.degree});
    }
    const AbelianGroup transversal = AbelianGroup::free(transversal_mu);
    if (transversal_mu != 1) {
      detail::mark_unsupported(r, "transversal singularity is not of type A_1 (mu = " +
                                      std::to_string(transversal_mu) + ")");
      detail::finish(r);
      return r;
    }
    const AssembledHomology asm_h = assemble_rank1_homology(n, pieces, axis, transversal);
    if (!asm_h.supported) {
      detail::mark_unsupported(r, asm_h.reason);
      detail::finish(r);
      return r;
    }
    detail::fill_from_groups(r, asm_h.homology);
    r.trace.push_back({"assembly", "rank-one perturbation: two top-degree cycles per D_infinity point, one "
                                   "vertical class in degree 2"});
    r.trace.push_back({"transfer", "the residual singularity at the axis is at most an ICIS, so the "
                                   "second smoothing parameter leaves degrees <= 2 unchanged"});
  } catch (const NonIsolatedError& e) {
    detail::mark_unsupported(r, e.what());
  }
  detail::finish(r);
  return r;
}

}  // namespace detvan
