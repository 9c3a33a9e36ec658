#include <gtest/gtest.h>

#include "detvan/exprparse.hpp"
#include "detvan/monomial.hpp"
#include "detvan/polynomial.hpp"
#include "detvan/univariate.hpp"
#include "oracles.hpp"

using namespace detvan;

namespace {

Monomial mono(std::initializer_list<std::uint32_t> e) {
  Monomial m(e.size());
  std::size_t i = 0;
  for (auto v : e) m.set(i++, v);
  return m;
}

UPoly upoly(std::initializer_list<long> coeffs) {
  std::vector<Rational> c;
  for (long v : coeffs) c.emplace_back(v);
  return UPoly(c);
}

}  // namespace

TEST(Monomial, DividesAndLcm) {
  const Monomial a = mono({1, 2, 0}), b = mono({2, 1, 3});
  EXPECT_FALSE(a.divides(b));
  EXPECT_TRUE(a.divides(lcm(a, b)));
  EXPECT_TRUE(b.divides(lcm(a, b)));
  EXPECT_EQ(lcm(a, b), mono({2, 2, 3}));
  EXPECT_EQ((a * b) / b, a);
  EXPECT_TRUE(mono({1, 0, 0}).coprime(mono({0, 4, 1})));
  EXPECT_FALSE(a.coprime(b));
  EXPECT_EQ(a.degree(), 3u);
}

TEST(MonomialOrder, DegrevlexBreaksTiesOnLastVariable) {
  const auto o = MonomialOrder::degrevlex();
  // x*z < y^2 in degrevlex on (x, y, z)
  EXPECT_TRUE(o.greater(mono({0, 2, 0}), mono({1, 0, 1})));
  EXPECT_TRUE(o.greater(mono({2, 0, 0}), mono({0, 2, 0})));
  EXPECT_TRUE(o.greater(mono({0, 0, 3}), mono({1, 1, 0})));
}

TEST(MonomialOrder, LocalOrderPrefersLowDegree) {
  const auto o = MonomialOrder::negdegrevlex();
  EXPECT_FALSE(o.is_global());
  EXPECT_TRUE(o.greater(mono({1, 0}), mono({2, 0})));
  EXPECT_TRUE(o.greater(mono({0, 0}), mono({0, 1})));
}

TEST(MonomialOrder, EliminationBlockDominates) {
  const auto o = MonomialOrder::elimination(1);
  EXPECT_TRUE(o.greater(mono({1, 0, 0}), mono({0, 5, 5})));
  EXPECT_TRUE(o.greater(mono({1, 0, 1}), mono({1, 0, 0})));
}

TEST(MonomialOrder, PropertyTotalAndMultiplicative) {
  oracle::Gen g(11);
  for (const auto& o : {MonomialOrder::degrevlex(), MonomialOrder::negdegrevlex(), MonomialOrder::elimination(2)}) {
    for (int k = 0; k < 400; ++k) {
      Monomial a(4), b(4), c(4);
      for (std::size_t i = 0; i < 4; ++i) {
        a.set(i, static_cast<std::uint32_t>(g.integer(0, 3)));
        b.set(i, static_cast<std::uint32_t>(g.integer(0, 3)));
        c.set(i, static_cast<std::uint32_t>(g.integer(0, 3)));
      }
      const int ab = o.compare(a, b);
      EXPECT_EQ(ab, -o.compare(b, a));
      EXPECT_EQ(ab == 0, a == b);
      EXPECT_EQ(o.compare(a * c, b * c), ab);
      if (o.compare(a, b) > 0 && o.compare(b, c) > 0) EXPECT_GT(o.compare(a, c), 0);
    }
  }
}

TEST(Polynomial, RingAxiomsOnRandomInputs) {
  const RingPtr r = make_ring({"x", "y", "z"});
  oracle::Gen g(5);
  for (int k = 0; k < 150; ++k) {
    const Polynomial a = g.poly(r, 4, 0, 3), b = g.poly(r, 4, 0, 3), c = g.poly(r, 3, 0, 2);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(-(-a), a);
  }
}

TEST(Polynomial, DerivativeProductRule) {
  const RingPtr r = make_ring({"x", "y"});
  oracle::Gen g(6);
  for (int k = 0; k < 100; ++k) {
    const Polynomial a = g.poly(r, 4, 0, 4), b = g.poly(r, 4, 0, 4);
    for (std::size_t v = 0; v < 2; ++v)
      EXPECT_EQ(differentiate(a * b, v), differentiate(a, v) * b + a * differentiate(b, v));
  }
}

TEST(Polynomial, EvaluationIsAHomomorphism) {
  const RingPtr r = make_ring({"x", "y", "z"});
  oracle::Gen g(7);
  for (int k = 0; k < 100; ++k) {
    const Polynomial a = g.poly(r, 3, 0, 3), b = g.poly(r, 3, 0, 3);
    const std::map<std::string, Rational> pt{
        {"x", make_rational(g.integer(-5, 5), g.integer(1, 4))},
        {"y", make_rational(g.integer(-5, 5), g.integer(1, 4))},
        {"z", make_rational(g.integer(-5, 5), 1)}};
    EXPECT_EQ(evaluate_rational(a * b, pt), evaluate_rational(a, pt) * evaluate_rational(b, pt));
    EXPECT_EQ(evaluate_rational(a + b, pt), evaluate_rational(a, pt) + evaluate_rational(b, pt));
    EXPECT_TRUE(specialize(a, pt).is_constant());
    EXPECT_EQ(specialize(a, pt).constant_term(), evaluate_rational(a, pt));
  }
}

TEST(Polynomial, SubstituteComposes) {
  const RingPtr r = make_ring({"s", "x", "y"});
  const Polynomial s = Polynomial::variable(r, "s"), x = Polynomial::variable(r, "x"),
                   y = Polynomial::variable(r, "y");
  const Polynomial f = x * x + s * y;
  const Polynomial got = substitute(f, {{"x", s * y}, {"y", x - y}});
  EXPECT_EQ(got, s * s * y * y + s * x - s * y);
}

TEST(Polynomial, SubstituteIntoSmallerRing) {
  const RingPtr big = make_ring({"s", "v", "x"});
  const RingPtr small = make_ring({"s", "x"});
  const Polynomial f = parse_poly("v^2 + s*x", big);
  const Polynomial sx = -(Polynomial::variable(small, "s") * Polynomial::variable(small, "x"));
  const Polynomial got = substitute(f, {{"v", sx}});
  EXPECT_TRUE(same_ring(got.ring(), small));
  EXPECT_EQ(got.to_string(), "s^2*x^2+s*x");
}

TEST(Polynomial, ChangeRingRejectsMissingVariable) {
  const Polynomial f = parse_poly("x*y", std::vector<std::string>{"x", "y"});
  EXPECT_THROW(change_ring(f, make_ring({"x"})), StructuralError);
  EXPECT_EQ(change_ring(f, make_ring({"y", "z", "x"})).to_string(), "y*x");
}

TEST(Polynomial, MismatchedRingsThrow) {
  const Polynomial a = Polynomial::variable(make_ring({"x"}), 0);
  const Polynomial b = Polynomial::variable(make_ring({"y"}), 0);
  EXPECT_THROW(a + b, StructuralError);
}

TEST(Polynomial, TranslateMovesPointToOrigin) {
  const RingPtr r = make_ring({"t", "v"});
  const Polynomial f = parse_poly("t^2 - 2*t + 1 + v", r);
  EXPECT_EQ(translate(f, 0, Rational(1)), parse_poly("t^2 + v", r));
}

TEST(Polynomial, RenderRoundTripsIntegerCoefficients) {
  const RingPtr r = make_ring({"v", "w", "x", "y", "z"});
  oracle::Gen g(8);
  for (int k = 0; k < 200; ++k) {
    const Polynomial p = g.poly(r, 5, 0, 4, 30);
    EXPECT_EQ(parse_poly(p.to_string(), r), p) << p.to_string();
  }
}

TEST(Polynomial, OrderAndDegree) {
  const RingPtr r = make_ring({"x", "y"});
  const Polynomial f = parse_poly("x^2*y + x^5 + y^3", r);
  EXPECT_EQ(f.total_degree(), 5u);
  EXPECT_EQ(f.order(), 3u);
  EXPECT_EQ(f.degree_in(1), 3u);
}

TEST(UPoly, DivmodIdentity) {
  oracle::Gen g(9);
  for (int k = 0; k < 200; ++k) {
    std::vector<Rational> a, b;
    for (int i = 0; i < g.integer(1, 7); ++i) a.emplace_back(g.integer(-9, 9));
    for (int i = 0; i < g.integer(1, 4); ++i) b.emplace_back(g.integer(-9, 9));
    b.push_back(Rational(g.nonzero(5)));
    const UPoly A(a), B(b);
    const auto [q, rem] = divmod(A, B);
    EXPECT_TRUE((q * B + rem - A).is_zero());
    EXPECT_LT(rem.degree(), B.degree());
  }
}

TEST(UPoly, GcdOfProducts) {
  const UPoly common = upoly({-1, 0, 1});  // x^2 - 1
  const UPoly a = common * upoly({3, 1}), b = common * upoly({0, 0, 2});
  EXPECT_EQ(gcd(a, b), common);
}

TEST(UPoly, SquarefreeFactorsReconstruct) {
  oracle::Gen g(10);
  for (int k = 0; k < 60; ++k) {
    UPoly f = UPoly::constant(Rational(g.nonzero(4)));
    const int nf = static_cast<int>(g.integer(1, 3));
    for (int i = 0; i < nf; ++i) {
      const UPoly lin = upoly({g.integer(-6, 6), 1});
      const auto m = g.integer(1, 3);
      for (long j = 0; j < m; ++j) f = f * lin;
    }
    const auto parts = squarefree_decompose(f);
    UPoly back = UPoly::constant(Rational(1));
    for (const auto& p : parts) {
      EXPECT_EQ(gcd(p.factor, p.factor.derivative()).degree(), 0);
      for (unsigned j = 0; j < p.multiplicity; ++j) back = back * p.factor;
    }
    EXPECT_EQ(back, f.monic());
  }
}

TEST(UPoly, YunOnKnownInput) {
  // (x - 1) (x + 2)^3
  const UPoly f = upoly({-1, 1}) * upoly({2, 1}) * upoly({2, 1}) * upoly({2, 1});
  const auto parts = squarefree_decompose(f);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0].multiplicity, 1u);
  EXPECT_EQ(parts[0].factor, upoly({-1, 1}));
  EXPECT_EQ(parts[1].multiplicity, 3u);
  EXPECT_EQ(parts[1].factor, upoly({2, 1}));
}

TEST(UPoly, RationalRoots) {
  const UPoly f = upoly({-1, 0, 2}) * upoly({3, 2}) * upoly({0, 1});  // (2x^2-1)(2x+3)x
  auto roots = rational_roots(f);
  std::sort(roots.begin(), roots.end());
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_EQ(roots[0], Rational(-3, 2));
  EXPECT_EQ(roots[1], Rational(0));
  EXPECT_TRUE(rational_roots(upoly({-2, 0, 1})).empty());
}

TEST(Rng, DeterministicPerSeed) {
  SeededRng a(42), b(42), c(43);
  bool differs = false;
  for (int i = 0; i < 50; ++i) {
    const long x = a.uniform(-100, 100);
    EXPECT_EQ(x, b.uniform(-100, 100));
    if (x != c.uniform(-100, 100)) differs = true;
  }
  EXPECT_TRUE(differs);
  EXPECT_NE(mix_seed(1, 2), mix_seed(1, 3));
}
