#include <gtest/gtest.h>

#include "detvan/exprparse.hpp"
#include "oracles.hpp"

using namespace detvan;

namespace {

const RingPtr& ring5() {
  static const RingPtr r = make_ring({"v", "w", "x", "y", "z"});
  return r;
}

std::size_t error_offset(std::string_view src) {
  try {
    parse_poly(src, ring5());
  } catch (const ParseError& e) {
    return e.offset();
  }
  ADD_FAILURE() << "no ParseError for '" << src << "'";
  return 0;
}

}  // namespace

TEST(ExprParse, MatrixEntryStyle) {
  const Polynomial f = parse_poly("v^2+w^2+z^2", ring5());
  EXPECT_EQ(f.term_count(), 3u);
  EXPECT_EQ(parse_poly("-2*x*y", ring5()).to_string(), "-2*x*y");
}

TEST(ExprParse, PrecedenceAndUnaryMinus) {
  const RingPtr r = make_ring({"x", "y"});
  EXPECT_EQ(parse_poly("-x^2", r), -parse_poly("x*x", r));
  EXPECT_EQ(parse_poly("(x+y)^2", r), parse_poly("x^2 + 2*x*y + y^2", r));
  EXPECT_EQ(parse_poly("x - y - x", r), -parse_poly("y", r));
  EXPECT_EQ(parse_poly("2*3*x", r), parse_poly("6*x", r));
  EXPECT_EQ(parse_poly("--x", r), parse_poly("x", r));
  EXPECT_EQ(parse_poly("x^0", r), parse_poly("1", r));
}

TEST(ExprParse, WhitespaceIsIgnored) {
  const RingPtr r = make_ring({"x", "y"});
  EXPECT_EQ(parse_poly("  x * y  +\t1 ", r), parse_poly("x*y+1", r));
}

TEST(ExprParse, BigIntegerCoefficients) {
  const RingPtr r = make_ring({"x"});
  const Polynomial f = parse_poly("123456789012345678901234567890*x", r);
  EXPECT_EQ(f.to_string(), "123456789012345678901234567890*x");
}

TEST(ExprParse, UnknownVariableReportsOffset) {
  EXPECT_EQ(error_offset("x + q"), 4u);
  try {
    parse_poly("x + q", ring5());
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("unknown variable 'q'"), std::string::npos);
  }
}

TEST(ExprParse, MalformedInputs) {
  EXPECT_EQ(error_offset("x +"), 3u);
  error_offset("(x + y");
  error_offset("x y");
  error_offset("x^y");
  error_offset("");
  error_offset("x ** 2");
  error_offset("3.5*x");
}

TEST(ExprParse, RoundTripRandom) {
  oracle::Gen g(21);
  for (int k = 0; k < 300; ++k) {
    const Polynomial p = g.poly(ring5(), static_cast<std::size_t>(g.integer(1, 6)), 0, 5, 100);
    EXPECT_EQ(parse_poly(p.to_string(), ring5()), p);
  }
}

TEST(ExprParse, VariableNamesWithDigitsAndUnderscores) {
  const RingPtr r = make_ring({"x1", "x_2"});
  EXPECT_EQ(parse_poly("x1*x_2", r).to_string(), "x1*x_2");
}
