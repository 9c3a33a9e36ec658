#include <gtest/gtest.h>

#include "detvan/abelian.hpp"
#include "oracles.hpp"

using namespace detvan;

namespace {

IntMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<Integer>> r;
  for (auto row : rows) {
    std::vector<Integer> v;
    for (long e : row) v.emplace_back(e);
    r.push_back(std::move(v));
  }
  return IntMatrix::from_rows(r);
}

void expect_smith(const IntMatrix& M) {
  const SmithForm f = smith_normal_form(M);
  EXPECT_EQ(f.U * M * f.V, f.S);
  EXPECT_EQ(abs(determinant(f.U)), 1);
  EXPECT_EQ(abs(determinant(f.V)), 1);
  const std::size_t d = std::min(M.rows(), M.cols());
  for (std::size_t i = 0; i < f.S.rows(); ++i)
    for (std::size_t j = 0; j < f.S.cols(); ++j)
      if (i != j) EXPECT_EQ(f.S(i, j), 0);
  for (std::size_t i = 0; i < d; ++i) {
    EXPECT_GE(f.S(i, i), 0);
    if (i + 1 < d && f.S(i, i) != 0) EXPECT_TRUE(mpz_divisible_p(f.S(i + 1, i + 1).get_mpz_t(), f.S(i, i).get_mpz_t()));
    if (f.S(i, i) == 0 && i + 1 < d) EXPECT_EQ(f.S(i + 1, i + 1), 0);
  }
  EXPECT_EQ(f.rank, oracle::dense_rank(M));
}

}  // namespace

TEST(Smith, SmallExamples) {
  const auto f = smith_normal_form(mat({{2, 0}, {0, 3}}));
  EXPECT_EQ(f.S, mat({{1, 0}, {0, 6}}));
  EXPECT_EQ(smith_normal_form(mat({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}})).S,
            mat({{2, 0, 0}, {0, 6, 0}, {0, 0, 12}}));
  EXPECT_EQ(smith_normal_form(mat({{0, 0}, {0, 0}})).rank, 0u);
}

TEST(Smith, PropertyRandomMatrices) {
  oracle::Gen g(61);
  for (int k = 0; k < 300; ++k) {
    const auto r = static_cast<std::size_t>(g.integer(1, 6));
    const auto c = static_cast<std::size_t>(g.integer(1, 6));
    expect_smith(g.int_matrix(r, c, 20));
  }
}

TEST(Smith, RankDeficientInputs) {
  oracle::Gen g(62);
  for (int k = 0; k < 60; ++k) {
    const IntMatrix a = g.int_matrix(5, 2, 9), b = g.int_matrix(2, 4, 9);
    expect_smith(a * b);
  }
}

TEST(Determinant, MatchesCofactorOn3x3) {
  oracle::Gen g(63);
  for (int k = 0; k < 100; ++k) {
    const IntMatrix m = g.int_matrix(3, 3, 20);
    const Integer expect = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    EXPECT_EQ(determinant(m), expect);
  }
}

TEST(AbelianGroup, NormalizesToInvariantFactors) {
  EXPECT_EQ(AbelianGroup(0, {2, 3}), AbelianGroup(0, {6}));
  EXPECT_EQ(AbelianGroup(1, {4, 6}).to_string(), "Z + Z/2 + Z/12");
  EXPECT_EQ(AbelianGroup(0, {1, 0}).to_string(), "Z");
  EXPECT_EQ(AbelianGroup::free(14).to_string(), "Z^14");
  EXPECT_EQ(AbelianGroup::zero().to_string(), "0");
  EXPECT_EQ(AbelianGroup::free(2) + AbelianGroup(0, {2}), AbelianGroup(2, {2}));
}

TEST(KerCoker, ZeroAndInvertibleMaps) {
  const auto a = ker_coker(mat({{2, 0}, {0, 3}}));
  EXPECT_EQ(a.kernel_rank, 0u);
  EXPECT_EQ(a.cokernel, AbelianGroup(0, {6}));
  const auto b = ker_coker(IntMatrix(2, 3));
  EXPECT_EQ(b.kernel_rank, 3u);
  EXPECT_EQ(b.cokernel, AbelianGroup::free(2));
}

TEST(Iota1, KernelRankOneAndSurjective) {
  for (std::size_t N = 1; N <= 20; ++N) {
    const auto kc = ker_coker(iota1_matrix(N));
    EXPECT_EQ(kc.kernel_rank, 1u);
    EXPECT_TRUE(kc.cokernel.is_zero());
  }
}

TEST(Wang, ReflectionMonodromy) {
  // T = -1 on the top class of the fibre.
  IntMatrix t(1, 1);
  t(0, 0) = -1;
  const auto h3 = wang_homology(t, 3);
  EXPECT_EQ(h3.groups.at(3), AbelianGroup::zero());
  EXPECT_EQ(h3.groups.at(2), AbelianGroup(0, {2}));
  EXPECT_EQ(h3.groups.at(1), AbelianGroup::free(1));
  const auto id = wang_homology(IntMatrix::identity(2), 3);
  EXPECT_EQ(id.groups.at(3), AbelianGroup::free(2));
  EXPECT_EQ(id.groups.at(2), AbelianGroup::free(2));
}

TEST(Assembly, SevenPointConfiguration) {
  std::vector<BoundaryPiece> pieces{BoundaryPiece::d_infinity(3, 7)};
  const auto h = assemble_rank1_homology(3, pieces, AxisClass::a_infinity(), AbelianGroup::free(1));
  ASSERT_TRUE(h.supported);
  EXPECT_EQ(h.homology.groups.at(3), AbelianGroup::free(14));
  EXPECT_EQ(h.homology.groups.at(2), AbelianGroup::free(1));
  EXPECT_EQ(h.homology.groups.at(1), AbelianGroup::zero());
  EXPECT_EQ(h.vertical_rank, 1u);
}

TEST(Assembly, AxisRemovedMode) {
  for (std::size_t k = 1; k <= 12; ++k) {
    const auto h = assemble_rank1_homology(3, {BoundaryPiece::d_infinity(3, k)}, AxisClass::a_infinity(),
                                           AbelianGroup::free(1), false);
    ASSERT_TRUE(h.supported);
    EXPECT_EQ(h.homology.betti(3), 2 * k - 1);
    EXPECT_EQ(h.homology.betti(2), 0u);
  }
  const auto none = assemble_rank1_homology(3, {}, AxisClass::a_infinity(), AbelianGroup::free(1), false);
  EXPECT_EQ(none.homology.groups.at(2), AbelianGroup::free(1));
}

TEST(Assembly, PiecesSplitAcrossClassesAddUp) {
  const auto a = assemble_rank1_homology(3, {BoundaryPiece::d_infinity(3, 1), BoundaryPiece::d_infinity(3, 6)},
                                         AxisClass::a_infinity(), AbelianGroup::free(1));
  EXPECT_EQ(a.homology.betti(3), 14u);
}

TEST(Assembly, UnsupportedConfigurationsKeepOnlyGuaranteedFacts) {
  const BoundaryPiece bad{BoundaryPiece::Kind::special_point, 3, std::nullopt, false, 1};
  for (const auto& h : {assemble_rank1_homology(3, {bad}, AxisClass::a_infinity(), AbelianGroup::free(1)),
                        assemble_rank1_homology(3, {BoundaryPiece::d_infinity(3, 2)}, AxisClass::icis(3),
                                                AbelianGroup::free(1))}) {
    EXPECT_FALSE(h.supported);
    EXPECT_FALSE(h.reason.empty());
    EXPECT_EQ(h.known_betti.count(3), 0u);
    EXPECT_EQ(h.known_betti.at(0), 1u);
    EXPECT_EQ(h.known_betti.at(1), 0u);
    EXPECT_EQ(h.known_betti.at(2), 1u);
  }
  const auto surf = assemble_rank1_homology(2, {BoundaryPiece::d_infinity(2, 3)}, AxisClass::a_infinity(),
                                            AbelianGroup::free(1));
  EXPECT_FALSE(surf.supported);
  EXPECT_EQ(surf.known_betti.count(2), 0u);
}

TEST(Assembly, RejectsMalformedPieces) {
  BoundaryPiece p = BoundaryPiece::d_infinity(3, 1);
  p.monodromy = IntMatrix::identity(2);
  EXPECT_THROW(assemble_rank1_homology(3, {p}, AxisClass::a_infinity(), AbelianGroup::free(1)), StructuralError);
  EXPECT_THROW(assemble_rank1_homology(4, {}, AxisClass::a_infinity(), AbelianGroup::free(1)), DomainError);
}
