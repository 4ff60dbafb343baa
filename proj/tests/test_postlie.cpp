#include <gtest/gtest.h>

#include "lazard/postlie.hpp"

using namespace lazard;

namespace {

// (5;[1,1]) abelian with g1 ▷ g1 = g2.
PostLieRing squareShift() {
  PShape s(5, {1, 1});
  PostLieRing P{LieRingSC(s)};
  P.setTriangle(0, 0, s.gen(1));
  return P;
}

LieRingSC heisenberg(int p) {
  PShape s(p, {1, 1, 1});
  LieRingSC L(s);
  L.setBracket(0, 1, s.gen(2));
  return L;
}

// a ▷ b = -[a, b].
PostLieRing negatedBracket(const LieRingSC& L) {
  PostLieRing P(L);
  for (int i = 0; i < L.rank(); ++i)
    for (int j = 0; j < L.rank(); ++j) P.setTriangle(i, j, -L.structure(i, j));
  return P;
}

Subset span1(const PShape& s, int g) { return additiveSpan(s, std::vector<PVec>{s.gen(g)}); }

}  // namespace

TEST(PostLie, SquareShift) {
  PostLieRing P = squareShift();
  const PShape& s = P.shape();
  EXPECT_TRUE(verifyPostLie(P).ok);
  EXPECT_TRUE(P.isPreLie());
  EXPECT_EQ(lClass(P), 2);
  EXPECT_TRUE(isLazard(P));
  EXPECT_FALSE(isSquareFree(P));
  Substructures sub = substructures(P);
  EXPECT_EQ(sub.fix, span1(s, 1));
  EXPECT_EQ(sub.soc, span1(s, 1));
  EXPECT_EQ(sub.ann, span1(s, 1));
  EXPECT_EQ(idealType(P, span1(s, 1)), IdealKind::Ideal);
  EXPECT_EQ(idealType(P, span1(s, 0)), IdealKind::NotClosed);
  EXPECT_TRUE(verifyLeftMulHomomorphism(P).ok);

  Filtration adj = adjointFiltration(P);
  ASSERT_EQ(adj.length(), 2);
  EXPECT_EQ(adj.terms[0].size(), 25u);
  EXPECT_EQ(adj.terms[1], span1(s, 1));
}

TEST(PostLie, ZeroActionOnHeisenberg) {
  PostLieRing P(heisenberg(5));
  const PShape& s = P.shape();
  EXPECT_TRUE(verifyPostLie(P).ok);
  EXPECT_TRUE(P.isZeroAction());
  EXPECT_TRUE(isSquareFree(P));
  EXPECT_EQ(lClass(P), 2);
  Substructures sub = substructures(P);
  EXPECT_EQ(sub.fix.size(), 125u);
  EXPECT_EQ(sub.soc, span1(s, 2));
  EXPECT_EQ(sub.ann, span1(s, 2));
  EXPECT_EQ(idealType(P, span1(s, 0)), IdealKind::LeftIdeal);
  CircBound b = circNilpotencyBound(P);
  EXPECT_EQ(b.circClass, 2);
  EXPECT_TRUE(b.annContainsLast);
}

TEST(PostLie, NonNilpotentBase) {
  PShape s(5, {1, 1});
  LieRingSC L(s);
  L.setBracket(0, 1, s.gen(0));
  PostLieRing P(L);
  ASSERT_TRUE(verifyPostLie(P).ok);
  NilpotencyDecomposition d = lNilpotencyDecomposition(P);
  EXPECT_TRUE(d.leftNilpotent);
  EXPECT_FALSE(d.baseNilpotent);
  EXPECT_FALSE(d.lNilpotent);
  EXPECT_EQ(lClass(P), -1);
  EXPECT_FALSE(isLazard(P));
}

TEST(PostLie, NegatedBracket) {
  PostLieRing P = negatedBracket(heisenberg(5));
  EXPECT_TRUE(verifyPostLie(P).ok);
  EXPECT_TRUE(verifyLeftMulHomomorphism(P).ok);
  LieRingSC C = circRing(P);
  const PShape& s = P.shape();
  EXPECT_EQ(C.bracket(s.gen(0), s.gen(1)), -s.gen(2));
  EXPECT_EQ(lClass(P), 2);
  EXPECT_TRUE(rightNilpotent(P));
  EXPECT_EQ(substructures(P).soc.size(), 5u);
}

TEST(PostLie, RejectsBrokenAxioms) {
  PShape s(5, {1, 1});
  PostLieRing P{LieRingSC(s)};
  P.setTriangle(0, 0, s.gen(1));
  P.setTriangle(1, 0, s.gen(1));
  Report r = verifyPostLie(P);
  EXPECT_FALSE(r.ok);

  PShape t(5, {2, 1});
  PostLieRing Q{LieRingSC(t)};
  Q.setTriangle(1, 1, t.gen(0));  // 5 g2 = 0 but 5 g1 != 0
  EXPECT_FALSE(verifyPostLie(Q).ok);
}

TEST(PostLie, ClassThreeFiltrationOverSeven) {
  // g1 ▷ g1 = g2, g1 ▷ g2 = g3 on (7;[1,1,1]): left-symmetric, L-class 3.
  PShape s(7, {1, 1, 1});
  PostLieRing P{LieRingSC(s)};
  P.setTriangle(0, 0, s.gen(1));
  P.setTriangle(0, 1, s.gen(2));
  P.setTriangle(1, 0, s.gen(2));
  ASSERT_TRUE(verifyPostLie(P).ok) << verifyPostLie(P).str();
  EXPECT_EQ(lClass(P), 3);
  EXPECT_TRUE(isLazard(P));
  EXPECT_EQ(leftSeries(P).nilClass, 3);
  EXPECT_TRUE(verifyLeftMulHomomorphism(P).ok);
  Filtration adj = adjointFiltration(P);
  EXPECT_EQ(adj.length(), 3);
}
