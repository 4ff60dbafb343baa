#include <gtest/gtest.h>

#include "lazard/catalog.hpp"
#include "lazard/error.hpp"

using namespace lazard;

namespace {

void checkShape(const PShape& s) {
  const FinGroup A = abelianGroup(s);
  const std::vector<SkewBrace> lam = enumerateBracesLambda(A);
  const std::vector<SkewBrace> hol = enumerateBracesHol(A);
  EXPECT_EQ(lam.size(), hol.size());
  std::vector<std::vector<Index>> lk, hk;
  for (const SkewBrace& B : lam) lk.push_back(braceKey(B));
  for (const SkewBrace& B : hol) hk.push_back(braceKey(B));
  std::sort(lk.begin(), lk.end());
  std::sort(hk.begin(), hk.end());
  EXPECT_EQ(lk, hk);

  const std::vector<PostLieRing> sc = enumeratePreLieSC(s);
  const std::vector<PostLieRing> aff = enumeratePreLieAff(s);
  EXPECT_EQ(sc, aff);
  EXPECT_EQ(sc.size(), lam.size());

  const Pairing pr = pairCatalogs(s, lam, sc);
  EXPECT_TRUE(pr.bijective);
  for (const std::string& msg : pr.problems) ADD_FAILURE() << msg;
}

}  // namespace

TEST(Enumerate, CyclicOfOrderFive) {
  const PShape s(5, {1});
  EXPECT_EQ(enumerateBracesLambda(abelianGroup(s)).size(), 1u);
  EXPECT_EQ(enumeratePreLieSC(s).size(), 1u);
  EXPECT_EQ(enumeratePreLieAff(s).size(), 1u);
  checkShape(s);
}

TEST(Enumerate, CyclicOfOrderNine) { checkShape(PShape(3, {2})); }

TEST(Enumerate, ElementaryOfOrderNine) { checkShape(PShape(3, {1, 1})); }

TEST(Enumerate, OrderTwentyFive) {
  checkShape(PShape(5, {2}));
  checkShape(PShape(5, {1, 1}));
}

TEST(Enumerate, CapRefusesLargeSearch) {
  EXPECT_THROW(enumeratePreLieSC(PShape(5, {1, 1, 1})), CapacityError);
}

TEST(Enumerate, SerialAndParallelAgree) {
  const FinGroup A = abelianGroup(PShape(5, {1, 1}));
  const auto a = enumerateBracesLambda(A, false, Exec::Serial);
  const auto b = enumerateBracesLambda(A, false, Exec::Parallel);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i], b[i]);
}

TEST(Catalog, Sizes) {
  EXPECT_GE(lieCatalog().size(), 50u);
  EXPECT_GE(postLieCatalog().size(), 50u);
  for (const NamedLie& e : lieCatalog()) EXPECT_TRUE(isLazard(e.ring)) << e.name;
  for (const NamedPostLie& e : postLieCatalog()) EXPECT_TRUE(isLazard(e.ring)) << e.name;
  for (const NamedBrace& e : braceCatalog()) EXPECT_TRUE(isLazard(e.brace)) << e.name;
}
