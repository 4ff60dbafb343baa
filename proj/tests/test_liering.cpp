#include <gtest/gtest.h>

#include <map>
#include <random>

#include "lazard/liering.hpp"

using namespace lazard;

namespace {

LieRingSC heisenberg(int p) {
  PShape s(p, {1, 1, 1});
  LieRingSC L(s);
  L.setBracket(0, 1, s.gen(2));
  return L;
}

// [g1, g_j] = g_{j+1}: class n - 1.
LieRingSC filiform(int p, int n) {
  std::vector<int> e(n, 1);
  PShape s(p, e);
  LieRingSC L(s);
  for (int j = 1; j + 1 < n; ++j) L.setBracket(0, j, s.gen(j + 1));
  return L;
}

// Upper unitriangular 3x3 matrices over F_p, elements (a, b, c) with
// (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab'), encoded a + p b + p^2 c.
FinGroup unitriangular(int p) {
  const Index n = static_cast<Index>(p * p * p);
  std::vector<Index> t(static_cast<std::size_t>(n) * n);
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) {
      int a = x % p, b = (x / p) % p, c = x / (p * p);
      int a2 = y % p, b2 = (y / p) % p, c2 = y / (p * p);
      t[static_cast<std::size_t>(x) * n + y] = static_cast<Index>((a + a2) % p + p * ((b + b2) % p) + p * p * ((c + c2 + a * b2) % p));
    }
  return FinGroup(n, t, 0);
}

std::map<Index, int> orderCensus(const FinGroup& g) {
  std::map<Index, int> m;
  for (Index a = 0; a < g.order(); ++a) ++m[g.elementOrder(a)];
  return m;
}

PVec randomVec(const PShape& s, std::mt19937& rng) { return s.at(static_cast<Index>(rng() % s.order())); }

Subset lieClosure(const LieRingSC& L, std::vector<PVec> gens) {
  const PShape& sh = L.shape();
  Subset s = additiveSpan(sh, gens);
  while (true) {
    auto m = members(sh, s);
    std::vector<PVec> more = m;
    for (const PVec& a : gens)
      for (const PVec& b : m) more.push_back(L.bracket(a, b));
    Subset t = additiveSpan(sh, more);
    if (t == s) return s;
    s = t;
    gens = spanGenerators(sh, s);
  }
}

}  // namespace

TEST(LieRing, VerifySmallRings) {
  EXPECT_TRUE(verifyLie(LieRingSC(PShape(3, {2, 1}))).ok);
  EXPECT_TRUE(verifyLie(heisenberg(5)).ok);
  PShape s(5, {1, 1});
  LieRingSC affine(s);
  affine.setBracket(0, 1, s.gen(0));
  EXPECT_TRUE(verifyLie(affine).ok);
  EXPECT_FALSE(isLazard(affine));

  LieRingSC bad(s);
  bad.setRaw(0, 1, s.gen(0));
  Report r = verifyLie(bad);
  EXPECT_FALSE(r.ok);

  PShape t(5, {2, 1});
  LieRingSC illDefined(t);
  illDefined.setBracket(0, 1, t.gen(0));  // 5 * g1 != 0 in Z/25
  EXPECT_FALSE(verifyLie(illDefined).ok);

  PShape u(5, {1, 1, 1});
  LieRingSC noJacobi(u);
  noJacobi.setBracket(0, 1, u.gen(2));
  noJacobi.setBracket(1, 2, u.gen(0));
  noJacobi.setBracket(0, 2, u.gen(0));
  EXPECT_FALSE(verifyLie(noJacobi).ok);
}

TEST(LieRing, LowerCentralSeries) {
  auto ab = lowerCentralSeries(LieRingSC(PShape(5, {1, 1})));
  EXPECT_TRUE(ab.nilpotent);
  EXPECT_EQ(ab.nilClass, 1);
  auto h = lowerCentralSeries(heisenberg(5));
  EXPECT_EQ(h.nilClass, 2);
  ASSERT_EQ(h.terms.size(), 2u);
  EXPECT_EQ(h.terms[1], additiveSpan(PShape(5, {1, 1, 1}), std::vector<PVec>{PShape(5, {1, 1, 1}).gen(2)}));
  PShape s(5, {1, 1});
  LieRingSC affine(s);
  affine.setBracket(0, 1, s.gen(0));
  auto a = lowerCentralSeries(affine);
  EXPECT_FALSE(a.nilpotent);
  EXPECT_EQ(a.terms.back().size(), 5u);
  auto trivial = lowerCentralSeries(LieRingSC(PShape(3, std::span<const int>{})));
  EXPECT_EQ(trivial.nilClass, 0);
}

TEST(LieRing, LazardPredicate) {
  EXPECT_TRUE(isLazard(heisenberg(5), canonicalFiltration(heisenberg(5))));
  EXPECT_FALSE(isLazard(filiform(3, 4)));
  EXPECT_TRUE(isLazard(filiform(5, 4)));
  LieRingSC c9(PShape(3, {2}));
  EXPECT_TRUE(isLazard(c9, canonicalFiltration(c9)));
  EXPECT_EQ(canonicalFiltration(c9).length(), 1);
  Filtration bogus = canonicalFiltration(heisenberg(5));
  bogus.terms.pop_back();
  bogus.terms.push_back(additiveSpan(PShape(5, {1, 1, 1}), std::vector<PVec>{PShape(5, {1, 1, 1}).gen(0)}));
  EXPECT_THROW(validateLieFiltration(heisenberg(5), bogus), Error);
}

TEST(LieRing, BchEval) {
  LieRingSC ab(PShape(5, {2, 1}));
  std::mt19937 rng(1);
  for (int t = 0; t < 50; ++t) {
    PVec a = randomVec(ab.shape(), rng), b = randomVec(ab.shape(), rng);
    EXPECT_EQ(bchEval(ab, 1, a, b), a + b);
  }
  LieRingSC h = heisenberg(5);
  const PShape& s = h.shape();
  EXPECT_EQ(bchEval(h, 2, s.gen(0), s.gen(1)), PVec(s, {1, 1, 3}));
  LieRingSC f = filiform(5, 4);
  for (int t = 0; t < 100; ++t) {
    PVec a = randomVec(f.shape(), rng);
    EXPECT_TRUE(bchEval(f, 3, a, -a).isZero());
  }
  EXPECT_THROW(bchEval(filiform(3, 4), 3, s.gen(0), s.gen(0)), NotLazardError);
}

TEST(LieRing, ConjugationIsExpAd) {
  std::mt19937 rng(2);
  for (const LieRingSC& L : {heisenberg(5), filiform(5, 4), filiform(7, 5)}) {
    const int k = lowerCentralSeries(L).nilClass;
    for (int t = 0; t < 50; ++t) {
      PVec a = randomVec(L.shape(), rng), b = randomVec(L.shape(), rng);
      EXPECT_EQ(bchEval(L, k, a, bchEval(L, k, b, -a)), endoExp(L.ad(a), k)(b));
    }
  }
}

TEST(LieRing, LazOfAbelianAndHeisenberg) {
  LieRingSC ab(PShape(3, {2, 1}));
  FinGroup g = laz(ab);
  LieRingTable T = toTable(ab);
  EXPECT_EQ(g.table(), T.addT);

  FinGroup h = laz(heisenberg(5));
  EXPECT_EQ(h.order(), 125u);
  EXPECT_TRUE(h.isAssociativeExhaustive());
  EXPECT_FALSE(h.isAbelian());
  EXPECT_EQ(h.exponent(), 5);
  EXPECT_EQ((orderCensus(h)), (std::map<Index, int>{{1, 1}, {5, 124}}));
  EXPECT_EQ(lowerCentralSeries(h).nilClass, 2);
  EXPECT_EQ(lowerCentralSeries(h).terms[1].size(), 5u);
}

TEST(LieRing, SerialAndParallelAgree) {
  LieRingSC f = filiform(5, 4);
  EXPECT_EQ(laz(f, Exec::Serial).table(), laz(f, Exec::Parallel).table());
  FinGroup g = laz(f);
  EXPECT_EQ(lazInv(g, Exec::Serial), lazInv(g, Exec::Parallel));
}

TEST(LieRing, GroupRoot) {
  std::vector<Index> t(625);
  for (Index a = 0; a < 25; ++a)
    for (Index b = 0; b < 25; ++b) t[a * 25 + b] = (a + b) % 25;
  FinGroup z25(25, t, 0);
  EXPECT_EQ(groupRoot(z25, 10, 1), 10u);
  EXPECT_EQ(groupRoot(z25, 10, 2), 5u);
  EXPECT_THROW(groupRoot(z25, 10, 5), Error);
  std::mt19937 rng(3);
  FinGroup h = laz(heisenberg(5));
  for (int t2 = 0; t2 < 50; ++t2) {
    Index x = static_cast<Index>(rng() % 125);
    std::int64_t n = 1 + static_cast<std::int64_t>(rng() % 40);
    if (n % 5 == 0) continue;
    EXPECT_EQ(h.pow(groupRoot(h, x, n), n), x);
  }
}

TEST(LieRing, RoundTrips) {
  for (const LieRingSC& L : {heisenberg(3), heisenberg(5), filiform(5, 4), filiform(7, 4), LieRingSC(PShape(7, {2, 1}))}) {
    FinGroup g = laz(L);
    LieRingTable back = lazInv(g);
    EXPECT_EQ(back, toTable(L));
    EXPECT_EQ(laz(back, lowerCentralSeries(L).nilClass), g);
  }
}

TEST(LieRing, ExtraspecialOfExponentThree) {
  FinGroup g = unitriangular(3);
  EXPECT_TRUE(g.isAssociativeExhaustive());
  EXPECT_EQ(g.exponent(), 3);
  LieRingTable T = lazInv(g);
  DecomposedLie d = decomposeLie(T);
  EXPECT_TRUE(d.report.ok) << d.report.str();
  EXPECT_EQ(d.iso.shape, PShape(3, {1, 1, 1}));
  auto s = lowerCentralSeries(d.sc);
  EXPECT_EQ(s.nilClass, 2);
  EXPECT_EQ(s.terms[1].size(), 3u);
  EXPECT_EQ(laz(T, 2), g);
}

TEST(LieRing, FunctorialityUnderTransport) {
  // phi permutes and shears generators of (5;[1,1,1,1]); transported ring L'.
  LieRingSC L = filiform(5, 4);
  const PShape& s = L.shape();
  Endo phi(s, {PVec(s, {1, 2, 0, 0}), PVec(s, {0, 1, 0, 3}), PVec(s, {0, 0, 1, 0}), PVec(s, {1, 0, 0, 1})});
  std::vector<PVec> img(s.order());
  std::vector<Index> inv(s.order());
  for (Index a = 0; a < s.order(); ++a) {
    img[a] = phi(s.at(a));
    inv[img[a].index()] = a;
  }
  LieRingSC L2(s);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) L2.setRaw(i, j, phi(L.bracket(s.at(inv[s.gen(i).index()]), s.at(inv[s.gen(j).index()]))));
  ASSERT_TRUE(verifyLie(L2).ok);
  FinGroup g1 = laz(L), g2 = laz(L2);
  for (Index a = 0; a < s.order(); ++a)
    for (Index b = 0; b < s.order(); ++b) ASSERT_EQ(img[g1.mul(a, b)].index(), g2.mul(img[a].index(), img[b].index()));
}

TEST(LieRing, SubringsAreSubgroups) {
  for (const LieRingSC& L : {heisenberg(3), heisenberg(5)}) {
    FinGroup g = laz(L);
    const PShape& s = L.shape();
    for (Index a = 0; a < s.order(); a += 3)
      for (Index b = a; b < s.order(); b += 7) {
        std::vector<Index> gens{a, b};
        EXPECT_EQ(lieClosure(L, {s.at(a), s.at(b)}), closure(g, gens));
      }
  }
}

TEST(LieRing, TableDecompositionRecoversStructureConstants) {
  LieRingSC L = filiform(5, 4);
  DecomposedLie d = decomposeLie(toTable(L));
  EXPECT_TRUE(d.report.ok);
  EXPECT_EQ(d.iso.shape, L.shape());
  EXPECT_EQ(d.sc, L);
}
