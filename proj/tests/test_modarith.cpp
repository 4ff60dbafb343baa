#include <gtest/gtest.h>

#include <map>
#include <random>

#include "lazard/modarith.hpp"

using namespace lazard;

namespace {

// Brute-force search for the inverse of a modulo m.
std::int64_t bruteInverse(std::int64_t a, std::int64_t m) {
  for (std::int64_t x = 0; x < m; ++x)
    if (mod(a * x, m) == 1) return x;
  return -1;
}

Endo randomEndo(const PShape& sh, std::mt19937& rng) {
  std::vector<PVec> im;
  for (int j = 0; j < sh.rank(); ++j) {
    std::vector<std::int64_t> c(sh.rank());
    for (int i = 0; i < sh.rank(); ++i) {
      // Scale so that p^{e_j} kills the image.
      std::int64_t scale = sh.exp(i) > sh.exp(j) ? ipow(sh.p(), sh.exp(i) - sh.exp(j)) : 1;
      c[i] = scale * static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(sh.modulus(i)));
    }
    im.emplace_back(sh, c);
  }
  return Endo(sh, im);
}

// Strictly lower-triangular in coordinates: nilpotent of index <= rank.
Endo randomStrictlyLower(const PShape& sh, std::mt19937& rng) {
  std::vector<PVec> im;
  for (int j = 0; j < sh.rank(); ++j) {
    std::vector<std::int64_t> c(sh.rank(), 0);
    for (int i = j + 1; i < sh.rank(); ++i) c[i] = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(sh.modulus(i)));
    im.emplace_back(sh, c);
  }
  return Endo(sh, im);
}

std::vector<Index> additionTable(const PShape& sh) {
  const auto n = static_cast<Index>(sh.order());
  std::vector<Index> t(static_cast<std::size_t>(n) * n);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) t[static_cast<std::size_t>(a) * n + b] = (sh.at(a) + sh.at(b)).index();
  return t;
}

std::map<Index, int> orderCensus(std::span<const Index> t, Index n, Index e) {
  std::map<Index, int> census;
  for (Index x = 0; x < n; ++x) {
    Index y = x, k = 1;
    while (y != e) {
      y = t[static_cast<std::size_t>(y) * n + x];
      ++k;
    }
    ++census[k];
  }
  return census;
}

}  // namespace

TEST(Modarith, VectorOps) {
  PShape s(5, {2});
  EXPECT_EQ(PVec(s, {20}) + PVec(s, {10}), PVec(s, {5}));
  PVec u(s, {17});
  EXPECT_TRUE((u + (-u)).isZero());
  PShape t(3, {2, 1});
  EXPECT_EQ(3 * PVec(t, {1, 1}), PVec(t, {3, 0}));
  EXPECT_THROW(PVec(s, {1}) + PVec(t, {1, 1}), Error);
}

TEST(Modarith, ShapeIndexing) {
  PShape s(3, {2, 1});
  EXPECT_EQ(s.order(), 27u);
  EXPECT_EQ(s.length(), 3);
  EXPECT_EQ(s.at(1), s.gen(0));
  EXPECT_EQ(s.at(9), s.gen(1));
  for (Index i = 0; i < 27; ++i) EXPECT_EQ(s.at(i).index(), i);
  EXPECT_EQ(s.str(), "(3;[2,1])");
  EXPECT_THROW(PShape(4, {1}), Error);
  EXPECT_THROW(PShape(3, {1, 2}), Error);
}

TEST(Modarith, ScalarAction) {
  PShape s25(5, {2});
  EXPECT_EQ(scalarAct(PScalar(2, 3), PVec(s25, {1})), PVec(s25, {9}));
  EXPECT_EQ(bruteInverse(3, 25) * 2 % 25, 9);
  PShape s5(5, {1});
  EXPECT_EQ(scalarAct(PScalar(1, 2), PVec(s5, {1})), PVec(s5, {3}));
  EXPECT_TRUE(scalarAct(PScalar(0), PVec(s25, {7})).isZero());
  EXPECT_THROW(scalarAct(PScalar(1, 5), PVec(s25, {1})), NotLazardError);
}

TEST(Modarith, ScalarActionDenominatorIdentity) {
  std::mt19937 rng(7);
  PShape s(7, {3, 2, 1});
  for (int trial = 0; trial < 200; ++trial) {
    std::int64_t num = static_cast<std::int64_t>(rng() % 200) - 100;
    std::int64_t den = 1 + static_cast<std::int64_t>(rng() % 60);
    if (den % 7 == 0) continue;
    PScalar q(num, den);
    PVec v = s.at(static_cast<Index>(rng() % s.order()));
    EXPECT_EQ(q.den() * scalarAct(q, v), q.num() * v);
  }
}

TEST(Modarith, ScalarArithmetic) {
  EXPECT_EQ(PScalar(2, -4), PScalar(-1, 2));
  EXPECT_EQ(PScalar(1, 2) + PScalar(1, 3), PScalar(5, 6));
  EXPECT_EQ(PScalar(1, 2) * PScalar(2, 3), PScalar(1, 3));
  EXPECT_EQ(PScalar::parse("-1/24"), PScalar(-1, 24));
  EXPECT_EQ(PScalar(-1, 2).str(), "-1/2");
  EXPECT_EQ(PScalar::parse("3").str(), "3/1");
}

TEST(Modarith, ModularHelpers) {
  for (std::int64_t a = 1; a < 125; ++a) {
    if (a % 5 == 0) {
      EXPECT_THROW(invMod(a, 125), Error);
    } else {
      EXPECT_EQ(invMod(a, 125), bruteInverse(a, 125));
    }
  }
  EXPECT_EQ(pValuation(250, 5), 3);
  EXPECT_EQ(powMod(3, 4, 7), 4);
}

TEST(Modarith, EndoRing) {
  PShape s(5, {1, 1});
  Endo id = Endo::identity(s), zero = Endo::zero(s);
  EXPECT_TRUE((id * zero).isZero());
  Endo swap(s, {s.gen(1), s.gen(0)});
  EXPECT_EQ(swap * swap, id);
  std::mt19937 rng(3);
  PShape t(3, {2, 1, 1});
  for (int trial = 0; trial < 50; ++trial) {
    Endo f = randomEndo(t, rng), g = randomEndo(t, rng), h = randomEndo(t, rng);
    Endo lhs = f * (g + h), rhs = f * g + f * h;
    for (int j = 0; j < t.rank(); ++j) EXPECT_EQ(lhs.image(j), rhs.image(j));
    for (Index x = 0; x < t.order(); ++x) EXPECT_EQ((f * g)(t.at(x)), f(g(t.at(x))));
  }
  EXPECT_THROW(Endo(PShape(5, {2, 1}), {PShape(5, {2, 1}).gen(0), PShape(5, {2, 1}).gen(0)}), Error);
}

TEST(Modarith, ExpLog) {
  PShape s(5, {2});
  EXPECT_EQ(endoExp(Endo::zero(s), 1), Endo::identity(s));
  Endo d(s, {PVec(s, {5})});
  EXPECT_EQ(endoExp(d, 2)(s.gen(0)), PVec(s, {6}));
  Endo f(s, {PVec(s, {6})});
  EXPECT_EQ(endoLog(f, 2)(s.gen(0)), PVec(s, {5}));
  EXPECT_TRUE(endoLog(Endo::identity(s), 1).isZero());
  EXPECT_THROW(endoExp(d, 5), NotLazardError);
  EXPECT_THROW(endoExp(Endo::identity(s), 3), NotLazardError);
}

TEST(Modarith, ExpLogRoundTrip) {
  std::mt19937 rng(11);
  PShape s(5, {1, 1, 1});
  for (int trial = 0; trial < 100; ++trial) {
    Endo d = randomStrictlyLower(s, rng);
    Endo e = endoExp(d, 3);
    EXPECT_EQ(endoLog(e, 3), d);
    EXPECT_EQ(endoExp(endoLog(e, 3), 3), e);
  }
}

TEST(Modarith, DecomposeCyclicAndElementary) {
  PShape c9(3, {2});
  auto d = abelianDecompose(additionTable(c9), 9);
  EXPECT_EQ(d.shape, PShape(3, {2}));
  PShape e9(3, {1, 1});
  EXPECT_EQ(abelianDecompose(additionTable(e9), 9).shape, PShape(3, {1, 1}));
}

TEST(Modarith, DecomposeRoundTripPermuted) {
  std::mt19937 rng(5);
  for (auto sh : {PShape(5, {2, 1}), PShape(3, {2, 1, 1}), PShape(3, {3, 1}), PShape(7, {1, 1})}) {
    const auto n = static_cast<Index>(sh.order());
    std::vector<Index> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Index> inv(n);
    for (Index i = 0; i < n; ++i) inv[perm[i]] = i;
    auto base = additionTable(sh);
    std::vector<Index> t(base.size());
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b) t[static_cast<std::size_t>(perm[a]) * n + perm[b]] = perm[base[static_cast<std::size_t>(a) * n + b]];
    auto d = abelianDecompose(t, n);
    EXPECT_EQ(d.shape, sh);
    EXPECT_EQ(orderCensus(t, n, perm[0]), orderCensus(base, n, 0));
    for (Index a = 0; a < n; ++a) {
      EXPECT_EQ(d.fromVec[d.toVec[a].index()], a);
      for (Index b = 0; b < n; ++b) EXPECT_EQ(d.toVec[t[static_cast<std::size_t>(a) * n + b]], d.toVec[a] + d.toVec[b]);
    }
  }
}

TEST(Modarith, DecomposeRejects) {
  // Z/6 is not a p-group.
  std::vector<Index> z6(36);
  for (Index a = 0; a < 6; ++a)
    for (Index b = 0; b < 6; ++b) z6[a * 6 + b] = (a + b) % 6;
  EXPECT_THROW(abelianDecompose(z6, 6), Error);
  // S3 is not abelian (composition of permutations of {0,1,2}).
  std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
  std::vector<Index> s3(36);
  for (Index a = 0; a < 6; ++a)
    for (Index b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      s3[a * 6 + b] = static_cast<Index>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  EXPECT_THROW(abelianDecompose(s3, 6), Error);
}

TEST(Modarith, RootOfUnity) {
  EXPECT_EQ(rootOfUnity(5, 1), 2);
  EXPECT_EQ(rootOfUnity(3, 2), 8);
  EXPECT_THROW(rootOfUnity(2, 3), Error);
  for (int p : {3, 5, 7}) {
    for (int e = 1; e <= 3; ++e) {
      const std::int64_t m = ipow(p, e);
      std::int64_t brute = -1;
      for (std::int64_t x = 2; x < m && brute < 0; ++x) {
        if (powMod(x, p - 1, m) != 1) continue;
        bool ok = true;
        for (int k = 1; k < p - 1 && ok; ++k) ok = (powMod(x, k, m) - 1) % p != 0;
        if (ok) brute = x;
      }
      const std::int64_t xi = rootOfUnity(p, e);
      EXPECT_EQ(xi, brute) << p << "^" << e;
      std::int64_t sum = 0;
      for (int i = 0; i <= p - 2; ++i) sum = mod(sum + powMod(xi, i, m), m);
      EXPECT_EQ(sum, 0);
    }
  }
}
