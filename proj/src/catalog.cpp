#include "lazard/catalog.hpp"

#include <random>
#include <set>

namespace lazard {

LieRingSC heisenbergLie(int p) {
  PShape s(p, std::vector<int>{1, 1, 1});
  LieRingSC L(s);
  L.setBracket(0, 1, s.gen(2));
  return L;
}

LieRingSC filiformLie(int p, int n) {
  PShape s(p, std::vector<int>(n, 1));
  LieRingSC L(s);
  for (int j = 1; j + 1 < n; ++j) L.setBracket(0, j, s.gen(j + 1));
  return L;
}

PostLieRing radicalRing(int p, int e) {
  PShape s(p, std::vector<int>{e});
  PostLieRing P{LieRingSC(s)};
  P.setTriangle(0, 0, p * s.gen(0));
  return P;
}

PostLieRing squareShift(int p) {
  PShape s(p, std::vector<int>{1, 1});
  PostLieRing P{LieRingSC(s)};
  P.setTriangle(0, 0, s.gen(1));
  return P;
}

PostLieRing scaledBracket(const LieRingSC& L, std::int64_t s) {
  PostLieRing P(L);
  for (int i = 0; i < L.rank(); ++i)
    for (int j = 0; j < L.rank(); ++j) P.setTriangle(i, j, s * L.structure(i, j));
  return P;
}

FinGroup unitriangularGroup(int p) {
  const auto n = static_cast<Index>(p * p * p);
  std::vector<Index> t(static_cast<std::size_t>(n) * n);
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) {
      const Index a = x % p, b = (x / p) % p, c = x / (p * p);
      const Index a2 = y % p, b2 = (y / p) % p, c2 = y / (p * p);
      t[static_cast<std::size_t>(x) * n + y] = (a + a2) % p + p * ((b + b2) % p) + p * p * ((c + c2 + a * b2) % p);
    }
  return FinGroup(n, std::move(t), 0);
}

namespace {

std::string shapeName(const PShape& s) { return s.str(); }

// Random nilpotent Lie ring: [g_i, g_j] in the span of g_k, k > j.
LieRingSC randomLie(const PShape& s, std::mt19937& rng) {
  while (true) {
    LieRingSC L(s);
    for (int i = 0; i < s.rank(); ++i)
      for (int j = i + 1; j < s.rank(); ++j) {
        std::vector<std::int64_t> c(s.rank(), 0);
        for (int k = j + 1; k < s.rank(); ++k) c[k] = static_cast<std::int64_t>(rng() % s.modulus(k));
        L.setBracket(i, j, PVec(s, c));
      }
    if (!verifyLie(L).ok || L.isAbelian()) continue;
    const int k = lowerCentralSeries(L).nilClass;
    if (k < s.p() && k <= 3) return L;
  }
}

// Random ▷ with g_i ▷ g_j in the span of g_k, k > max(i, j), on base L.
PostLieRing randomPostLie(const LieRingSC& L, std::mt19937& rng, int tries) {
  const PShape& s = L.shape();
  for (int t = 0; t < tries; ++t) {
    PostLieRing P(L);
    bool nonzero = false;
    for (int i = 0; i < s.rank(); ++i)
      for (int j = 0; j < s.rank(); ++j) {
        std::vector<std::int64_t> c(s.rank(), 0);
        for (int k = std::max(i, j) + 1; k < s.rank(); ++k) {
          if (rng() % 3 == 0) continue;
          c[k] = static_cast<std::int64_t>(rng() % s.modulus(k));
          nonzero = nonzero || c[k] != 0;
        }
        P.setTriangle(i, j, PVec(s, c));
      }
    if (!nonzero || !verifyPostLie(P).ok) continue;
    const int k = lClass(P);
    if (k >= 0 && k < s.p()) return P;
  }
  return PostLieRing(L);
}

std::vector<std::vector<int>> partitions(int n, int maxPart) {
  if (n == 0) return {{}};
  std::vector<std::vector<int>> out;
  for (int first = std::min(n, maxPart); first >= 1; --first)
    for (auto rest : partitions(n - first, first)) {
      rest.insert(rest.begin(), first);
      out.push_back(std::move(rest));
    }
  return out;
}

// x ▷ y = w(x, y) g_last with w alternating: square-free and pre-Lie.
PostLieRing alternatingSquareZero(int p, int rank) {
  PShape s(p, std::vector<int>(rank, 1));
  PostLieRing P{LieRingSC(s)};
  const PVec top = s.gen(rank - 1);
  for (int i = 0; i + 1 < rank - 1; ++i) {
    P.setTriangle(i, i + 1, top);
    P.setTriangle(i + 1, i, -top);
  }
  return P;
}

// t F_p[t] / t^{n+1}: g_i ▷ g_j = g_{i+j}.
PostLieRing truncatedPolynomial(int p, int n) {
  PShape s(p, std::vector<int>(n, 1));
  PostLieRing P{LieRingSC(s)};
  for (int i = 0; i < n; ++i)
    for (int j = 0; i + j + 1 < n; ++j) P.setTriangle(i, j, s.gen(i + j + 1));
  return P;
}

// Strictly upper triangular 3x3 matrices E12, E23, E13: E12 E23 = E13.
PostLieRing strictUpperTriangular(int p) {
  PShape s(p, std::vector<int>{1, 1, 1});
  PostLieRing P{LieRingSC(s)};
  P.setTriangle(0, 1, s.gen(2));
  return P;
}

}  // namespace

std::vector<NamedLie> lieCatalog() {
  std::vector<NamedLie> out;
  for (int p : {3, 5, 7})
    for (int n = 1; n <= 4; ++n)
      for (const auto& part : partitions(n, n)) {
        PShape s(p, part);
        out.push_back({"abelian " + shapeName(s), LieRingSC(s)});
      }
  for (int p : {3, 5, 7}) out.push_back({"heisenberg p=" + std::to_string(p), heisenbergLie(p)});
  out.push_back({"filiform p=5 n=4", filiformLie(5, 4)});
  out.push_back({"filiform p=7 n=4", filiformLie(7, 4)});
  out.push_back({"filiform p=5 n=3", filiformLie(5, 3)});
  std::mt19937 rng(20240917);
  const std::vector<std::pair<int, std::vector<int>>> shapes{
      {3, {1, 1, 1, 1}}, {3, {2, 1, 1}}, {3, {1, 1, 1, 1}}, {3, {2, 1, 1}}, {5, {1, 1, 1, 1}}, {5, {2, 1, 1}},
      {5, {1, 1, 1, 1}}, {5, {2, 1, 1}}, {5, {1, 1, 1}},    {7, {1, 1, 1}}, {7, {2, 1, 1}}, {7, {1, 1, 1}}};
  int idx = 0;
  for (const auto& [p, e] : shapes) {
    PShape s(p, e);
    out.push_back({"random " + shapeName(s) + " #" + std::to_string(idx++), randomLie(s, rng)});
  }
  return out;
}

std::vector<NamedPostLie> postLieCatalog() {
  std::vector<NamedPostLie> out;
  auto add = [&](std::string name, PostLieRing P) { out.push_back({std::move(name), std::move(P)}); };
  for (const NamedLie& L : lieCatalog()) {
    if (L.ring.order() > 343) continue;
    add("zero action on " + L.name, PostLieRing(L.ring));
    if (!L.ring.isAbelian()) add("negated bracket on " + L.name, scaledBracket(L.ring, -1));
  }
  for (int p : {3, 5, 7}) add("bracket action on heisenberg p=" + std::to_string(p), scaledBracket(heisenbergLie(p), 1));
  add("radical ring 5Z/125Z", radicalRing(5, 2));
  add("radical ring 3Z/27Z", radicalRing(3, 2));
  add("radical ring 5Z/625Z", radicalRing(5, 3));
  add("radical ring 7Z/2401Z", radicalRing(7, 3));
  for (int p : {3, 5, 7}) add("square shift p=" + std::to_string(p), squareShift(p));
  for (int p : {3, 5, 7}) add("alternating square-zero p=" + std::to_string(p), alternatingSquareZero(p, 3));
  add("alternating square-zero p=5 rank 4", alternatingSquareZero(5, 4));
  add("truncated polynomial p=5 n=3", truncatedPolynomial(5, 3));
  add("truncated polynomial p=7 n=3", truncatedPolynomial(7, 3));
  add("truncated polynomial p=3 n=2", truncatedPolynomial(3, 2));
  for (int p : {3, 5}) add("strict upper triangular p=" + std::to_string(p), strictUpperTriangular(p));
  add("zero action on filiform p=5 n=4", PostLieRing(filiformLie(5, 4)));
  add("negated bracket on filiform p=5 n=4", scaledBracket(filiformLie(5, 4), -1));
  std::mt19937 rng(7);
  const std::vector<LieRingSC> bases{LieRingSC(PShape(3, std::vector<int>{1, 1, 1})), LieRingSC(PShape(5, std::vector<int>{1, 1, 1})),
                                     LieRingSC(PShape(5, std::vector<int>{2, 1})),    heisenbergLie(5),
                                     heisenbergLie(7),                                LieRingSC(PShape(7, std::vector<int>{1, 1, 1})),
                                     filiformLie(5, 3),                               LieRingSC(PShape(3, std::vector<int>{2, 1}))};
  std::set<std::vector<std::int64_t>> seen;
  int idx = 0;
  for (int round = 0; round < 2; ++round)
    for (const LieRingSC& L : bases) {
      PostLieRing P = randomPostLie(L, rng, 400);
      if (P.isZeroAction() || !seen.insert(triangleKey(P)).second) continue;
      add("random on " + L.shape().str() + (L.isAbelian() ? " abelian" : " nonabelian") + " #" + std::to_string(idx++), std::move(P));
    }
  return out;
}

std::vector<NamedBrace> braceCatalog() {
  std::vector<NamedBrace> out;
  for (const PShape& s : {PShape(3, std::vector<int>{2}), PShape(3, std::vector<int>{1, 1}), PShape(5, std::vector<int>{2}),
                          PShape(5, std::vector<int>{1, 1})}) {
    int idx = 0;
    for (SkewBrace& B : enumerateBracesLambda(abelianGroup(s)))
      out.push_back({"brace on " + s.str() + " #" + std::to_string(idx++), std::move(B)});
  }
  for (const PShape& s : {PShape(3, std::vector<int>{3}), PShape(3, std::vector<int>{2, 1})}) {
    int idx = 0;
    for (SkewBrace& B : enumerateBracesHol(abelianGroup(s)))
      out.push_back({"brace on " + s.str() + " #" + std::to_string(idx++), std::move(B)});
  }
  std::vector<std::pair<std::string, FinGroup>> groups{{"unitriangular p=3", unitriangularGroup(3)},
                                                        {"unitriangular p=5", unitriangularGroup(5)},
                                                        {"Laz(filiform p=5 n=3)", laz(filiformLie(5, 3))}};
  for (auto& [name, G] : groups) {
    out.push_back({"trivial skew brace on " + name, SkewBrace(G, G)});
    const Index n = G.order();
    std::vector<Index> op(static_cast<std::size_t>(n) * n);
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b) op[static_cast<std::size_t>(a) * n + b] = G.mul(b, a);
    out.push_back({"opposite skew brace on " + name, SkewBrace(G, FinGroup(n, std::move(op), G.identity()))});
  }
  return out;
}

}  // namespace lazard
