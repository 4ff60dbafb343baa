#include "lazard/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "lazard/error.hpp"

namespace lazard {

namespace {

// Elements v of the shape with p^e v = 0.
std::vector<PVec> killedBy(const PShape& sh, int e) {
  std::vector<PVec> out;
  const std::int64_t m = ipow(sh.p(), e);
  for (Index x = 0; x < sh.order(); ++x) {
    PVec v = sh.at(x);
    if ((m * v).isZero()) out.push_back(std::move(v));
  }
  return out;
}

void checkSearch(long double candidates, bool force, const std::string& what) {
  if (candidates > static_cast<long double>(kSearchCap) && !force)
    throw CapacityError(what + ": " + std::to_string(static_cast<unsigned long long>(candidates)) +
                        " candidates exceed the search cap; use --force");
}

bool keep(const PostLieRing& P) {
  if (!verifyPostLie(P).ok) return false;
  const int k = lClass(P);
  return k >= 0 && (k < P.p() || P.order() == 1);
}

void sortUnique(std::vector<PostLieRing>& v) {
  std::sort(v.begin(), v.end(), [](const PostLieRing& a, const PostLieRing& b) { return triangleKey(a) < triangleKey(b); });
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

FinGroup abelianGroup(const PShape& shape) {
  LieRingTable T = toTable(LieRingSC(shape));
  return FinGroup(T.n, std::move(T.addT), T.zero);
}

std::vector<std::int64_t> triangleKey(const PostLieRing& P) {
  std::vector<std::int64_t> k;
  for (int i = 0; i < P.rank(); ++i)
    for (int j = 0; j < P.rank(); ++j)
      for (int c = 0; c < P.rank(); ++c) k.push_back(P.triangle(i, j)[c]);
  return k;
}

std::vector<PostLieRing> enumeratePreLieSC(const PShape& shape, bool force) {
  const int r = shape.rank();
  std::vector<std::vector<PVec>> choices;
  long double total = 1;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      choices.push_back(killedBy(shape, std::min(shape.exp(i), shape.exp(j))));
      total *= choices.back().size();
    }
  checkSearch(total, force, "pre-Lie structure constant search");
  std::vector<PostLieRing> out;
  std::vector<std::size_t> digit(choices.size(), 0);
  while (true) {
    PostLieRing P{LieRingSC(shape)};
    for (std::size_t s = 0; s < choices.size(); ++s) P.setTriangle(static_cast<int>(s) / r, static_cast<int>(s) % r, choices[s][digit[s]]);
    if (keep(P)) out.push_back(std::move(P));
    std::size_t s = 0;
    while (s < digit.size() && ++digit[s] == choices[s].size()) digit[s++] = 0;
    if (s == digit.size()) break;
  }
  sortUnique(out);
  return out;
}

std::vector<PostLieRing> enumeratePreLieAff(const PShape& shape, bool force) {
  const int r = shape.rank();
  int length = 0;
  for (int i = 0; i < r; ++i) length += shape.exp(i);
  // Nilpotent endomorphisms, by their generator images.
  std::vector<std::vector<PVec>> imageChoices;
  long double endCount = 1;
  for (int j = 0; j < r; ++j) {
    imageChoices.push_back(killedBy(shape, shape.exp(j)));
    endCount *= imageChoices.back().size();
  }
  checkSearch(endCount, force, "endomorphism search");
  std::vector<Endo> nil;
  std::vector<std::size_t> digit(r, 0);
  while (true) {
    std::vector<PVec> im;
    for (int j = 0; j < r; ++j) im.push_back(imageChoices[j][digit[j]]);
    Endo f(shape, std::move(im));
    if (power(f, std::max(1, length)).isZero()) nil.push_back(std::move(f));
    int s = 0;
    while (s < r && ++digit[s] == imageChoices[s].size()) digit[s++] = 0;
    if (s == r) break;
  }
  // L_{g_i} must be killed by p^{e_i}.
  std::vector<std::vector<const Endo*>> slot(r);
  long double total = 1;
  for (int i = 0; i < r; ++i) {
    const std::int64_t m = ipow(shape.p(), shape.exp(i));
    for (const Endo& f : nil)
      if (scaled(PScalar(m, 1), f).isZero()) slot[i].push_back(&f);
    total *= slot[i].size();
  }
  checkSearch(total, force, "aff sub Lie ring search");
  auto Lof = [&](const std::vector<const Endo*>& L, const PVec& c) {
    Endo s = Endo::zero(shape);
    for (int k = 0; k < r; ++k)
      if (c[k] != 0) s += scaled(PScalar(c[k], 1), *L[k]);
    return s;
  };
  std::vector<PostLieRing> out;
  std::vector<std::size_t> pick(r, 0);
  std::vector<const Endo*> L(r);
  while (r > 0) {
    for (int i = 0; i < r; ++i) L[i] = slot[i][pick[i]];
    bool closed = true;
    for (int i = 0; i < r && closed; ++i)
      for (int j = i + 1; j < r && closed; ++j) {
        const PVec c = (*L[i])(shape.gen(j)) - (*L[j])(shape.gen(i));
        closed = commutator(*L[i], *L[j]) == Lof(L, c);
      }
    // Left nilpotency: every product of `length` generator maps vanishes.
    if (closed) {
      std::vector<Endo> prods{Endo::identity(shape)};
      for (int step = 0; step < length && !prods.empty(); ++step) {
        std::vector<Endo> next;
        for (const Endo& q : prods)
          for (int i = 0; i < r; ++i) {
            Endo e = *L[i] * q;
            if (!e.isZero() && std::find(next.begin(), next.end(), e) == next.end()) next.push_back(std::move(e));
          }
        prods = std::move(next);
      }
      if (prods.empty()) {
        PostLieRing P{LieRingSC(shape)};
        for (int i = 0; i < r; ++i)
          for (int j = 0; j < r; ++j) P.setTriangle(i, j, (*L[i])(shape.gen(j)));
        const int k = lClass(P);
        if (k < shape.p() || P.order() == 1) out.push_back(std::move(P));
      }
    }
    int s = 0;
    while (s < r && ++pick[s] == slot[s].size()) pick[s++] = 0;
    if (s == r) break;
  }
  if (r == 0) out.emplace_back(LieRingSC(shape));
  sortUnique(out);
  return out;
}

Pairing pairCatalogs(const PShape& shape, const std::vector<SkewBrace>& braces, const std::vector<PostLieRing>& preLie) {
  Pairing r;
  r.braces = braces.size();
  r.preLie = preLie.size();
  std::map<std::vector<std::int64_t>, std::size_t> index;
  for (std::size_t k = 0; k < preLie.size(); ++k) index[triangleKey(preLie[k])] = k;
  std::set<std::size_t> hit;
  for (std::size_t b = 0; b < braces.size(); ++b) {
    const PostLieImage L = constructL(braces[b], &shape);
    auto it = index.find(triangleKey(L.ring));
    if (it == index.end()) {
      r.problems.push_back("brace " + std::to_string(b) + " maps outside the pre-Lie list");
      continue;
    }
    if (!hit.insert(it->second).second) r.problems.push_back("two braces map to pre-Lie ring " + std::to_string(it->second));
    if (!(constructS(L.ring) == braces[b])) r.problems.push_back("constructS does not return brace " + std::to_string(b));
  }
  if (hit.size() != preLie.size()) r.problems.push_back("some pre-Lie rings have no brace");
  r.bijective = r.problems.empty();
  return r;
}

}  // namespace lazard
