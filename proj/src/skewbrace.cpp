#include "lazard/skewbrace.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "lazard/error.hpp"

namespace lazard {

namespace {

std::string triple(Index a, Index b, Index c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}


// Chain X_{i+1} = <step(X_i)> in (A, .), down to the stable term.
template <class Step>
SeriesResult groupSeries(const FinGroup& g, Step&& step) {
  SeriesResult r;
  r.universe = g.order();
  r.zero = g.identity();
  Subset cur = Subset::all(g.order());
  int i = 1;
  while (true) {
    if (cur.size() == 1) {
      r.nilpotent = true;
      r.nilClass = i - 1;
      return r;
    }
    r.terms.push_back(cur);
    Subset next = closure(g, step(cur).elements());
    if (next == cur) return r;
    cur = std::move(next);
    ++i;
  }
}

// The dot commutator as written in the L-series: a b a^-1 b^-1.
Index dotComm(const FinGroup& g, Index a, Index b) { return g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))); }

// Map defined on generators extended along the Cayley graph; empty if the
// images do not define an injective homomorphism.
std::vector<Index> extendHom(const FinGroup& A, std::span<const Index> gens, std::span<const Index> images) {
  const Index n = A.order();
  constexpr Index kUnset = static_cast<Index>(-1);
  std::vector<Index> f(n, kUnset);
  f[A.identity()] = A.identity();
  std::vector<Index> queue{A.identity()};
  for (std::size_t k = 0; k < queue.size(); ++k) {
    const Index x = queue[k];
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const Index y = A.mul(x, gens[j]);
      const Index fy = A.mul(f[x], images[j]);
      if (f[y] == kUnset) {
        f[y] = fy;
        queue.push_back(y);
      } else if (f[y] != fy) {
        return {};
      }
    }
  }
  std::vector<char> hit(n, 0);
  for (Index x = 0; x < n; ++x) {
    if (f[x] == kUnset || hit[f[x]]) return {};
    hit[f[x]] = 1;
  }
  return f;
}

int depth(const Filtration& F, Index x) {
  int d = 1;
  while (d < F.length() && F.terms[d].contains(x)) ++d;
  return d;
}

bool isIdentityMap(const std::vector<Index>& f) {
  for (Index x = 0; x < f.size(); ++x)
    if (f[x] != x) return false;
  return true;
}

std::size_t identityAut(const std::vector<std::vector<Index>>& auts, Index n) {
  for (std::size_t k = 0; k < auts.size(); ++k)
    if (isIdentityMap(auts[k])) return k;
  throw Error("identity automorphism missing (carrier " + std::to_string(n) + ")");
}

// Permutation order is a power of p.
bool isPElement(const std::vector<Index>& f, int p) {
  std::int64_t ord = 1;
  std::vector<Index> g(f);
  while (!isIdentityMap(g)) {
    for (Index x = 0; x < g.size(); ++x) g[x] = f[g[x]];
    ++ord;
  }
  while (ord % p == 0) ord /= p;
  return ord == 1;
}

}  // namespace

SkewBrace::SkewBrace(FinGroup dot, FinGroup circ) : dot_(std::move(dot)), circ_(std::move(circ)) {
  if (dot_.order() != circ_.order()) throw Error("skew brace: tables of different size");
  if (dot_.identity() != circ_.identity()) throw Error("skew brace: the two operations have different identities");
}

Report verifySkewBrace(const SkewBrace& B, Exec exec) {
  Report r;
  std::array<Index, 3> w{};
  if (!B.dot().isAssociative(&w)) r.fail("dot is not associative at " + triple(w[0], w[1], w[2]));
  if (!B.circ().isAssociative(&w)) r.fail("circ is not associative at " + triple(w[0], w[1], w[2]));
  if (!r.ok) return r;
  const FinGroup& d = B.dot();
  const auto gens = d.generators();
  const Index n = B.order();
  const Index bad = findFailure(
      n,
      [&](Index a) {
        for (Index b = 0; b < n; ++b)
          for (Index c : gens)
            if (B.circ().mul(a, d.mul(b, c)) != d.mul(d.mul(B.circ().mul(a, b), d.inv(a)), B.circ().mul(a, c))) return false;
        return true;
      },
      exec);
  if (bad < n) {
    for (Index b = 0; b < n; ++b)
      for (Index c : gens)
        if (B.circ().mul(bad, d.mul(b, c)) != d.mul(d.mul(B.circ().mul(bad, b), d.inv(bad)), B.circ().mul(bad, c))) {
          r.fail("a o (b . c) != (a o b) . a^-1 . (a o c) at " + triple(bad, b, c));
          return r;
        }
  }
  return r;
}

LambdaTables lambdaAndStar(const SkewBrace& B, Exec exec) {
  LambdaTables t;
  t.n = B.order();
  t.lambda = tabulate(t.n, [&](Index a, Index b) { return B.lambda(a, b); }, exec);
  t.star = tabulate(t.n, [&](Index a, Index b) { return B.dot().mul(t.lambdaAt(a, b), B.dot().inv(b)); }, exec);
  const FinGroup& d = B.dot();
  const auto gens = d.generators();
  const Index bad = findFailure(
      t.n,
      [&](Index a) {
        std::vector<char> hit(t.n, 0);
        for (Index b = 0; b < t.n; ++b) {
          if (hit[t.lambdaAt(a, b)]) return false;
          hit[t.lambdaAt(a, b)] = 1;
          for (Index c : gens)
            if (t.lambdaAt(a, d.mul(b, c)) != d.mul(t.lambdaAt(a, b), t.lambdaAt(a, c))) return false;
          // lambda_{a o b} = lambda_a lambda_b on dot generators
          const Index ab = B.circ().mul(a, b);
          for (Index c : gens)
            if (t.lambdaAt(ab, c) != t.lambdaAt(a, t.lambdaAt(b, c))) return false;
        }
        return true;
      },
      exec);
  if (bad < t.n) throw Error("lambda_" + std::to_string(bad) + " is inconsistent: not an automorphism or not multiplicative");
  return t;
}

SeriesResult lSeries(const SkewBrace& B) {
  const Index n = B.order();
  return groupSeries(B.dot(), [&](const Subset& cur) {
    Subset v(n);
    const auto ce = cur.elements();
    for (Index a = 0; a < n; ++a)
      for (Index b : ce) {
        v.insert(B.star(a, b));
        v.insert(dotComm(B.dot(), a, b));
      }
    return v;
  });
}

SeriesResult leftSeries(const SkewBrace& B) {
  const Index n = B.order();
  return groupSeries(B.dot(), [&](const Subset& cur) {
    Subset v(n);
    const auto ce = cur.elements();
    for (Index a = 0; a < n; ++a)
      for (Index b : ce) v.insert(B.star(a, b));
    return v;
  });
}

SeriesResult rightSeries(const SkewBrace& B) {
  const Index n = B.order();
  return groupSeries(B.dot(), [&](const Subset& cur) {
    Subset v(n);
    const auto ce = cur.elements();
    for (Index b : ce)
      for (Index a = 0; a < n; ++a) v.insert(B.star(b, a));
    return v;
  });
}

bool rightNilpotent(const SkewBrace& B) { return rightSeries(B).nilpotent; }

SeriesResult strongSeries(const SkewBrace& B) {
  const FinGroup& d = B.dot();
  const Index n = B.order();
  SeriesResult r;
  r.universe = n;
  r.zero = B.identity();
  std::vector<Subset> terms{Subset::all(n)};
  const std::size_t cap = 64;
  while (terms.size() < cap) {
    if (terms.back().size() == 1) {
      terms.pop_back();
      r.terms = terms;
      r.nilpotent = true;
      r.nilClass = static_cast<int>(terms.size());
      return r;
    }
    const std::size_t k = terms.size();
    Subset v(n);
    for (std::size_t i = 1; i <= k; ++i) {
      const auto ai = terms[i - 1].elements();
      const auto bi = terms[k - i].elements();
      for (Index a : ai)
        for (Index b : bi) {
          v.insert(B.star(a, b));
          v.insert(dotComm(d, a, b));
        }
    }
    Subset next = closure(d, v.elements());
    if (next == terms.back()) break;
    terms.push_back(std::move(next));
  }
  r.terms = terms;
  return r;
}

NilpotencyDecomposition nilpotencyDecomposition(const SkewBrace& B) {
  NilpotencyDecomposition d;
  d.leftNilpotent = leftSeries(B).nilpotent;
  d.baseNilpotent = lowerCentralSeries(B.dot()).nilpotent;
  d.lNilpotent = lSeries(B).nilpotent;
  if (d.lNilpotent != (d.leftNilpotent && d.baseNilpotent))
    throw TheoremViolation("L-nilpotency differs from left nilpotency plus nilpotent dot group");
  return d;
}

int lClass(const SkewBrace& B) {
  SeriesResult s = lSeries(B);
  return s.nilpotent ? s.nilClass : -1;
}

bool isLazard(const SkewBrace& B) {
  const int k = lClass(B);
  const int p = B.dot().prime();
  if (B.order() == 1) return true;
  return k >= 0 && p > 1 && k < p;
}

bool isSquareFree(const SkewBrace& B) {
  for (Index a = 0; a < B.order(); ++a)
    if (B.star(a, a) != B.identity()) return false;
  return true;
}

IdealKind idealType(const SkewBrace& B, const Subset& s) {
  const FinGroup& d = B.dot();
  const FinGroup& c = B.circ();
  if (!s.contains(B.identity()) || !(closure(d, s.elements()) == s)) return IdealKind::NotClosed;
  const auto gens = subgroupGenerators(d, s);
  for (Index x : s.elements())
    for (Index y : gens)
      if (!s.contains(c.mul(x, y))) return IdealKind::NotClosed;
  const auto circGens = c.generators();
  for (Index a : circGens)
    for (Index b : gens)
      if (!s.contains(B.lambda(a, b))) return IdealKind::Sub;
  if (!isNormal(d, s)) return IdealKind::LeftIdeal;
  if (!isNormal(c, s)) return IdealKind::StrongLeftIdeal;
  return IdealKind::Ideal;
}

Substructures substructures(const SkewBrace& B) {
  const Index n = B.order();
  const FinGroup& d = B.dot();
  const auto dotGens = d.generators();
  const auto circGens = B.circ().generators();
  Substructures s{Subset(n), Subset(n), Subset(n)};
  for (Index a = 0; a < n; ++a) {
    bool fix = true, soc = true;
    for (Index b : circGens)
      if (B.lambda(b, a) != a) fix = false;
    for (Index g : dotGens)
      if (B.lambda(a, g) != g || d.mul(a, g) != d.mul(g, a)) soc = false;
    if (fix) s.fix.insert(a);
    if (soc) s.soc.insert(a);
    if (fix && soc) s.ann.insert(a);
  }
  if (idealType(B, s.fix) < IdealKind::LeftIdeal) throw TheoremViolation("Fix is not a left ideal");
  if (idealType(B, s.soc) != IdealKind::Ideal) throw TheoremViolation("Soc is not an ideal");
  if (idealType(B, s.ann) != IdealKind::Ideal) throw TheoremViolation("Ann is not an ideal");
  return s;
}

CircBound circNilpotencyBound(const SkewBrace& B) {
  CircBound b;
  b.lClass = lClass(B);
  if (b.lClass < 0) throw Error("circNilpotencyBound: not L-nilpotent");
  SeriesResult c = lowerCentralSeries(B.circ());
  b.circClass = c.nilpotent ? c.nilClass : -1;
  if (b.circClass < 0 || b.circClass > b.lClass)
    throw TheoremViolation("(A,o) class " + std::to_string(b.circClass) + " exceeds L-class " + std::to_string(b.lClass));
  b.annContainsLast = true;
  if (b.lClass >= 1 && b.lClass <= static_cast<int>(c.terms.size()))
    b.annContainsLast = c.terms[b.lClass - 1].subsetOf(substructures(B).ann);
  if (!b.annContainsLast) throw TheoremViolation("gamma^k(A,o) is not inside Ann");
  return b;
}

Report powerSetIdeals(const SkewBrace& B, std::int64_t n) {
  Report r;
  const Index N = B.order();
  Subset powDot(N), powCirc(N), torDot(N), torCirc(N);
  for (Index a = 0; a < N; ++a) {
    powDot.insert(B.dot().pow(a, n));
    powCirc.insert(B.circ().pow(a, n));
    if (B.dot().pow(a, n) == B.identity()) torDot.insert(a);
    if (B.circ().pow(a, n) == B.identity()) torCirc.insert(a);
  }
  const std::string tag = " (n=" + std::to_string(n) + ")";
  if (!(powDot == powCirc)) r.fail("{a^n} != {a^{o n}}" + tag);
  if (!(torDot == torCirc)) r.fail("{a : a^n = 1} != {a : a^{o n} = 1}" + tag);
  for (const Subset* s : {&powDot, &powCirc, &torDot, &torCirc})
    if (idealType(B, *s) != IdealKind::Ideal) r.fail("power set " + s->str() + " is not an ideal" + tag);
  if (!r.ok) throw TheoremViolation(r.str());
  return r;
}

bool inAutFiltration(const FinGroup& A, const Filtration& F, std::span<const Index> f, int i) {
  for (int j = 1; j <= std::max(1, F.length()); ++j) {
    const Subset target = F.term(i + j);
    for (Index g : F.term(j).elements())
      if (!target.contains(A.mul(f[g], A.inv(g)))) return false;
  }
  return true;
}

Filtration adjointGroupFiltration(const SkewBrace& B, const Filtration& F) {
  const Index n = B.order();
  std::vector<std::vector<Index>> lam(n, std::vector<Index>(n));
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) lam[a][b] = B.lambda(a, b);
  Filtration out;
  out.universe = n;
  out.zero = B.identity();
  for (int i = 1; i <= F.length(); ++i) {
    Subset t(n);
    for (Index a : F.terms[i - 1].elements())
      if (inAutFiltration(B.dot(), F, lam[a], i)) t.insert(a);
    if (t.size() == 1) break;
    out.terms.push_back(std::move(t));
  }
  validateGroupFiltration(B.circ(), out);
  return out;
}

std::vector<std::vector<Index>> automorphisms(const FinGroup& A, const Filtration* F) {
  const auto gens = A.generators();
  std::vector<std::vector<Index>> cand(gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    const Index g = gens[j];
    for (Index x = 0; x < A.order(); ++x) {
      if (A.elementOrder(x) != A.elementOrder(g)) continue;
      if (F) {
        const Subset target = F->term(depth(*F, g) + 1);
        if (!target.contains(A.mul(x, A.inv(g)))) continue;
      }
      cand[j].push_back(x);
    }
  }
  std::vector<std::vector<Index>> out;
  std::vector<Index> img(gens.size());
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (j == gens.size()) {
      auto f = extendHom(A, gens, img);
      if (!f.empty() && (!F || inAutFiltration(A, *F, f, 1))) out.push_back(std::move(f));
      return;
    }
    for (Index x : cand[j]) {
      img[j] = x;
      rec(j + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Filtration> allFiltrations(const FinGroup& A, int maxLength) {
  std::vector<Subset> normal;
  for (Subset& h : allSubgroups(A))
    if (h.size() > 1 && h.size() < A.order() && isNormal(A, h)) normal.push_back(std::move(h));
  std::vector<Filtration> out;
  Filtration f;
  f.universe = A.order();
  f.zero = A.identity();
  f.terms.push_back(Subset::all(A.order()));
  if (A.order() == 1) f.terms.clear();
  std::function<void()> rec = [&]() {
    try {
      validateGroupFiltration(A, f);
      out.push_back(f);
    } catch (const Error&) {
    }
    if (f.length() >= maxLength || f.terms.empty()) return;
    for (const Subset& h : normal)
      if (h.subsetOf(f.terms.back()) && h.size() < f.terms.back().size()) {
        f.terms.push_back(h);
        rec();
        f.terms.pop_back();
      }
  };
  rec();
  return out;
}

Holomorph holomorphPlus(const FinGroup& A, const Filtration& F, bool force) {
  const int p = A.prime();
  if (A.order() > 1 && (p == 0 || F.length() >= p))
    throw NotLazardError("not Lazard: filtration length " + std::to_string(F.length()) + " >= p = " + std::to_string(p));
  validateGroupFiltration(A, F);
  Holomorph h;
  h.carrier = A.order();
  h.auts = automorphisms(A, &F);
  const std::uint64_t size = static_cast<std::uint64_t>(A.order()) * h.auts.size();
  if (size > kHolCap && !force) throw CapacityError("Hol^+ has " + std::to_string(size) + " elements; use --force");
  std::map<std::vector<Index>, std::size_t> index;
  for (std::size_t k = 0; k < h.auts.size(); ++k) index[h.auts[k]] = k;
  const std::size_t m = h.auts.size();
  std::vector<std::size_t> compose(m * m);
  std::vector<Index> tmp(A.order());
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      for (Index g = 0; g < A.order(); ++g) tmp[g] = h.auts[x][h.auts[y][g]];
      compose[x * m + y] = index.at(tmp);
    }
  const auto N = static_cast<Index>(size);
  std::vector<Index> t(static_cast<std::size_t>(N) * N);
  for (Index u = 0; u < N; ++u)
    for (Index v = 0; v < N; ++v) {
      const Index a = u / m, b = v / m;
      const std::size_t al = u % m, be = v % m;
      t[static_cast<std::size_t>(u) * N + v] = h.element(A.mul(a, h.auts[al][b]), compose[al * m + be]);
    }
  const std::size_t id = identityAut(h.auts, A.order());
  h.group = FinGroup(N, std::move(t), h.element(A.identity(), id));
  return h;
}

namespace {

SkewBrace braceFromLambda(const FinGroup& A, const std::vector<const std::vector<Index>*>& lam) {
  const Index n = A.order();
  std::vector<Index> t(static_cast<std::size_t>(n) * n);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) t[static_cast<std::size_t>(a) * n + b] = A.mul(a, (*lam[a])[b]);
  return SkewBrace(A, FinGroup(n, std::move(t), A.identity()));
}

void sortByKey(std::vector<SkewBrace>& v) {
  std::sort(v.begin(), v.end(), [](const SkewBrace& x, const SkewBrace& y) { return braceKey(x) < braceKey(y); });
}

}  // namespace

std::vector<SkewBrace> regularSubgroups(const FinGroup& A, const Filtration& F, bool force) {
  if (A.order() > 125 && !force) throw CapacityError("regularSubgroups: order above 125; use --force");
  const Holomorph h = holomorphPlus(A, F, force);
  const FinGroup& H = h.group;
  const Index n = A.order();
  // Subgroups meeting {1} x Aut trivially, grown one element at a time.
  std::vector<Subset> frontier{closure(H, std::vector<Index>{})};
  std::set<std::vector<Index>> seen{frontier[0].elements()};
  std::vector<SkewBrace> out;
  auto injective = [&](const Subset& s) {
    std::vector<char> hit(n, 0);
    for (Index x : s.elements()) {
      if (hit[h.base(x)]) return false;
      hit[h.base(x)] = 1;
    }
    return true;
  };
  for (std::size_t k = 0; k < frontier.size(); ++k) {
    const Subset cur = frontier[k];
    if (cur.size() == n) {
      std::vector<const std::vector<Index>*> lam(n);
      for (Index x : cur.elements()) lam[h.base(x)] = &h.auts[h.aut(x)];
      out.push_back(braceFromLambda(A, lam));
      continue;
    }
    std::vector<char> covered(n, 0);
    for (Index x : cur.elements()) covered[h.base(x)] = 1;
    auto gens = subgroupGenerators(H, cur);
    for (Index x = 0; x < H.order(); ++x) {
      if (covered[h.base(x)]) continue;
      gens.push_back(x);
      Subset s = closure(H, gens);
      gens.pop_back();
      if (s.size() > n || !injective(s)) continue;
      if (seen.insert(s.elements()).second) frontier.push_back(std::move(s));
    }
  }
  sortByKey(out);
  return out;
}

std::vector<SkewBrace> enumerateBracesHol(const FinGroup& A, bool force) {
  const int p = A.prime();
  if (p <= 1) throw Error("enumerateBracesHol: order must be a prime power > 1");
  std::map<std::vector<Index>, SkewBrace> all;
  for (const Filtration& F : allFiltrations(A, p - 1))
    for (SkewBrace& B : regularSubgroups(A, F, force))
      if (isLazard(B)) all.emplace(braceKey(B), std::move(B));
  std::vector<SkewBrace> out;
  for (auto& [k, B] : all) out.push_back(std::move(B));
  return out;
}

std::vector<SkewBrace> enumerateBracesLambda(const FinGroup& A, bool force, Exec exec) {
  const int p = A.prime();
  if (p <= 1) throw Error("enumerateBracesLambda: order must be a prime power > 1");
  if (A.order() > 125 && !force) throw CapacityError("enumerateBracesLambda: order above 125; use --force");
  const Index n = A.order();
  // p-elements of Aut(A): the image of lambda is a p-group.
  std::vector<std::vector<Index>> auts;
  for (auto& f : automorphisms(A))
    if (isPElement(f, p)) auts.push_back(std::move(f));
  const std::size_t m = auts.size();
  std::map<std::vector<Index>, std::size_t> index;
  for (std::size_t k = 0; k < m; ++k) index[auts[k]] = k;
  std::vector<std::size_t> compose(m * m, m);
  std::vector<Index> tmp(n);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      for (Index g = 0; g < n; ++g) tmp[g] = auts[x][auts[y][g]];
      auto it = index.find(tmp);
      if (it != index.end()) compose[x * m + y] = it->second;
    }
  const std::size_t idAut = identityAut(auts, n);
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  // Assign lam[a], then close under lam[a . lam_a(b)] = lam[a] lam[b].
  auto propagate = [&](std::vector<std::size_t>& lam, std::vector<Index>& assigned) {
    for (std::size_t head = 0; head < assigned.size(); ++head) {
      const Index x = assigned[head];
      for (std::size_t k = 0; k <= head; ++k) {
        const Index y = assigned[k];
        for (int pass = 0; pass < 2; ++pass) {
          const Index a = pass == 0 ? x : y, b = pass == 0 ? y : x;
          const Index c = A.mul(a, auts[lam[a]][b]);
          const std::size_t want = compose[lam[a] * m + lam[b]];
          if (want == m) return false;
          if (lam[c] == kUnset) {
            lam[c] = want;
            assigned.push_back(c);
          } else if (lam[c] != want) {
            return false;
          }
        }
      }
    }
    return true;
  };
  std::vector<std::size_t> lam0(n, kUnset);
  lam0[A.identity()] = idAut;
  std::vector<Index> assigned0{A.identity()};
  if (!propagate(lam0, assigned0)) return {};
  Index first = 0;
  while (first < n && lam0[first] != kUnset) ++first;
  std::vector<std::vector<std::vector<std::size_t>>> found(m);
  std::function<void(std::vector<std::size_t>, std::vector<Index>, std::vector<std::vector<std::size_t>>&)> rec =
      [&](std::vector<std::size_t> lam, std::vector<Index> assigned, std::vector<std::vector<std::size_t>>& sink) {
        Index a = 0;
        while (a < n && lam[a] != kUnset) ++a;
        if (a == n) {
          sink.push_back(lam);
          return;
        }
        for (std::size_t k = 0; k < m; ++k) {
          auto l2 = lam;
          auto as2 = assigned;
          l2[a] = k;
          as2.push_back(a);
          if (propagate(l2, as2)) rec(std::move(l2), std::move(as2), sink);
        }
      };
  if (first == n) {
    found[0].push_back(lam0);
  } else {
    const long long mm = static_cast<long long>(m);
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic, 1) if (exec == Exec::Parallel)
    for (long long k = 0; k < mm; ++k) {
      try {
        auto l2 = lam0;
        auto as2 = assigned0;
        l2[first] = static_cast<std::size_t>(k);
        as2.push_back(first);
        if (propagate(l2, as2)) rec(std::move(l2), std::move(as2), found[k]);
      } catch (...) {
#pragma omp critical(lazard_enum_err)
        if (!err) err = std::current_exception();
      }
    }
    if (err) std::rethrow_exception(err);
  }
  std::vector<SkewBrace> out;
  for (const auto& bucket : found)
    for (const auto& lam : bucket) {
      std::vector<const std::vector<Index>*> l(n);
      for (Index a = 0; a < n; ++a) l[a] = &auts[lam[a]];
      SkewBrace B = braceFromLambda(A, l);
      if (isLazard(B)) out.push_back(std::move(B));
    }
  sortByKey(out);
  return out;
}

SkewBrace relabel(const SkewBrace& B, std::span<const Index> map) {
  const Index n = B.order();
  if (map.size() != n) throw Error("relabel: map has the wrong size");
  auto move = [&](const FinGroup& g) {
    std::vector<Index> t(static_cast<std::size_t>(n) * n);
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b) t[static_cast<std::size_t>(map[a]) * n + map[b]] = map[g.mul(a, b)];
    return FinGroup(n, std::move(t), map[g.identity()]);
  };
  return SkewBrace(move(B.dot()), move(B.circ()));
}

std::vector<Index> braceKey(const SkewBrace& B) {
  const Index n = B.order();
  std::vector<Index> k;
  k.reserve(static_cast<std::size_t>(n) * n);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) k.push_back(B.lambda(a, b));
  return k;
}

bool isomorphic(const SkewBrace& x, const SkewBrace& y) {
  if (x.order() != y.order() || x.isBrace() != y.isBrace() || x.circ().isAbelian() != y.circ().isAbelian()) return false;
  if (lClass(x) != lClass(y) || substructures(x).soc.size() != substructures(y).soc.size()) return false;
  const FinGroup& A = x.dot();
  const auto gens = A.generators();
  std::vector<std::vector<Index>> cand(gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (Index t = 0; t < y.order(); ++t)
      if (y.dot().elementOrder(t) == A.elementOrder(gens[j]) && y.circ().elementOrder(t) == x.circ().elementOrder(gens[j]))
        cand[j].push_back(t);
  std::vector<Index> img(gens.size());
  const Index n = x.order();
  std::function<bool(std::size_t)> rec = [&](std::size_t j) -> bool {
    if (j == gens.size()) {
      constexpr Index kUnset = static_cast<Index>(-1);
      std::vector<Index> f(n, kUnset);
      f[A.identity()] = y.identity();
      std::vector<Index> queue{A.identity()};
      for (std::size_t k = 0; k < queue.size(); ++k)
        for (std::size_t g = 0; g < gens.size(); ++g) {
          const Index u = A.mul(queue[k], gens[g]);
          const Index fu = y.dot().mul(f[queue[k]], img[g]);
          if (f[u] == kUnset) {
            f[u] = fu;
            queue.push_back(u);
          } else if (f[u] != fu) {
            return false;
          }
        }
      std::vector<char> hit(n, 0);
      for (Index u = 0; u < n; ++u) {
        if (hit[f[u]]) return false;
        hit[f[u]] = 1;
      }
      for (Index u = 0; u < n; ++u)
        for (Index v = 0; v < n; ++v)
          if (f[x.circ().mul(u, v)] != y.circ().mul(f[u], f[v])) return false;
      return true;
    }
    for (Index t : cand[j]) {
      img[j] = t;
      if (rec(j + 1)) return true;
    }
    return false;
  };
  return rec(0);
}

std::vector<SkewBrace> isoClasses(const std::vector<SkewBrace>& braces) {
  std::vector<SkewBrace> reps;
  for (const SkewBrace& B : braces) {
    bool fresh = true;
    for (const SkewBrace& R : reps)
      if (isomorphic(B, R)) {
        fresh = false;
        break;
      }
    if (fresh) reps.push_back(B);
  }
  return reps;
}

}  // namespace lazard
