#include "lazard/lazcorr.hpp"

#include <numeric>
#include <set>

#include "lazard/error.hpp"

namespace lazard {

namespace {

int requireLazard(int k, int p, std::uint64_t order, const char* what) {
  if (order == 1) return 1;
  if (k < 0) throw NotLazardError(std::string(what) + ": not L-nilpotent");
  if (k >= p)
    throw NotLazardError(std::string(what) + ": not Lazard, L-class " + std::to_string(k) + " >= p = " + std::to_string(p) +
                         " (the correspondence needs k < p)");
  return std::max(1, k);
}

int lazardClass(const PostLieRing& P) { return requireLazard(lClass(P), P.p(), P.order(), "post-Lie ring"); }
int lazardClass(const SkewBrace& B) { return requireLazard(lClass(B), B.dot().prime(), B.order(), "skew brace"); }

// Elements (a, alpha) of Hol(A, .) with alpha a permutation of the carrier.
struct Hol {
  const FinGroup& A;

  struct Elem {
    Index a;
    std::vector<Index> alpha;
  };

  Elem mul(const Elem& x, const Elem& y) const {
    Elem r{A.mul(x.a, x.alpha[y.a]), std::vector<Index>(x.alpha.size())};
    for (std::size_t g = 0; g < r.alpha.size(); ++g) r.alpha[g] = x.alpha[y.alpha[g]];
    return r;
  }
  Elem inv(const Elem& x) const {
    Elem r{0, std::vector<Index>(x.alpha.size())};
    for (std::size_t g = 0; g < x.alpha.size(); ++g) r.alpha[x.alpha[g]] = static_cast<Index>(g);
    r.a = r.alpha[A.inv(x.a)];
    return r;
  }
  Elem one() const {
    Elem r{A.identity(), std::vector<Index>(A.order())};
    std::iota(r.alpha.begin(), r.alpha.end(), Index{0});
    return r;
  }
  Elem comm(const Elem& x, const Elem& y) const { return mul(mul(inv(x), inv(y)), mul(x, y)); }
  Elem pow(Elem x, std::int64_t k) const {
    Elem r = one();
    while (k > 0) {
      if (k & 1) r = mul(r, x);
      k >>= 1;
      if (k > 0) x = mul(x, x);
    }
    return r;
  }
  std::int64_t order(const Elem& x) const {
    std::int64_t m = 1;
    std::vector<char> seen(x.alpha.size(), 0);
    for (std::size_t g = 0; g < x.alpha.size(); ++g) {
      if (seen[g]) continue;
      std::int64_t len = 0;
      for (std::size_t h = g; !seen[h]; h = x.alpha[h]) {
        seen[h] = 1;
        ++len;
      }
      m = std::lcm(m, len);
    }
    return m * A.elementOrder(pow(x, m).a);
  }
};

}  // namespace

SemiDirectElem semidirectBracket(const LieRingSC& base, const SemiDirectElem& u, const SemiDirectElem& v) {
  return {base.bracket(u.a, v.a) + u.f(v.a) - v.f(u.a), commutator(u.f, v.f)};
}

SemiDirectElem bchSemidirect(const LieRingSC& base, int classBound, const SemiDirectElem& u, const SemiDirectElem& v) {
  return bchApply<SemiDirectElem>(
      BchTerms::get(classBound), u, v, [&](const SemiDirectElem& x, const SemiDirectElem& y) { return semidirectBracket(base, x, y); },
      [](const SemiDirectElem& x, const SemiDirectElem& y) { return SemiDirectElem{x.a + y.a, x.f + y.f}; },
      [](const PScalar& q, const SemiDirectElem& x) { return SemiDirectElem{scalarAct(q, x.a), scaled(q, x.f)}; });
}

PVec evalV(const LieRingSC& base, int classBound, const PVec& a, const Endo& x) {
  if (classBound >= base.p() && base.order() > 1) throw NotLazardError("evalV: truncation degree must stay below p");
  return bchSemidirect(base, classBound, {a, x}, {base.shape().zero(), -x}).a;
}

PVec evalV(const PostLieRing& P, const PVec& a, const Endo& x) { return evalV(P.base(), lazardClass(P), a, x); }

PVec evalVAbelian(const PVec& a, const Endo& x, int nilBound) {
  PVec r = a;
  PVec t = a;
  std::int64_t fact = 1;
  for (int j = 2; j <= nilBound; ++j) {
    t = x(t);
    fact *= j;
    r += scalarAct(PScalar(1, fact), t);
  }
  return r;
}

std::vector<Index> invertTable(std::span<const Index> f) {
  constexpr Index kUnset = static_cast<Index>(-1);
  std::vector<Index> inv(f.size(), kUnset);
  for (Index x = 0; x < f.size(); ++x) {
    if (f[x] >= f.size() || inv[f[x]] != kUnset) throw Error("map is not a bijection (value " + std::to_string(f[x]) + ")");
    inv[f[x]] = x;
  }
  return inv;
}

std::vector<Index> flowsW(const PostLieRing& P, Exec exec) {
  const int k = lazardClass(P);
  const PShape& sh = P.shape();
  auto W = tabulate1<Index>(
      static_cast<Index>(sh.order()),
      [&](Index x) {
        const PVec a = sh.at(x);
        return evalV(P.base(), k, a, P.leftMul(a)).index();
      },
      exec);
  invertTable(W);
  return W;
}

SkewBrace constructS(const PostLieRing& P, Exec exec) {
  const int k = lazardClass(P);
  const PShape& sh = P.shape();
  const auto n = static_cast<Index>(sh.order());
  FinGroup dot = laz(toTable(P.base(), exec), k, exec);
  const std::vector<Index> omega = invertTable(flowsW(P, exec));
  // Row a of circ: b -> a . exp(L_{Omega(a)})(b), with exp(L) applied through
  // its generator images.
  std::vector<Index> circ(static_cast<std::size_t>(n) * n);
  const std::vector<PVec> all = [&] {
    std::vector<PVec> v;
    for (Index b = 0; b < n; ++b) v.push_back(sh.at(b));
    return v;
  }();
  const long long rows = n;
  std::exception_ptr err;
#pragma omp parallel for schedule(dynamic, 4) if (exec == Exec::Parallel)
  for (long long a = 0; a < rows; ++a) {
    try {
      const Endo e = endoExp(P.leftMul(sh.at(omega[a])), k);
      for (Index b = 0; b < n; ++b) circ[static_cast<std::size_t>(a) * n + b] = dot.mul(static_cast<Index>(a), e(all[b]).index());
    } catch (...) {
#pragma omp critical(lazard_s_err)
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  SkewBrace B(std::move(dot), FinGroup(n, std::move(circ), 0));
  Report r = verifySkewBrace(B, exec);
  if (!r.ok) throw TheoremViolation("constructS produced a non-brace: " + r.str());
  return B;
}

Index evalU(const SkewBrace& B, Index a, std::span<const Index> alpha, int classBound) {
  const Hol H{B.dot()};
  const Hol::Elem x{a, std::vector<Index>(alpha.begin(), alpha.end())};
  const Hol::Elem y{B.identity(), H.inv({B.identity(), x.alpha}).alpha};
  const GroupWord& P = inverseWords(classBound).P;
  const LyndonBasis& basis = LyndonBasis::get(classBound);
  std::vector<Hol::Elem> v =
      evalBasis<Hol::Elem>(basis, x, y, [&](const Hol::Elem& u, const Hol::Elem& w) { return H.comm(u, w); });
  Hol::Elem r = H.one();
  for (const auto& f : P.factors) {
    const Hol::Elem& base = v[f.basisIndex];
    const std::int64_t ord = H.order(base);
    if (ord == 1) continue;
    r = H.mul(r, H.pow(base, toScalar(f.exponent).residue(ord)));
  }
  for (Index g = 0; g < r.alpha.size(); ++g)
    if (r.alpha[g] != g) throw TheoremViolation("U: P((a,alpha),(1,alpha^-1)) has a nontrivial automorphism part");
  return r.a;
}

std::vector<Index> omegaMap(const SkewBrace& B, Exec exec) {
  const int k = lazardClass(B);
  const Index n = B.order();
  const Filtration F = lSeries(B).filtration();
  auto omega = tabulate1<Index>(
      n,
      [&](Index a) {
        std::vector<Index> lam(n);
        for (Index b = 0; b < n; ++b) lam[b] = B.lambda(a, b);
        if (!inAutFiltration(B.dot(), F, lam, 1)) throw TheoremViolation("lambda_" + std::to_string(a) + " is not in Aut(A)_1");
        return evalU(B, a, lam, k);
      },
      exec);
  invertTable(omega);
  return omega;
}

std::vector<Index> omegaAbelian(const SkewBrace& B) {
  const int k = lazardClass(B);
  if (!B.dot().isAbelian()) throw Error("omegaAbelian: (A, .) is not abelian");
  const LieRingTable T = lazInv(B.dot());
  const Index n = B.order();
  std::vector<Index> omega(n);
  for (Index a = 0; a < n; ++a) {
    Index r = a, t = a;
    for (int j = 2; j <= k; ++j) {
      t = T.add(B.lambda(a, t), T.neg(t));
      r = T.add(r, T.scale(PScalar(j % 2 == 0 ? -1 : 1, j), t));
    }
    omega[a] = r;
  }
  return omega;
}

PostLieImage constructL(const SkewBrace& B, const PShape* carrier, Exec exec) {
  const int k = lazardClass(B);
  const LieRingTable T = lazInv(B.dot(), exec);
  DecomposedLie d;
  if (carrier) {
    if (carrier->order() != B.order()) throw Error("constructL: carrier shape has the wrong order");
    AbelianDecomposition iso;
    iso.shape = *carrier;
    for (Index x = 0; x < B.order(); ++x) {
      iso.toVec.push_back(carrier->at(x));
      iso.fromVec.push_back(x);
    }
    d = decomposeLie(T, std::move(iso), exec);
  } else {
    d = decomposeLie(T, exec);
  }
  if (!d.report.ok) throw TheoremViolation("Laz^-1 of the dot group is not a Lie ring: " + d.report.str());
  const PShape& sh = d.iso.shape;
  const std::vector<Index> W = invertTable(omegaMap(B, exec));
  PostLieImage out{PostLieRing(d.sc), d.iso};
  for (int i = 0; i < sh.rank(); ++i) {
    const Index w = W[d.iso.fromVec[sh.gen(i).index()]];
    std::vector<PVec> im;
    for (int j = 0; j < sh.rank(); ++j) im.push_back(d.iso.toVec[B.lambda(w, d.iso.fromVec[sh.gen(j).index()])]);
    const Endo D = endoLog(Endo(sh, std::move(im)), k);
    for (int j = 0; j < sh.rank(); ++j) out.ring.setTriangle(i, j, D.image(j));
  }
  Report r = verifyPostLie(out.ring);
  if (!r.ok) throw TheoremViolation("constructL produced a non post-Lie ring: " + r.str());
  return out;
}

Report verifyOmegaIsomorphism(const SkewBrace& B, const PostLieImage& L, Exec exec) {
  Report r;
  const int k = lazardClass(B);
  const std::vector<Index> omega = omegaMap(B, exec);
  const LieRingSC C = circRing(L.ring);
  const Index n = B.order();
  const Index bad = findFailure(
      n,
      [&](Index a) {
        for (Index b = 0; b < n; ++b)
          if (!(L.iso.toVec[omega[B.circ().mul(a, b)]] == bchEval(C, k, L.iso.toVec[omega[a]], L.iso.toVec[omega[b]]))) return false;
        return true;
      },
      exec);
  if (bad < n) r.fail("Omega(a o b) != BCH(Omega(a), Omega(b)) for a = " + std::to_string(bad));
  return r;
}

std::vector<Index> triangleTable(const PostLieImage& L) {
  const auto n = static_cast<Index>(L.iso.toVec.size());
  std::vector<Index> t(static_cast<std::size_t>(n) * n);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      t[static_cast<std::size_t>(a) * n + b] = L.iso.fromVec[L.ring.act(L.iso.toVec[a], L.iso.toVec[b]).index()];
  return t;
}

std::size_t transferCheck(const PostLieRing& P, const SkewBrace& B) {
  const PShape& sh = P.shape();
  const auto n = static_cast<Index>(sh.order());
  if (B.order() != n) throw Error("transferCheck: carriers differ in size");
  const LieRingTable T = toTable(P.base());
  const FinGroup additive(n, T.addT, 0);
  std::set<std::vector<Index>> seen;
  std::vector<Subset> candidates;
  for (const FinGroup* g : {&additive, &B.dot()})
    for (Subset& s : allSubgroups(*g))
      if (seen.insert(s.elements()).second) candidates.push_back(std::move(s));
  for (const Subset& s : candidates) {
    const bool additiveSub = additiveSpan(sh, members(sh, s)) == s;
    const IdealKind kp = additiveSub ? idealType(P, s) : IdealKind::NotClosed;
    const IdealKind kb = idealType(B, s);
    if (kp != kb)
      throw TheoremViolation("subset " + s.str() + " is a " + idealKindName(kp) + " of the post-Lie ring but a " + idealKindName(kb) +
                             " of the skew brace");
  }
  const Substructures sp = substructures(P), sb = substructures(B);
  if (!(sp.fix == sb.fix)) throw TheoremViolation("Fix differs: " + sp.fix.str() + " vs " + sb.fix.str());
  if (!(sp.soc == sb.soc)) throw TheoremViolation("Soc differs: " + sp.soc.str() + " vs " + sb.soc.str());
  if (!(sp.ann == sb.ann)) throw TheoremViolation("Ann differs: " + sp.ann.str() + " vs " + sb.ann.str());
  if (lowerCentralSeries(P.base()).nilpotent && rightNilpotent(P) != rightNilpotent(B))
    throw TheoremViolation("right nilpotency is not preserved");
  if (isSquareFree(P) != isSquareFree(B)) throw TheoremViolation("square-freeness is not preserved");
  return candidates.size();
}

std::vector<Index> rootDiffTriangle(const SkewBrace& B, Exec exec) {
  const int p = B.dot().prime();
  const Index n = B.order();
  if (n == 1) return {0};
  if (p < 3) throw Error("rootDiffTriangle: needs an odd prime");
  const SeriesResult strong = strongSeries(B);
  if (!strong.nilpotent || static_cast<int>(strong.terms.size()) >= p)
    throw Error("strong series too long: A^{{" + std::to_string(p) + "}} != 1");
  const LieRingTable T = lazInv(B.dot(), exec);
  const std::int64_t xi = rootOfUnity(p, pValuation(T.exponent, p));
  const std::int64_t xiInv = invMod(xi, T.exponent);
  const PScalar mean(1, p - 1);
  std::vector<std::int64_t> up(p - 1), down(p - 1);
  for (int i = 0; i < p - 1; ++i) {
    up[i] = powMod(xi, i, T.exponent);
    down[i] = powMod(xiInv, i, T.exponent);
  }
  auto table = tabulate(
      n,
      [&](Index a, Index b) {
        Index s = T.zero;
        for (int i = 0; i < p - 1; ++i) s = T.add(s, T.times(up[i], B.lambda(T.times(down[i], a), b)));
        return T.scale(mean, s);
      },
      exec);
  const PostLieImage L = constructL(B, nullptr, exec);
  const std::vector<Index> expect = triangleTable(L);
  for (std::size_t x = 0; x < table.size(); ++x)
    if (table[x] != expect[x])
      throw TheoremViolation("root-of-unity formula differs from constructL at (" + std::to_string(x / n) + "," + std::to_string(x % n) + ")");
  return table;
}

ModuleMap homogeneousComponent(ModuleMap f, int k, std::int64_t xi, int n) {
  return [f = std::move(f), k, xi, n](const PVec& m) {
    const PShape& sh = m.shape();
    const std::int64_t e = sh.exponent();
    const std::int64_t xiInv = invMod(xi, e);
    PVec s = sh.zero();
    for (int j = 0; j < n; ++j) s += powMod(xi, static_cast<std::int64_t>(j) * k, e) * f(powMod(xiInv, j, e) * m);
    return scalarAct(PScalar(1, n), s);
  };
}

}  // namespace lazard
