#include "lazard/liering.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace lazard {

std::string Report::str() const {
  if (ok) return "ok";
  std::string s;
  for (const auto& f : failures) s += (s.empty() ? "" : "; ") + f;
  return s;
}

// ---------------------------------------------------------------- spans

Subset additiveSpan(const PShape& shape, std::span<const PVec> gens) {
  const auto n = static_cast<Index>(shape.order());
  Subset s(n);
  std::vector<PVec> elems{shape.zero()};
  s.insert(0);
  for (const PVec& g : gens) {
    if (s.contains(g.index())) continue;
    // Add the cyclic group <g> to the current span.
    const std::size_t base = elems.size();
    PVec m = g;
    while (!s.contains(m.index())) {
      for (std::size_t k = 0; k < base; ++k) {
        PVec v = elems[k] + m;
        if (!s.contains(v.index())) {
          s.insert(v.index());
          elems.push_back(v);
        }
      }
      m += g;
    }
  }
  return s;
}

std::vector<PVec> spanGenerators(const PShape& shape, const Subset& s) {
  std::vector<PVec> gens;
  Subset cur = Subset::of(s.universe(), std::array<Index, 1>{0});
  for (Index x : s.elements()) {
    if (cur.size() == s.size()) break;
    if (cur.contains(x)) continue;
    gens.push_back(shape.at(x));
    cur = additiveSpan(shape, gens);
  }
  return gens;
}

std::vector<PVec> members(const PShape& shape, const Subset& s) {
  std::vector<PVec> v;
  for (Index x : s.elements()) v.push_back(shape.at(x));
  return v;
}

// ---------------------------------------------------------------- LieRingSC

LieRingSC::LieRingSC(const PShape& shape)
    : shape_(shape), c_(static_cast<std::size_t>(shape.rank()) * shape.rank(), shape.zero()) {}

void LieRingSC::setBracket(int i, int j, const PVec& v) {
  c_[static_cast<std::size_t>(i) * rank() + j] = v;
  c_[static_cast<std::size_t>(j) * rank() + i] = -v;
}

void LieRingSC::setRaw(int i, int j, const PVec& v) { c_[static_cast<std::size_t>(i) * rank() + j] = v; }

PVec LieRingSC::bracket(const PVec& a, const PVec& b) const {
  PVec r = shape_.zero();
  const int n = rank();
  for (int i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (b[j] == 0) continue;
      const PVec& c = c_[static_cast<std::size_t>(i) * n + j];
      if (!c.isZero()) r += mulMod(a[i], b[j], shape_.exponent()) * c;
    }
  }
  return r;
}

Endo LieRingSC::ad(const PVec& a) const {
  std::vector<PVec> im;
  for (int j = 0; j < rank(); ++j) im.push_back(bracket(a, shape_.gen(j)));
  return Endo(shape_, std::move(im));
}

bool LieRingSC::isAbelian() const {
  for (const auto& c : c_)
    if (!c.isZero()) return false;
  return true;
}

Index LieRingTable::times(std::int64_t k, Index a) const {
  k = mod(k, exponent);
  Index r = zero;
  while (k > 0) {
    if (k & 1) r = add(r, a);
    a = add(a, a);
    k >>= 1;
  }
  return r;
}

Index LieRingTable::scale(const PScalar& q, Index a) const {
  if (exponent == 1) return a;
  if (std::gcd(q.den(), exponent) != 1) throw NotLazardError("not p-divisible: " + q.str());
  return times(q.residue(exponent), a);
}

LieRingTable toTable(const LieRingSC& L, Exec exec) {
  const PShape& sh = L.shape();
  const auto n = static_cast<Index>(sh.order());
  const int r = sh.rank();
  // Rows are filled along b = b' + g_k with k the lowest nonzero digit of b.
  std::vector<Index> stride(r + 1, 1);
  for (int k = 0; k < r; ++k) stride[k + 1] = stride[k] * static_cast<Index>(sh.modulus(k));
  std::vector<int> low(n, 0);
  for (Index b = 1; b < n; ++b)
    while (b % stride[low[b] + 1] == 0) ++low[b];
  std::vector<Index> succ(static_cast<std::size_t>(n) * std::max(r, 1));
  for (Index x = 0; x < n; ++x) {
    const PVec v = sh.at(x);
    for (int k = 0; k < r; ++k) succ[static_cast<std::size_t>(x) * r + k] = (v + sh.gen(k)).index();
  }
  LieRingTable T;
  T.n = n;
  T.zero = 0;
  T.exponent = sh.exponent();
  T.addT.resize(static_cast<std::size_t>(n) * n);
  T.brT.resize(static_cast<std::size_t>(n) * n);
  tabulate1<char>(
      n,
      [&](Index a) {
        Index* row = &T.addT[static_cast<std::size_t>(a) * n];
        row[0] = a;
        for (Index b = 1; b < n; ++b) row[b] = succ[static_cast<std::size_t>(row[b - stride[low[b]]]) * r + low[b]];
        return char{0};
      },
      exec);
  tabulate1<char>(
      n,
      [&](Index a) {
        const PVec va = sh.at(a);
        std::array<Index, kMaxRank> img{};
        for (int k = 0; k < r; ++k) img[k] = L.bracket(va, sh.gen(k)).index();
        Index* row = &T.brT[static_cast<std::size_t>(a) * n];
        row[0] = 0;
        for (Index b = 1; b < n; ++b) row[b] = T.add(row[b - stride[low[b]]], img[low[b]]);
        return char{0};
      },
      exec);
  return T;
}

Report verifyLie(const LieRingSC& L) {
  Report r;
  const PShape& sh = L.shape();
  const int n = L.rank();
  for (int i = 0; i < n; ++i) {
    if (!L.structure(i, i).isZero()) r.fail("[g" + std::to_string(i + 1) + ",g" + std::to_string(i + 1) + "] != 0");
    for (int j = 0; j < n; ++j) {
      if (i < j && !(L.structure(i, j) + L.structure(j, i)).isZero())
        r.fail("antisymmetry fails at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      const std::int64_t m = ipow(sh.p(), std::min(sh.exp(i), sh.exp(j)));
      if (!(m * L.structure(i, j)).isZero())
        r.fail("bracket (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") not well defined: p^" +
               std::to_string(std::min(sh.exp(i), sh.exp(j))) + " * " + L.structure(i, j).str() + " != 0");
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        PVec a = sh.gen(i), b = sh.gen(j), c = sh.gen(k);
        PVec jac = L.bracket(a, L.bracket(b, c)) + L.bracket(b, L.bracket(c, a)) + L.bracket(c, L.bracket(a, b));
        if (!jac.isZero())
          r.fail("Jacobi fails at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," + std::to_string(k + 1) + ")");
      }
  return r;
}

namespace {

DecomposedLie decomposeWith(const LieRingTable& T, AbelianDecomposition iso, Exec exec, bool checkAdditive) {
  DecomposedLie d;
  d.iso = std::move(iso);
  if (d.iso.toVec.size() != T.n) throw Error("decomposeLie: coordinate map has the wrong size");
  const Index badAdd = !checkAdditive ? T.n : findFailure(
      T.n,
      [&](Index a) {
        for (Index b = 0; b < T.n; ++b)
          if (!(d.iso.toVec[T.add(a, b)] == d.iso.toVec[a] + d.iso.toVec[b])) return false;
        return true;
      },
      exec);
  if (badAdd < T.n) throw Error("decomposeLie: coordinates are not additive (row " + std::to_string(badAdd) + ")");
  const PShape& sh = d.iso.shape;
  d.sc = LieRingSC(sh);
  for (int i = 0; i < sh.rank(); ++i)
    for (int j = 0; j < sh.rank(); ++j) d.sc.setRaw(i, j, d.iso.toVec[T.bracket(d.iso.fromVec[sh.gen(i).index()], d.iso.fromVec[sh.gen(j).index()])]);
  const Index bad = findFailure(
      T.n,
      [&](Index a) {
        for (Index b = 0; b < T.n; ++b)
          if (!(d.iso.toVec[T.bracket(a, b)] == d.sc.bracket(d.iso.toVec[a], d.iso.toVec[b]))) return false;
        return true;
      },
      exec);
  if (bad < T.n) d.report.fail("bracket table is not biadditive (row " + std::to_string(bad) + ")");
  Report v = verifyLie(d.sc);
  for (auto& f : v.failures) d.report.fail(f);
  return d;
}

}  // namespace

DecomposedLie decomposeLie(const LieRingTable& T, Exec exec) { return decomposeWith(T, abelianDecompose(T.addT, T.n), exec, false); }

DecomposedLie decomposeLie(const LieRingTable& T, AbelianDecomposition iso, Exec exec) {
  return decomposeWith(T, std::move(iso), exec, true);
}

// ---------------------------------------------------------------- series

SeriesResult lowerCentralSeries(const LieRingSC& L) {
  const PShape& sh = L.shape();
  SeriesResult r;
  r.universe = static_cast<Index>(sh.order());
  r.zero = 0;
  Subset cur = Subset::all(r.universe);
  std::vector<PVec> gens;
  for (int i = 0; i < sh.rank(); ++i) gens.push_back(sh.gen(i));
  int i = 1;
  while (true) {
    if (cur.size() == 1) {
      r.nilpotent = true;
      r.nilClass = i - 1;
      return r;
    }
    r.terms.push_back(cur);
    std::vector<PVec> br;
    for (int j = 0; j < sh.rank(); ++j)
      for (const PVec& h : gens) br.push_back(L.bracket(sh.gen(j), h));
    Subset next = additiveSpan(sh, br);
    if (next == cur) return r;
    cur = std::move(next);
    gens = spanGenerators(sh, cur);
    ++i;
  }
}

Filtration canonicalFiltration(const LieRingSC& L) { return lowerCentralSeries(L).filtration(); }

void validateLieFiltration(const LieRingSC& L, const Filtration& f) {
  const PShape& sh = L.shape();
  if (f.length() > 0 && f.terms[0].size() != sh.order()) throw Error("filtration must start with the whole ring");
  std::vector<std::vector<PVec>> gens;
  for (int i = 0; i < f.length(); ++i) {
    if (f.terms[i].size() == 1) throw Error("filtration stores a zero term");
    if (i > 0 && !f.terms[i].subsetOf(f.terms[i - 1])) throw Error("filtration is not descending at " + std::to_string(i + 1));
    if (additiveSpan(sh, members(sh, f.terms[i])).size() != f.terms[i].size())
      throw Error("filtration term " + std::to_string(i + 1) + " is not a subgroup");
    gens.push_back(spanGenerators(sh, f.terms[i]));
  }
  for (int i = 0; i < f.length(); ++i)
    for (const PVec& x : gens[i])
      for (int j = 0; j < sh.rank(); ++j)
        if (!f.terms[i].contains(L.bracket(sh.gen(j), x).index()))
          throw Error("filtration term " + std::to_string(i + 1) + " is not an ideal");
  for (int i = 1; i <= f.length(); ++i)
    for (int j = i; j <= f.length(); ++j) {
      const Subset target = f.term(i + j);
      for (const PVec& x : gens[i - 1])
        for (const PVec& y : gens[j - 1])
          if (!target.contains(L.bracket(x, y).index()))
            throw Error("[F_" + std::to_string(i) + ", F_" + std::to_string(j) + "] is not contained in F_" + std::to_string(i + j));
    }
}

bool isLazard(const LieRingSC& L, const Filtration& f) {
  validateLieFiltration(L, f);
  return f.length() <= L.p() - 1;
}

bool isLazard(const LieRingSC& L) {
  SeriesResult s = lowerCentralSeries(L);
  return s.nilpotent && s.nilClass <= L.p() - 1;
}

// ---------------------------------------------------------------- BCH

const BchTerms& BchTerms::get(int c) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<BchTerms>> cache;
  c = std::max(c, 1);
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[c];
  if (!slot) {
    slot = std::make_unique<BchTerms>();
    slot->classBound = c;
    slot->basis = &LyndonBasis::get(c);
    FreeLieElem s = bchSeries(c);
    for (int i = 0; i < s.size(); ++i)
      if (s[i] != 0) slot->terms.emplace_back(i, toScalar(s[i]));
  }
  return *slot;
}

static void requireLazardClass(int classBound, int p) {
  if (classBound >= p) throw NotLazardError("not Lazard: filtration length " + std::to_string(classBound) + " >= p = " + std::to_string(p));
}

PVec bchEval(const LieRingSC& L, int classBound, const PVec& a, const PVec& b) {
  requireLazardClass(classBound, L.p());
  return bchApply<PVec>(
      BchTerms::get(classBound), a, b, [&](const PVec& u, const PVec& v) { return L.bracket(u, v); },
      [](const PVec& u, const PVec& v) { return u + v; }, [](const PScalar& q, const PVec& u) { return scalarAct(q, u); });
}

PVec bchEval(const LieRingSC& L, const Filtration& f, const PVec& a, const PVec& b) {
  return bchEval(L, f.length(), a, b);
}

Index bchEval(const LieRingTable& T, int classBound, Index a, Index b) {
  return bchApply<Index>(
      BchTerms::get(classBound), a, b, [&](Index u, Index v) { return T.bracket(u, v); },
      [&](Index u, Index v) { return T.add(u, v); }, [&](const PScalar& q, Index u) { return T.scale(q, u); });
}

FinGroup laz(const LieRingSC& L, const Filtration& f, Exec exec, bool force) {
  checkCapacity(L.order(), force, "laz");
  if (!isLazard(L, f)) throw NotLazardError("not Lazard: filtration length " + std::to_string(f.length()) + " >= p = " + std::to_string(L.p()));
  return laz(toTable(L, exec), f.length(), exec);
}

FinGroup laz(const LieRingSC& L, Exec exec, bool force) {
  SeriesResult s = lowerCentralSeries(L);
  if (!s.nilpotent) throw NotLazardError("not Lazard: Lie ring is not nilpotent");
  return laz(L, s.filtration(), exec, force);
}

namespace {

constexpr int kMaxBasis = 96;

template <class Br>
void fillBasis(const LyndonBasis& basis, Index a, Index b, Br&& br, Index* v) {
  for (int i = 0; i < basis.size(); ++i) {
    const LyndonElem& e = basis[i];
    v[i] = e.letter >= 0 ? (e.letter == 0 ? a : b) : br(v[e.left], v[e.right]);
  }
}

}  // namespace

FinGroup laz(const LieRingTable& T, int classBound, Exec exec) {
  const BchTerms& bch = BchTerms::get(classBound);
  // Multiplication-by-q maps, one per BCH term.
  std::vector<std::vector<Index>> scaled;
  for (const auto& term : bch.terms)
    scaled.push_back(tabulate1<Index>(T.n, [&](Index x) { return T.scale(term.second, x); }, Exec::Serial));
  auto table = tabulate(
      T.n,
      [&](Index a, Index b) {
        Index v[kMaxBasis];
        fillBasis(*bch.basis, a, b, [&](Index u, Index w) { return T.bracket(u, w); }, v);
        Index r = T.zero;
        for (std::size_t k = 0; k < bch.terms.size(); ++k) r = T.add(r, scaled[k][v[bch.terms[k].first]]);
        return r;
      },
      exec);
  return FinGroup(T.n, std::move(table), T.zero);
}

// ---------------------------------------------------------------- Laz^-1

namespace {

// Factors (basis index, exponent reduced modulo the group exponent).
std::vector<std::pair<int, std::int64_t>> compile(const GroupWord& w, std::int64_t e) {
  std::vector<std::pair<int, std::int64_t>> c;
  for (const auto& f : w.factors) {
    PScalar q = toScalar(f.exponent);
    if (std::gcd(q.den(), e) != 1) throw NotLazardError("not p-divisible: exponent " + q.str());
    c.emplace_back(f.basisIndex, q.residue(e));
  }
  return c;
}

}  // namespace

LieRingTable lazInv(const FinGroup& G, const Filtration& f, Exec exec, bool force) {
  checkCapacity(G.order(), force, "lazInv");
  const int p = G.prime();
  if (p == 0) throw Error("lazInv: group order " + std::to_string(G.order()) + " is not a prime power");
  validateGroupFiltration(G, f);
  const int k = std::max(1, f.length());
  if (G.order() > 1 && f.length() >= p)
    throw NotLazardError("not Lazard: filtration length " + std::to_string(f.length()) + " >= p = " + std::to_string(p));
  if (k > kMaxWordsClass) throw CapacityError("lazInv: class " + std::to_string(k) + " exceeds the derived inverse words");
  const InverseWords& words = inverseWords(k);
  const LyndonBasis& basis = LyndonBasis::get(k);
  const std::int64_t e = G.exponent();
  const auto P = compile(words.P, e), Q = compile(words.Q, e);
  const Index n = G.order();
  // x -> x^m for every exponent m that occurs.
  std::map<std::int64_t, std::vector<Index>> powers;
  for (const auto* w : {&P, &Q})
    for (const auto& fac : *w)
      if (!powers.count(fac.second))
        powers[fac.second] = tabulate1<Index>(n, [&](Index x) { return G.pow(x, fac.second); }, Exec::Serial);
  using Factors = std::vector<std::pair<int, const Index*>>;
  auto bind = [&](const std::vector<std::pair<int, std::int64_t>>& w) {
    Factors out;
    for (const auto& [idx, m] : w) out.emplace_back(idx, powers.at(m).data());
    return out;
  };
  const Factors Pf = bind(P), Qf = bind(Q);
  auto comm = [&](Index u, Index v) { return G.comm(u, v); };
  auto eval = [&](const Factors& w, Index a, Index b) {
    Index v[kMaxBasis];
    fillBasis(basis, a, b, comm, v);
    Index r = G.identity();
    for (const auto& [idx, pw] : w) r = G.mul(r, pw[v[idx]]);
    return r;
  };
  LieRingTable T;
  T.n = n;
  T.zero = G.identity();
  T.exponent = e;
  T.addT = tabulate(n, [&](Index a, Index b) { return eval(Pf, a, b); }, exec);
  T.brT = tabulate(n, [&](Index a, Index b) { return eval(Qf, a, b); }, exec);
  // The additive exponent equals the group exponent (same cyclic subgroups).
  return T;
}

LieRingTable lazInv(const FinGroup& G, Exec exec, bool force) {
  SeriesResult s = canonicalGroupFiltration(G);
  if (!s.nilpotent) throw NotLazardError("not Lazard: group is not nilpotent");
  return lazInv(G, s.filtration(), exec, force);
}

}  // namespace lazard
