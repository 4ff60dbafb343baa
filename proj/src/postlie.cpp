#include "lazard/postlie.hpp"

#include <string>

#include "lazard/error.hpp"

namespace lazard {

namespace {

std::string triple(int i, int j, int k) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," + std::to_string(k + 1) + ")";
}

std::vector<PVec> generatorsOf(const PShape& sh) {
  std::vector<PVec> g;
  for (int i = 0; i < sh.rank(); ++i) g.push_back(sh.gen(i));
  return g;
}

// Descending chain of additive subgroups X_{i+1} = span(step(generators of X_i)).
template <class Step>
SeriesResult moduleSeries(const PShape& sh, Step&& step) {
  SeriesResult r;
  r.universe = static_cast<Index>(sh.order());
  r.zero = 0;
  Subset cur = Subset::all(r.universe);
  std::vector<PVec> gens = generatorsOf(sh);
  int i = 1;
  while (true) {
    if (cur.size() == 1) {
      r.nilpotent = true;
      r.nilClass = i - 1;
      return r;
    }
    r.terms.push_back(cur);
    Subset next = additiveSpan(sh, step(gens));
    if (next == cur) return r;
    cur = std::move(next);
    gens = spanGenerators(sh, cur);
    ++i;
  }
}

}  // namespace

PostLieRing::PostLieRing(LieRingSC base)
    : base_(std::move(base)), d_(static_cast<std::size_t>(base_.rank()) * base_.rank(), base_.shape().zero()) {}

void PostLieRing::setTriangle(int i, int j, const PVec& v) { d_[static_cast<std::size_t>(i) * rank() + j] = v; }

PVec PostLieRing::act(const PVec& a, const PVec& b) const {
  const PShape& sh = shape();
  PVec r = sh.zero();
  const int n = rank();
  for (int i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (b[j] == 0) continue;
      const PVec& d = d_[static_cast<std::size_t>(i) * n + j];
      if (!d.isZero()) r += mulMod(a[i], b[j], sh.exponent()) * d;
    }
  }
  return r;
}

Endo PostLieRing::leftMul(const PVec& a) const {
  std::vector<PVec> im;
  for (int j = 0; j < rank(); ++j) im.push_back(act(a, shape().gen(j)));
  return Endo(shape(), std::move(im));
}

bool PostLieRing::isZeroAction() const {
  for (const auto& d : d_)
    if (!d.isZero()) return false;
  return true;
}

Report verifyPostLie(const PostLieRing& P) {
  Report r;
  const PShape& sh = P.shape();
  const int n = P.rank();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const std::int64_t m = ipow(sh.p(), std::min(sh.exp(i), sh.exp(j)));
      if (!(m * P.triangle(i, j)).isZero())
        r.fail("triangle (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") not well defined");
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const PVec x = sh.gen(i), y = sh.gen(j), z = sh.gen(k);
        const PVec lhs1 = P.act(x, P.bracket(y, z));
        const PVec rhs1 = P.bracket(P.act(x, y), z) + P.bracket(y, P.act(x, z));
        if (!(lhs1 == rhs1)) r.fail("x>[y,z] = [x>y,z] + [y,x>z] fails at " + triple(i, j, k));
        const PVec assocXY = P.act(x, P.act(y, z)) - P.act(P.act(x, y), z);
        const PVec assocYX = P.act(y, P.act(x, z)) - P.act(P.act(y, x), z);
        if (!(P.act(P.bracket(x, y), z) == assocXY - assocYX))
          r.fail("[x,y]>z = (x,y,z) - (y,x,z) fails at " + triple(i, j, k));
      }
  return r;
}

LieRingSC circRing(const PostLieRing& P) {
  const PShape& sh = P.shape();
  LieRingSC C(sh);
  for (int i = 0; i < P.rank(); ++i)
    for (int j = 0; j < P.rank(); ++j)
      C.setRaw(i, j, P.base().structure(i, j) + P.triangle(i, j) - P.triangle(j, i));
  return C;
}

SeriesResult lSeries(const PostLieRing& P) {
  const PShape& sh = P.shape();
  return moduleSeries(sh, [&](const std::vector<PVec>& gens) {
    std::vector<PVec> out;
    for (int j = 0; j < sh.rank(); ++j)
      for (const PVec& b : gens) {
        out.push_back(P.act(sh.gen(j), b));
        out.push_back(P.bracket(sh.gen(j), b));
      }
    return out;
  });
}

SeriesResult leftSeries(const PostLieRing& P) {
  const PShape& sh = P.shape();
  return moduleSeries(sh, [&](const std::vector<PVec>& gens) {
    std::vector<PVec> out;
    for (int j = 0; j < sh.rank(); ++j)
      for (const PVec& b : gens) out.push_back(P.act(sh.gen(j), b));
    return out;
  });
}

SeriesResult rightSeries(const PostLieRing& P) {
  const PShape& sh = P.shape();
  return moduleSeries(sh, [&](const std::vector<PVec>& gens) {
    std::vector<PVec> out;
    for (int j = 0; j < sh.rank(); ++j)
      for (const PVec& b : gens) out.push_back(P.act(b, sh.gen(j)));
    return out;
  });
}

bool rightNilpotent(const PostLieRing& P) { return rightSeries(P).nilpotent; }

NilpotencyDecomposition lNilpotencyDecomposition(const PostLieRing& P) {
  NilpotencyDecomposition d;
  d.leftNilpotent = leftSeries(P).nilpotent;
  d.baseNilpotent = lowerCentralSeries(P.base()).nilpotent;
  d.lNilpotent = lSeries(P).nilpotent;
  if (d.lNilpotent != (d.leftNilpotent && d.baseNilpotent))
    throw TheoremViolation("L-nilpotency differs from left nilpotency plus nilpotent base");
  return d;
}

int lClass(const PostLieRing& P) {
  SeriesResult s = lSeries(P);
  return s.nilpotent ? s.nilClass : -1;
}

bool isLazard(const PostLieRing& P) {
  const int k = lClass(P);
  return k >= 0 && (k < P.p() || P.order() == 1);
}

bool isSquareFree(const PostLieRing& P) {
  const PShape& sh = P.shape();
  for (Index a = 0; a < sh.order(); ++a) {
    const PVec v = sh.at(a);
    if (!P.act(v, v).isZero()) return false;
  }
  return true;
}

IdealKind idealType(const PostLieRing& P, const Subset& s) {
  const PShape& sh = P.shape();
  const std::vector<PVec> gens = spanGenerators(sh, s);
  const std::vector<PVec> all = generatorsOf(sh);
  for (const PVec& a : gens)
    for (const PVec& b : gens)
      if (!s.contains(P.bracket(a, b).index()) || !s.contains(P.act(a, b).index())) return IdealKind::NotClosed;
  for (const PVec& x : all)
    for (const PVec& y : gens)
      if (!s.contains(P.act(x, y).index())) return IdealKind::Sub;
  for (const PVec& x : all)
    for (const PVec& y : gens)
      if (!s.contains(P.bracket(x, y).index())) return IdealKind::LeftIdeal;
  // Ideal of the circ ring: also needs y ▷ x in s, given the left-ideal and
  // ideal conditions already hold.
  for (const PVec& x : all)
    for (const PVec& y : gens)
      if (!s.contains(P.act(y, x).index())) return IdealKind::StrongLeftIdeal;
  return IdealKind::Ideal;
}

IdealKind idealType(const PostLieRing& P, std::span<const PVec> gens) {
  return idealType(P, additiveSpan(P.shape(), gens));
}

Substructures substructures(const PostLieRing& P) {
  const PShape& sh = P.shape();
  const auto n = static_cast<Index>(sh.order());
  const std::vector<PVec> all = generatorsOf(sh);
  Substructures s{Subset(n), Subset(n), Subset(n)};
  for (Index x = 0; x < n; ++x) {
    const PVec a = sh.at(x);
    bool fix = true, soc = true, sym = true;
    for (const PVec& b : all) {
      if (!P.act(b, a).isZero()) fix = false;
      if (!P.act(a, b).isZero() || !P.bracket(a, b).isZero()) soc = false;
    }
    sym = fix && soc;
    if (fix) s.fix.insert(x);
    if (soc) s.soc.insert(x);
    if (sym) s.ann.insert(x);
  }
  if (idealType(P, s.fix) < IdealKind::LeftIdeal) throw TheoremViolation("Fix is not a left ideal");
  if (idealType(P, s.soc) != IdealKind::Ideal) throw TheoremViolation("Soc is not an ideal");
  if (idealType(P, s.ann) != IdealKind::Ideal) throw TheoremViolation("Ann is not an ideal");
  return s;
}

Filtration adjointFiltration(const PostLieRing& P, const Filtration& F) {
  const PShape& sh = P.shape();
  validateLieFiltration(P.base(), F);
  for (int i = 0; i < F.length(); ++i)
    if (idealType(P, F.terms[i]) < IdealKind::StrongLeftIdeal)
      throw Error("filtration term " + std::to_string(i + 1) + " is not a strong left ideal");
  std::vector<std::vector<PVec>> gens;
  for (const Subset& t : F.terms) gens.push_back(spanGenerators(sh, t));
  Filtration out;
  out.universe = F.universe;
  out.zero = F.zero;
  for (int i = 1; i <= F.length(); ++i) {
    Subset t(static_cast<Index>(sh.order()));
    for (Index x : F.terms[i - 1].elements()) {
      const Endo La = P.leftMul(sh.at(x));
      bool raises = true;
      for (int j = 1; j <= F.length() && raises; ++j) {
        const Subset target = F.term(i + j);
        for (const PVec& y : gens[j - 1])
          if (!target.contains(La(y).index())) {
            raises = false;
            break;
          }
      }
      if (raises) t.insert(x);
    }
    if (t.size() == 1) break;
    out.terms.push_back(std::move(t));
  }
  validateLieFiltration(circRing(P), out);
  return out;
}

Filtration adjointFiltration(const PostLieRing& P) {
  SeriesResult s = lSeries(P);
  if (!s.nilpotent) throw NotLazardError("not L-nilpotent");
  return adjointFiltration(P, s.filtration());
}

Report verifyLeftMulHomomorphism(const PostLieRing& P) {
  Report r;
  const LieRingSC C = circRing(P);
  const PShape& sh = P.shape();
  for (int i = 0; i < P.rank(); ++i)
    for (int j = 0; j < P.rank(); ++j) {
      const Endo lhs = P.leftMul(C.bracket(sh.gen(i), sh.gen(j)));
      const Endo rhs = commutator(P.leftMul(sh.gen(i)), P.leftMul(sh.gen(j)));
      if (!(lhs == rhs))
        r.fail("L_{g" + std::to_string(i + 1) + ",g" + std::to_string(j + 1) + "} != [L_g" + std::to_string(i + 1) + ", L_g" +
               std::to_string(j + 1) + "]");
    }
  return r;
}

CircBound circNilpotencyBound(const PostLieRing& P) {
  CircBound b;
  b.lClass = lClass(P);
  if (b.lClass < 0) throw Error("circNilpotencyBound: not L-nilpotent");
  SeriesResult c = lowerCentralSeries(circRing(P));
  b.circClass = c.nilpotent ? c.nilClass : -1;
  if (b.circClass < 0 || b.circClass > b.lClass)
    throw TheoremViolation("circ ring class " + std::to_string(b.circClass) + " exceeds L-class " + std::to_string(b.lClass));
  b.annContainsLast = true;
  if (b.lClass >= 1 && b.lClass <= static_cast<int>(c.terms.size())) {
    const Subset ann = substructures(P).ann;
    b.annContainsLast = c.terms[b.lClass - 1].subsetOf(ann);
  }
  if (!b.annContainsLast) throw TheoremViolation("gamma^k of the circ ring is not inside Ann");
  return b;
}

}  // namespace lazard
