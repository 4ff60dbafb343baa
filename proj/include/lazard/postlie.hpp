#pragma once

// Post-Lie rings (a, [,], ▷) on a Lie ring given by structure constants.

#include <vector>

#include "lazard/liering.hpp"

namespace lazard {

class PostLieRing {
 public:
  PostLieRing() = default;
  // ▷ = 0 on the given base.
  explicit PostLieRing(LieRingSC base);

  // g_i ▷ g_j = v.
  void setTriangle(int i, int j, const PVec& v);

  const LieRingSC& base() const { return base_; }
  const PShape& shape() const { return base_.shape(); }
  int p() const { return base_.p(); }
  int rank() const { return base_.rank(); }
  std::uint64_t order() const { return base_.order(); }
  const PVec& triangle(int i, int j) const { return d_[static_cast<std::size_t>(i) * rank() + j]; }

  PVec act(const PVec& a, const PVec& b) const;  // a ▷ b
  PVec bracket(const PVec& a, const PVec& b) const { return base_.bracket(a, b); }
  Endo leftMul(const PVec& a) const;             // L_a
  bool isPreLie() const { return base_.isAbelian(); }
  bool isZeroAction() const;
  bool operator==(const PostLieRing& o) const { return base_ == o.base_ && d_ == o.d_; }

 private:
  LieRingSC base_;
  std::vector<PVec> d_;
};

/// Well-definedness of ▷ and both post-Lie axioms on generator triples.
Report verifyPostLie(const PostLieRing& P);

/// {a,b} = [a,b] + a▷b - b▷a.
LieRingSC circRing(const PostLieRing& P);

/// L^{i+1} = <a▷b, [a,b] : a in P, b in L^i>.
SeriesResult lSeries(const PostLieRing& P);
/// a^{i+1} = <a▷b : b in a^i>.
SeriesResult leftSeries(const PostLieRing& P);
/// a^{(i+1)} = <b▷a : b in a^{(i)}>.
SeriesResult rightSeries(const PostLieRing& P);
bool rightNilpotent(const PostLieRing& P);

struct NilpotencyDecomposition {
  bool leftNilpotent = false;
  bool baseNilpotent = false;
  bool lNilpotent = false;
};
// Throws TheoremViolation unless lNilpotent == leftNilpotent && baseNilpotent.
NilpotencyDecomposition lNilpotencyDecomposition(const PostLieRing& P);

/// L-class of P (least k with L^{k+1} = 0), -1 when not L-nilpotent.
int lClass(const PostLieRing& P);
/// L-nilpotent with L-class < p.
bool isLazard(const PostLieRing& P);
/// a ▷ a = 0 for every element.
bool isSquareFree(const PostLieRing& P);

struct Substructures {
  Subset fix;
  Subset soc;
  Subset ann;
};
// Also checks Fix is a left ideal and Soc, Ann are ideals (TheoremViolation otherwise).
Substructures substructures(const PostLieRing& P);

/// Classification of the additive subgroup spanned by `gens`.
IdealKind idealType(const PostLieRing& P, std::span<const PVec> gens);
IdealKind idealType(const PostLieRing& P, const Subset& s);

/// a°_i = {a in F_i : L_a(F_j) <= F_{i+j} for all j}; validated as a filtration
/// of circRing(P). F must be a chain of strong left ideals.
Filtration adjointFiltration(const PostLieRing& P, const Filtration& F);
Filtration adjointFiltration(const PostLieRing& P);

/// Checks that a -> L_a is a Lie ring map from circRing(P) on generators.
Report verifyLeftMulHomomorphism(const PostLieRing& P);

struct CircBound {
  int lClass = -1;
  int circClass = -1;
  bool annContainsLast = false;
};
/// For an L-nilpotent P of class k: class(circRing) <= k and gamma^k(circRing)
/// lies in Ann(P). Throws TheoremViolation when either fails.
CircBound circNilpotencyBound(const PostLieRing& P);

}  // namespace lazard
