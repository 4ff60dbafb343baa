#pragma once

// The correspondence between Lazard post-Lie rings and Lazard skew braces:
// S (group of flows) and L (back to Lie), with the maps V, W, U, Omega.

#include <functional>
#include <span>
#include <vector>

#include "lazard/postlie.hpp"
#include "lazard/skewbrace.hpp"

namespace lazard {

/// (a, x) in a ⊕ Der(a), x raising the filtration.
struct SemiDirectElem {
  PVec a;
  Endo f;
};

/// [(a,x),(b,y)] = ([a,b] + x(b) - y(a), [x,y]).
SemiDirectElem semidirectBracket(const LieRingSC& base, const SemiDirectElem& u, const SemiDirectElem& v);
SemiDirectElem bchSemidirect(const LieRingSC& base, int classBound, const SemiDirectElem& u, const SemiDirectElem& v);

/// V(a, x) = pr BCH((a, x), (0, -x)), truncated at classBound.
PVec evalV(const LieRingSC& base, int classBound, const PVec& a, const Endo& x);
/// Same with classBound = L-class of P; throws NotLazardError unless P is Lazard.
PVec evalV(const PostLieRing& P, const PVec& a, const Endo& x);
/// sum_{j >= 1} x^{j-1}(a) / j!, valid on an abelian base.
PVec evalVAbelian(const PVec& a, const Endo& x, int nilBound);

/// W(a) = V(a, L_a) as a table on shape indices; throws if not bijective.
std::vector<Index> flowsW(const PostLieRing& P, Exec exec = Exec::Parallel);

/// Inverse permutation; throws Error if `f` is not a bijection.
std::vector<Index> invertTable(std::span<const Index> f);

/// dot = BCH, a o b = a . exp(L_{Omega(a)})(b) with Omega = W^-1.
/// Carrier indices are the shape indices of P.
SkewBrace constructS(const PostLieRing& P, Exec exec = Exec::Parallel);

/// U(a, alpha) = pr P((a, alpha), (1, alpha^-1)) in Hol(A, .), with P
/// truncated at classBound.
Index evalU(const SkewBrace& B, Index a, std::span<const Index> alpha, int classBound);
/// Omega(a) = U(a, lambda_a); throws NotLazardError unless B is Lazard.
std::vector<Index> omegaMap(const SkewBrace& B, Exec exec = Exec::Parallel);
/// a + sum_{k >= 2} (-1)^{k+1} (1/k) (lambda_a - id)^{k-1}(a) in Laz^-1(A, .), abelian dot.
std::vector<Index> omegaAbelian(const SkewBrace& B);

/// L(B) on the coordinates iso; iso.toVec maps carrier indices to PVecs.
struct PostLieImage {
  PostLieRing ring;
  AbelianDecomposition iso;
};
/// base = Laz^-1(A, .), g_i ▷ g_j = log(lambda_{W(g_i)})(g_j). With a carrier
/// shape the coordinates are the shape indices themselves.
PostLieImage constructL(const SkewBrace& B, const PShape* carrier = nullptr, Exec exec = Exec::Parallel);

/// Omega(a o b) = BCH_circ(Omega(a), Omega(b)) for all pairs.
Report verifyOmegaIsomorphism(const SkewBrace& B, const PostLieImage& L, Exec exec = Exec::Parallel);

/// a ▷ b as a carrier table.
std::vector<Index> triangleTable(const PostLieImage& L);

/// Same subsets are sub-structures / left ideals / strong left ideals / ideals
/// on both sides, and Fix, Soc, Ann agree. B must be constructS(P).
/// Throws TheoremViolation on a mismatch; returns the number of subsets checked.
std::size_t transferCheck(const PostLieRing& P, const SkewBrace& B);

/// a ▷ b = 1/(p-1) sum_{i=0}^{p-2} xi^i lambda_{xi^-i a}(b) in Laz^-1(A, .).
/// Requires the strong series to vanish at step p; throws Error otherwise and
/// TheoremViolation when the table differs from constructL.
std::vector<Index> rootDiffTriangle(const SkewBrace& B, Exec exec = Exec::Parallel);

using ModuleMap = std::function<PVec(const PVec&)>;
/// m -> (1/n) sum_j xi^{jk} f(xi^-j m), the degree-k part of f when f is a
/// polynomial map of degree < n and xi a primitive n-th root of unity.
ModuleMap homogeneousComponent(ModuleMap f, int k, std::int64_t xi, int n);

}  // namespace lazard
