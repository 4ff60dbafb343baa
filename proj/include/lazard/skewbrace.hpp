#pragma once

// Skew braces (A, ., o) stored as two Cayley tables on the same carrier.

#include <cstdint>
#include <string>
#include <vector>

#include "lazard/fingroup.hpp"
#include "lazard/kernels.hpp"
#include "lazard/liering.hpp"
#include "lazard/postlie.hpp"

namespace lazard {

class SkewBrace {
 public:
  SkewBrace() = default;
  // Both groups must share order and identity.
  SkewBrace(FinGroup dot, FinGroup circ);

  const FinGroup& dot() const { return dot_; }
  const FinGroup& circ() const { return circ_; }
  Index order() const { return dot_.order(); }
  Index identity() const { return dot_.identity(); }
  // lambda_a(b) = a^-1 . (a o b)
  Index lambda(Index a, Index b) const { return dot_.mul(dot_.inv(a), circ_.mul(a, b)); }
  // a * b = lambda_a(b) . b^-1
  Index star(Index a, Index b) const { return dot_.mul(lambda(a, b), dot_.inv(b)); }
  bool isBrace() const { return dot_.isAbelian(); }
  bool operator==(const SkewBrace& o) const { return dot_ == o.dot_ && circ_ == o.circ_; }

 private:
  FinGroup dot_;
  FinGroup circ_;
};

/// a o (b . c) = (a o b) . a^-1 . (a o c) for all triples, checked as
/// "every lambda_a is an endomorphism of (A, .)" on dot generators.
Report verifySkewBrace(const SkewBrace& B, Exec exec = Exec::Parallel);

struct LambdaTables {
  Index n = 0;
  std::vector<Index> lambda;  // lambda[a * n + b] = lambda_a(b)
  std::vector<Index> star;    // star[a * n + b] = a * b
  Index lambdaAt(Index a, Index b) const { return lambda[static_cast<std::size_t>(a) * n + b]; }
  Index starAt(Index a, Index b) const { return star[static_cast<std::size_t>(a) * n + b]; }
};
// Checks lambda_a in Aut(A, .) and lambda_{a o b} = lambda_a lambda_b.
LambdaTables lambdaAndStar(const SkewBrace& B, Exec exec = Exec::Parallel);

/// L^{i+1} = <a * b, a b a^-1 b^-1 : a in A, b in L^i> in (A, .).
SeriesResult lSeries(const SkewBrace& B);
/// A^{i+1} = <a * b : a in A, b in A^i>.
SeriesResult leftSeries(const SkewBrace& B);
/// A^{(i+1)} = <b * a : b in A^{(i)}, a in A>.
SeriesResult rightSeries(const SkewBrace& B);
bool rightNilpotent(const SkewBrace& B);
/// A^{{k+1}} = <a * b, a b a^-1 b^-1 : a in A^{{i}}, b in A^{{k+1-i}}>.
SeriesResult strongSeries(const SkewBrace& B);

NilpotencyDecomposition nilpotencyDecomposition(const SkewBrace& B);
int lClass(const SkewBrace& B);
bool isLazard(const SkewBrace& B);
bool isSquareFree(const SkewBrace& B);

CircBound circNilpotencyBound(const SkewBrace& B);
Substructures substructures(const SkewBrace& B);
IdealKind idealType(const SkewBrace& B, const Subset& s);

/// {a^n} = {a^{o n}} and {a : a^n = 1} = {a : a^{o n} = 1}, all four ideals.
/// Throws TheoremViolation otherwise.
Report powerSetIdeals(const SkewBrace& B, std::int64_t n);

/// Aut(A)_i for a filtration F: f(g) g^-1 in F_{i+j} for g in F_j.
bool inAutFiltration(const FinGroup& A, const Filtration& F, std::span<const Index> f, int i);
/// (A, o)_i = F_i and lambda_a in Aut(A, .)_i; validated as a filtration of (A, o).
Filtration adjointGroupFiltration(const SkewBrace& B, const Filtration& F);

/// Automorphisms of A as permutations; with a filtration, only Aut(A)_1.
std::vector<std::vector<Index>> automorphisms(const FinGroup& A, const Filtration* F = nullptr);
/// Strictly descending group filtrations of A with at most maxLength terms.
std::vector<Filtration> allFiltrations(const FinGroup& A, int maxLength);

/// Hol(A)^+ = A x Aut(A)_1, element (a, k) stored at a * auts.size() + k.
struct Holomorph {
  std::vector<std::vector<Index>> auts;
  FinGroup group;
  Index carrier = 0;
  Index element(Index a, std::size_t k) const { return a * static_cast<Index>(auts.size()) + static_cast<Index>(k); }
  Index base(Index x) const { return x / static_cast<Index>(auts.size()); }
  std::size_t aut(Index x) const { return x % auts.size(); }
};
inline constexpr std::uint64_t kHolCap = 20000;
Holomorph holomorphPlus(const FinGroup& A, const Filtration& F, bool force = false);

/// Skew braces from the regular subgroups of Hol(A)^+.
std::vector<SkewBrace> regularSubgroups(const FinGroup& A, const Filtration& F, bool force = false);
/// Union of regularSubgroups over all filtrations of length < p, with L-class < p.
std::vector<SkewBrace> enumerateBracesHol(const FinGroup& A, bool force = false);
/// Backtracking over lambda: A -> Aut(A) with lambda_{a . lambda_a(b)} = lambda_a lambda_b;
/// keeps L-class < p.
std::vector<SkewBrace> enumerateBracesLambda(const FinGroup& A, bool force = false, Exec exec = Exec::Parallel);

/// Copy of B with element x renamed to map[x].
SkewBrace relabel(const SkewBrace& B, std::span<const Index> map);

/// Lambda table as a comparison key.
std::vector<Index> braceKey(const SkewBrace& B);
bool isomorphic(const SkewBrace& x, const SkewBrace& y);
std::vector<SkewBrace> isoClasses(const std::vector<SkewBrace>& braces);

}  // namespace lazard
