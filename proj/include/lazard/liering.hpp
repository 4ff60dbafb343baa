#pragma once

// Finite Lie rings on abelian p-groups, the BCH group law (Laz) and its
// inverse through the words P and Q (Laz^-1).

#include <span>
#include <string>
#include <vector>

#include "lazard/fingroup.hpp"
#include "lazard/freelie.hpp"
#include "lazard/kernels.hpp"
#include "lazard/modarith.hpp"

namespace lazard {

struct Report {
  bool ok = true;
  std::vector<std::string> failures;
  void fail(std::string msg) {
    ok = false;
    failures.push_back(std::move(msg));
  }
  std::string str() const;
};

/// Additive span of PVecs inside their common shape.
Subset additiveSpan(const PShape& shape, std::span<const PVec> gens);
/// Greedy generating list of an additive subgroup.
std::vector<PVec> spanGenerators(const PShape& shape, const Subset& s);
std::vector<PVec> members(const PShape& shape, const Subset& s);

/// Lie ring given by the brackets of generators.
class LieRingSC {
 public:
  LieRingSC() = default;
  explicit LieRingSC(const PShape& shape);

  // [g_i, g_j] = v and [g_j, g_i] = -v.
  void setBracket(int i, int j, const PVec& v);
  // Stores [g_i, g_j] = v only (used by parsers; verifyLie checks the rest).
  void setRaw(int i, int j, const PVec& v);

  const PShape& shape() const { return shape_; }
  int rank() const { return shape_.rank(); }
  int p() const { return shape_.p(); }
  std::uint64_t order() const { return shape_.order(); }
  const PVec& structure(int i, int j) const { return c_[static_cast<std::size_t>(i) * rank() + j]; }
  PVec bracket(const PVec& a, const PVec& b) const;
  // ad_a as an endomorphism.
  Endo ad(const PVec& a) const;
  bool isAbelian() const;
  bool operator==(const LieRingSC& o) const { return shape_ == o.shape_ && c_ == o.c_; }

 private:
  PShape shape_;
  std::vector<PVec> c_;
};

/// Lie ring given by addition and bracket tables on {0, ..., n-1}.
struct LieRingTable {
  Index n = 0;
  Index zero = 0;
  std::vector<Index> addT;
  std::vector<Index> brT;
  std::int64_t exponent = 1;  // exponent of the additive group

  Index add(Index a, Index b) const { return addT[static_cast<std::size_t>(a) * n + b]; }
  Index bracket(Index a, Index b) const { return brT[static_cast<std::size_t>(a) * n + b]; }
  Index times(std::int64_t k, Index a) const;
  Index neg(Index a) const { return times(-1, a); }
  Index scale(const PScalar& q, Index a) const;
  bool operator==(const LieRingTable& o) const { return n == o.n && zero == o.zero && addT == o.addT && brT == o.brT; }
};

LieRingTable toTable(const LieRingSC& L, Exec exec = Exec::Parallel);

/// Antisymmetry, well-definedness and Jacobi on generators.
Report verifyLie(const LieRingSC& L);

/// Structure constants of a table Lie ring through abelianDecompose; the
/// report fails when the table bracket is not the bilinear extension.
struct DecomposedLie {
  LieRingSC sc;
  AbelianDecomposition iso;
  Report report;
};
DecomposedLie decomposeLie(const LieRingTable& T, Exec exec = Exec::Parallel);
/// Same with given coordinates; throws Error if they are not additive.
DecomposedLie decomposeLie(const LieRingTable& T, AbelianDecomposition iso, Exec exec = Exec::Parallel);

SeriesResult lowerCentralSeries(const LieRingSC& L);
Filtration canonicalFiltration(const LieRingSC& L);
// Ideals, descending, [F_i, F_j] <= F_{i+j}; throws Error otherwise.
void validateLieFiltration(const LieRingSC& L, const Filtration& f);
bool isLazard(const LieRingSC& L, const Filtration& f);
bool isLazard(const LieRingSC& L);

/// BCH coefficients of one class as PScalars over the Lyndon basis.
struct BchTerms {
  int classBound = 1;
  const LyndonBasis* basis = nullptr;
  std::vector<std::pair<int, PScalar>> terms;
  static const BchTerms& get(int c);
};

template <class T, class Bracket, class Add, class Scale>
T bchApply(const BchTerms& bch, const T& a, const T& b, Bracket&& br, Add&& add, Scale&& scale) {
  auto vals = evalBasis<T>(*bch.basis, a, b, br);
  T r = scale(bch.terms.front().second, vals[bch.terms.front().first]);
  for (std::size_t k = 1; k < bch.terms.size(); ++k) r = add(r, scale(bch.terms[k].second, vals[bch.terms[k].first]));
  return r;
}

/// BCH(a, b) truncated at degree max(1, classBound); exact.
PVec bchEval(const LieRingSC& L, int classBound, const PVec& a, const PVec& b);
PVec bchEval(const LieRingSC& L, const Filtration& f, const PVec& a, const PVec& b);
Index bchEval(const LieRingTable& T, int classBound, Index a, Index b);

/// (L, BCH) with the filtration length as truncation degree.
FinGroup laz(const LieRingSC& L, const Filtration& f, Exec exec = Exec::Parallel, bool force = false);
FinGroup laz(const LieRingSC& L, Exec exec = Exec::Parallel, bool force = false);
FinGroup laz(const LieRingTable& T, int classBound, Exec exec = Exec::Parallel);

/// (G, P, Q) for a filtration of length < p (canonical by default).
LieRingTable lazInv(const FinGroup& G, const Filtration& f, Exec exec = Exec::Parallel, bool force = false);
LieRingTable lazInv(const FinGroup& G, Exec exec = Exec::Parallel, bool force = false);

}  // namespace lazard
