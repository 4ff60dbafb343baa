#pragma once

// Finite groups by Cayley table, element subsets and subgroup closure.

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lazard/modarith.hpp"

namespace lazard {

// Soft cap on carrier size; larger inputs need an explicit force flag.
inline constexpr std::uint64_t kSoftCap = 15625;  // 5^6
void checkCapacity(std::uint64_t n, bool force, const std::string& what);

/// Subset of {0, ..., n-1} as a membership bitmap.
class Subset {
 public:
  Subset() = default;
  explicit Subset(Index n) : mem_(n, 0) {}
  static Subset all(Index n);
  static Subset of(Index n, std::span<const Index> elems);

  Index universe() const { return static_cast<Index>(mem_.size()); }
  bool contains(Index x) const { return mem_[x] != 0; }
  void insert(Index x);
  Index size() const { return count_; }
  std::vector<Index> elements() const;
  bool subsetOf(const Subset& o) const;
  Subset intersect(const Subset& o) const;
  bool operator==(const Subset& o) const { return mem_ == o.mem_; }
  std::string str() const;  // "{0,3,7}"

 private:
  std::vector<char> mem_;
  Index count_ = 0;
};

class FinGroup {
 public:
  FinGroup() = default;
  // Checks that `table` is a Latin square with the given identity; computes
  // inverses. Associativity is checked separately by isAssociative().
  FinGroup(Index n, std::vector<Index> table, Index identity);

  Index order() const { return n_; }
  Index identity() const { return e_; }
  Index mul(Index a, Index b) const { return t_[static_cast<std::size_t>(a) * n_ + b]; }
  Index inv(Index a) const { return inv_[a]; }
  Index pow(Index a, std::int64_t k) const;
  // a^-1 b^-1 a b.
  Index comm(Index a, Index b) const { return mul(mul(inv_[a], inv_[b]), mul(a, b)); }
  Index elementOrder(Index a) const;
  std::int64_t exponent() const { return exp_; }
  bool isAbelian() const;
  // Prime p when the order is a power of p, 0 otherwise (1 for the trivial group).
  int prime() const;
  const std::vector<Index>& table() const { return t_; }
  bool operator==(const FinGroup& o) const { return n_ == o.n_ && e_ == o.e_ && t_ == o.t_; }

  // Greedy generating set: smallest index not yet generated, repeatedly.
  std::vector<Index> generators() const;
  // Light's test on a generating set; returns a failing triple in `witness`.
  bool isAssociative(std::array<Index, 3>* witness = nullptr) const;
  // Exhaustive n^3 associativity check.
  bool isAssociativeExhaustive() const;

 private:
  Index n_ = 0;
  Index e_ = 0;
  std::vector<Index> t_;
  std::vector<Index> inv_;
  std::int64_t exp_ = 1;
};

// Throws Error when the table is not a group.
void verifyGroup(const FinGroup& g);

Subset closure(const FinGroup& g, std::span<const Index> gens);
bool isNormal(const FinGroup& g, const Subset& h);
// Subgroup generated by the commutators [a, b], a in A, b in B.
Subset commutatorSubgroup(const FinGroup& g, const Subset& a, const Subset& b);
// Minimal generating list of a subgroup (greedy).
std::vector<Index> subgroupGenerators(const FinGroup& g, const Subset& h);

/// Every subgroup, in discovery order starting from the trivial one.
std::vector<Subset> allSubgroups(const FinGroup& g);

/// Strongest level of the sub / left ideal / strong left ideal / ideal ladder.
enum class IdealKind { NotClosed, Sub, LeftIdeal, StrongLeftIdeal, Ideal };
const char* idealKindName(IdealKind k);

/// Descending chain X = X_1 >= X_2 >= ... >= X_m > X_{m+1} = 0; only the
/// nonzero terms are stored, so length() = m.
struct Filtration {
  std::vector<Subset> terms;
  Index universe = 0;
  Index zero = 0;

  int length() const { return static_cast<int>(terms.size()); }
  // X_i for i >= 1 (X_0 = X_1); the trivial subgroup past the end.
  Subset term(int i) const;
};

struct SeriesResult {
  std::vector<Subset> terms;  // gamma^1, gamma^2, ... down to the stable term
  bool nilpotent = false;
  int nilClass = -1;          // least c with gamma^{c+1} trivial
  Index universe = 0;
  Index zero = 0;
  Filtration filtration() const;
};

SeriesResult lowerCentralSeries(const FinGroup& g);
// Canonical group filtration; same as the lower central series.
SeriesResult canonicalGroupFiltration(const FinGroup& g);
// Checks normality, descent and [G_i, G_j] <= G_{i+j}; throws Error otherwise.
void validateGroupFiltration(const FinGroup& g, const Filtration& f);

/// Element x with x^n = g for n coprime to p.
Index groupRoot(const FinGroup& g, Index x, std::int64_t n);
/// x^q for a rational q with p-coprime denominator.
Index ratPow(const FinGroup& g, Index x, const PScalar& q);

}  // namespace lazard
