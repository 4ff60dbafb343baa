#pragma once

// Finite abelian p-groups Z/p^e1 + ... + Z/p^er, rational scalars with
// p-coprime denominators, and additive endomorphisms.

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lazard/error.hpp"

namespace lazard {

inline constexpr int kMaxRank = 8;
using Index = std::uint32_t;

bool isPrime(std::int64_t n);
std::int64_t ipow(std::int64_t base, int exp);
std::int64_t mod(std::int64_t a, std::int64_t m);
std::int64_t mulMod(std::int64_t a, std::int64_t b, std::int64_t m);
std::int64_t powMod(std::int64_t base, std::int64_t exp, std::int64_t m);
// Throws Error when gcd(a, m) != 1.
std::int64_t invMod(std::int64_t a, std::int64_t m);
// Largest e with p^e | n (n != 0).
int pValuation(std::int64_t n, int p);

class PVec;

/// Z/p^{e_1} + ... + Z/p^{e_r} with e_1 >= ... >= e_r >= 1.
///
/// Elements are numbered by mixed radix with coordinate 0 least
/// significant, so index 1 is the first generator.
class PShape {
 public:
  PShape() = default;
  PShape(int p, std::span<const int> exps);
  PShape(int p, std::initializer_list<int> exps)
      : PShape(p, std::span<const int>(exps.begin(), exps.size())) {}

  int p() const { return p_; }
  int rank() const { return rank_; }
  int exp(int i) const { return exps_[i]; }
  std::int64_t modulus(int i) const { return moduli_[i]; }
  int maxExp() const { return rank_ == 0 ? 0 : exps_[0]; }
  // p^{e_1}: the exponent of the group.
  std::int64_t exponent() const { return rank_ == 0 ? 1 : moduli_[0]; }
  std::uint64_t order() const { return order_; }
  // Sum of exponents: order = p^{length}.
  int length() const;
  std::vector<int> exps() const { return {exps_.begin(), exps_.begin() + rank_}; }

  PVec zero() const;
  PVec gen(int i) const;
  PVec at(Index idx) const;
  Index indexOf(const PVec& v) const;

  std::string str() const;  // "(5;[2,1])"
  bool operator==(const PShape& o) const;

 private:
  int p_ = 0;
  int rank_ = 0;
  std::array<int, kMaxRank> exps_{};
  std::array<std::int64_t, kMaxRank> moduli_{};
  std::uint64_t order_ = 1;
};

/// Element of a PShape; coordinates are always reduced.
class PVec {
 public:
  PVec() = default;
  PVec(const PShape& shape, std::span<const std::int64_t> coords);
  PVec(const PShape& shape, std::initializer_list<std::int64_t> coords)
      : PVec(shape, std::span<const std::int64_t>(coords.begin(), coords.size())) {}

  const PShape& shape() const { return shape_; }
  int rank() const { return shape_.rank(); }
  std::int64_t operator[](int i) const { return c_[i]; }
  bool isZero() const;
  Index index() const { return shape_.indexOf(*this); }
  std::string str() const;  // "(1,1,3)"

  PVec& operator+=(const PVec& o);
  PVec& operator-=(const PVec& o);
  PVec& operator*=(std::int64_t k);
  bool operator==(const PVec& o) const;

 private:
  friend class PShape;
  PShape shape_;
  std::array<std::int64_t, kMaxRank> c_{};
};

PVec operator+(PVec a, const PVec& b);
PVec operator-(PVec a, const PVec& b);
PVec operator-(PVec a);
PVec operator*(std::int64_t k, PVec a);

/// Rational number in lowest terms with positive denominator.
class PScalar {
 public:
  PScalar() = default;
  PScalar(std::int64_t n) : num_(n) {}  // NOLINT(implicit)
  PScalar(std::int64_t n, std::int64_t d);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool isZero() const { return num_ == 0; }
  bool pCoprime(int p) const { return den_ % p != 0; }
  std::string str() const;  // "-1/2"
  static PScalar parse(const std::string& s);

  friend PScalar operator+(const PScalar& a, const PScalar& b);
  friend PScalar operator-(const PScalar& a, const PScalar& b);
  friend PScalar operator*(const PScalar& a, const PScalar& b);
  friend PScalar operator-(const PScalar& a) { return {-a.num_, a.den_}; }
  bool operator==(const PScalar& o) const = default;

  // num * den^{-1} mod m; throws NotLazardError if den is not invertible.
  std::int64_t residue(std::int64_t m) const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// s * v with division by s.den carried out modulo each coordinate modulus.
/// Throws NotLazardError ("not p-divisible") when p divides the denominator.
PVec scalarAct(const PScalar& s, const PVec& v);

/// Additive endomorphism stored by the images of the generators.
class Endo {
 public:
  Endo() = default;
  // Throws Error unless p^{e_j} * images[j] = 0 for each j.
  Endo(const PShape& shape, std::vector<PVec> images);
  static Endo identity(const PShape& shape);
  static Endo zero(const PShape& shape);

  const PShape& shape() const { return shape_; }
  const PVec& image(int j) const { return images_[j]; }
  PVec operator()(const PVec& x) const;
  bool isZero() const;
  bool operator==(const Endo& o) const = default;

  Endo& operator+=(const Endo& o);
  Endo& operator-=(const Endo& o);
  std::string str() const;

 private:
  PShape shape_;
  std::vector<PVec> images_;
};

Endo operator+(Endo a, const Endo& b);
Endo operator-(Endo a, const Endo& b);
Endo operator-(const Endo& a);
// Composition: (f * g)(x) = f(g(x)).
Endo operator*(const Endo& f, const Endo& g);
Endo scaled(const PScalar& s, const Endo& f);
Endo power(const Endo& f, int k);
// f commutator [f, g] = fg - gf.
Endo commutator(const Endo& f, const Endo& g);

/// sum_{k < nilBound} d^k / k!. Requires d^nilBound = 0 and nilBound < p.
Endo endoExp(const Endo& d, int nilBound);
/// sum_{1 <= k < nilBound} (-1)^{k+1} (f - 1)^k / k. Requires (f-1)^nilBound = 0.
Endo endoLog(const Endo& f, int nilBound);

/// Invariant-factor shape of an abelian p-group given by its Cayley table,
/// together with an explicit isomorphism.
struct AbelianDecomposition {
  PShape shape;
  std::vector<PVec> toVec;     // table index -> coordinates
  std::vector<Index> fromVec;  // shape index -> table index
};

/// `table` is row-major n x n. Throws Error for non-abelian or non-p tables.
AbelianDecomposition abelianDecompose(std::span<const Index> table, Index n);

/// Smallest xi with xi^{p-1} = 1 mod p^e and xi^k - 1 a unit for 0 < k < p-1.
std::int64_t rootOfUnity(int p, int e);

}  // namespace lazard
