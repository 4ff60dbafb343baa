#pragma once

// Free nilpotent Lie algebra over Q on two generators, realised inside the
// truncated free associative algebra, with the BCH series and the inverse
// BCH group words.

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <utility>
#include <vector>

#include "lazard/modarith.hpp"

namespace lazard {

using Rational = boost::multiprecision::cpp_rational;
// Letters 0 and 1 (x < y, or g < h).
using Word = std::vector<int>;

inline constexpr int kMaxBchClass = 8;
inline constexpr int kMaxWordsClass = 6;

PScalar toScalar(const Rational& q);

/// Element of the free associative algebra on two letters, truncated above
/// degree c. Coefficients are stored densely, one per word.
class AssocElem {
 public:
  AssocElem() = default;
  explicit AssocElem(int c);
  static AssocElem one(int c);
  static AssocElem letter(int c, int l);
  static AssocElem word(int c, const Word& w);

  int classBound() const { return c_; }
  const Rational& at(const Word& w) const { return coef_[indexOf(w)]; }
  const Rational& atIndex(std::size_t i) const { return coef_[i]; }
  std::size_t size() const { return coef_.size(); }
  bool isZero() const;
  // Part of degree exactly m.
  AssocElem degreePart(int m) const;

  AssocElem& operator+=(const AssocElem& o);
  AssocElem& operator-=(const AssocElem& o);
  AssocElem& operator*=(const Rational& q);
  friend AssocElem operator+(AssocElem a, const AssocElem& b) { return a += b; }
  friend AssocElem operator-(AssocElem a, const AssocElem& b) { return a -= b; }
  friend AssocElem operator*(const Rational& q, AssocElem a) { return a *= q; }
  friend AssocElem operator*(const AssocElem& a, const AssocElem& b);
  bool operator==(const AssocElem& o) const = default;

  // Requires zero constant term.
  AssocElem exp() const;
  // Requires constant term 1.
  AssocElem log() const;

  static std::size_t indexOf(const Word& w);
  static Word wordAt(std::size_t i);

 private:
  int c_ = 0;
  std::vector<Rational> coef_;
};

AssocElem commutator(const AssocElem& a, const AssocElem& b);
// exp(q log u) for u with constant term 1.
AssocElem groupPower(const AssocElem& u, const Rational& q);
// u^-1 v^-1 u v.
AssocElem groupCommutator(const AssocElem& u, const AssocElem& v);

struct LyndonElem {
  Word word;
  int degree = 0;
  int letter = -1;  // leaves only
  int left = -1;    // standard factorisation w = uv, v the longest proper Lyndon suffix
  int right = -1;
};

class FreeLieElem;

/// Lyndon words over x < y of length <= c with their standard bracketing.
/// Elements are ordered by degree, then lexicographically.
class LyndonBasis {
 public:
  explicit LyndonBasis(int c);
  // Shared instance; thread-safe.
  static const LyndonBasis& get(int c);

  int classBound() const { return c_; }
  int size() const { return static_cast<int>(elems_.size()); }
  const LyndonElem& operator[](int i) const { return elems_[i]; }
  int degree(int i) const { return elems_[i].degree; }
  std::vector<int> dims() const;
  int find(const Word& w) const;
  std::string bracketString(int i, char a = 'x', char b = 'y') const;
  // Image of basis element i in the associative algebra.
  const AssocElem& poly(int i) const { return polys_[i]; }
  // [e_i, e_j] expanded in the basis (zero when the degrees exceed c).
  const FreeLieElem& bracket(int i, int j) const;

  // Coordinates of a Lie element; throws Error if `a` is not a Lie polynomial.
  FreeLieElem project(const AssocElem& a) const;

 private:
  int c_;
  std::vector<LyndonElem> elems_;
  std::vector<AssocElem> polys_;
  std::vector<FreeLieElem> table_;
};

/// Element of the free nilpotent Lie algebra of class c in Lyndon coordinates.
class FreeLieElem {
 public:
  FreeLieElem() = default;
  explicit FreeLieElem(int c);
  static FreeLieElem basis(int c, int i);

  int classBound() const { return c_; }
  const LyndonBasis& lyndon() const { return LyndonBasis::get(c_); }
  const Rational& operator[](int i) const { return coef_[i]; }
  Rational& operator[](int i) { return coef_[i]; }
  int size() const { return static_cast<int>(coef_.size()); }
  bool isZero() const;
  FreeLieElem degreePart(int m) const;
  FreeLieElem truncated(int c) const;
  AssocElem toAssoc() const;
  std::string str(char a = 'x', char b = 'y') const;

  FreeLieElem& operator+=(const FreeLieElem& o);
  FreeLieElem& operator-=(const FreeLieElem& o);
  FreeLieElem& operator*=(const Rational& q);
  friend FreeLieElem operator+(FreeLieElem a, const FreeLieElem& b) { return a += b; }
  friend FreeLieElem operator-(FreeLieElem a, const FreeLieElem& b) { return a -= b; }
  friend FreeLieElem operator*(const Rational& q, FreeLieElem a) { return a *= q; }
  bool operator==(const FreeLieElem& o) const = default;

 private:
  friend class LyndonBasis;
  FreeLieElem(int c, int n) : c_(c), coef_(n) {}
  int c_ = 0;
  std::vector<Rational> coef_;
};

FreeLieElem bracket(const FreeLieElem& a, const FreeLieElem& b);

/// BCH(x, y) truncated at degree c, from the Dynkin expansion.
FreeLieElem bchSeries(int c);
/// log(exp(x) exp(y)) computed directly in the associative algebra.
FreeLieElem bchByLogExp(int c);

/// Product of (basis word interpreted as iterated group commutator)^exponent.
struct GroupWord {
  struct Factor {
    int basisIndex;
    int degree;
    Rational exponent;
  };
  int classBound = 0;
  std::vector<Factor> factors;

  GroupWord truncated(int c) const;
};

struct InverseWords {
  GroupWord P;  // recovers x + y
  GroupWord Q;  // recovers [x, y]
};

/// Group element of T_c for a basis word: leaves go to exp(x), exp(y) and
/// brackets to group commutators.
AssocElem commutatorElement(const LyndonBasis& basis, int i);
AssocElem evalGroupWord(const GroupWord& w);

/// Peels P and Q degree by degree; 1 <= c <= 6.
InverseWords deriveInverseWords(int c);
/// Cached result of deriveInverseWords; thread-safe.
const InverseWords& inverseWords(int c);

/// Evaluates every basis element at (a, b) with the given bracket.
template <class T, class Bracket>
std::vector<T> evalBasis(const LyndonBasis& basis, const T& a, const T& b, Bracket&& br) {
  std::vector<T> v;
  v.reserve(basis.size());
  for (int i = 0; i < basis.size(); ++i) {
    const LyndonElem& e = basis[i];
    if (e.letter >= 0)
      v.push_back(e.letter == 0 ? a : b);
    else
      v.push_back(br(v[e.left], v[e.right]));
  }
  return v;
}

/// Text export: header lines beginning with '#', then
/// `degree<TAB>bracketWord<TAB>num/den` per term or factor.
std::string exportBch(const FreeLieElem& bch);
std::string exportGroupWord(const GroupWord& w, const std::string& name);
GroupWord parseGroupWord(const std::string& text);

}  // namespace lazard
