#pragma once

// Named test instances: Lie rings, post-Lie rings and skew braces of small
// prime-power order, built deterministically.

#include <string>
#include <vector>

#include "lazard/enumerate.hpp"

namespace lazard {

LieRingSC heisenbergLie(int p);
// [g1, g_j] = g_{j+1} on (p;[1,...,1]) of rank n: class n - 1.
LieRingSC filiformLie(int p, int n);
// Radical ring pZ/p^{e+1}Z with a ▷ b = ab, on shape (p;[e]).
PostLieRing radicalRing(int p, int e);
// (p;[1,1]) with g1 ▷ g1 = g2.
PostLieRing squareShift(int p);
// a ▷ b = s [a, b].
PostLieRing scaledBracket(const LieRingSC& L, std::int64_t s);
// Upper unitriangular 3x3 matrices over F_p.
FinGroup unitriangularGroup(int p);

struct NamedLie {
  std::string name;
  LieRingSC ring;
};
struct NamedPostLie {
  std::string name;
  PostLieRing ring;
};
struct NamedBrace {
  std::string name;
  SkewBrace brace;
};

/// Lazard Lie rings over p in {3, 5, 7}, orders up to p^4.
std::vector<NamedLie> lieCatalog();
/// Lazard post-Lie rings of order at most 625.
std::vector<NamedPostLie> postLieCatalog();
/// Lazard skew braces built without the correspondence: enumerated braces
/// of order p^2 and 27, trivial and opposite skew braces on small groups.
std::vector<NamedBrace> braceCatalog();

}  // namespace lazard
