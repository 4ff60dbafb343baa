#pragma once

// Exhaustive searches for left nilpotent pre-Lie rings on a given abelian
// p-group, and the pairing with skew braces through the correspondence.

#include <string>
#include <vector>

#include "lazard/lazcorr.hpp"

namespace lazard {

inline constexpr std::uint64_t kSearchCap = 20000000;

/// Pre-Lie rings on the abelian group of `shape` with L-class < p, found by
/// running through all structure constants g_i ▷ g_j.
std::vector<PostLieRing> enumeratePreLieSC(const PShape& shape, bool force = false);
/// The same set found as sub Lie rings {(a, L_a)} of aff(A): tuples of
/// nilpotent endomorphisms with [L_a, L_b] = L_{L_a b - L_b a}.
std::vector<PostLieRing> enumeratePreLieAff(const PShape& shape, bool force = false);

/// Triangle structure constants as a comparison key.
std::vector<std::int64_t> triangleKey(const PostLieRing& P);

struct Pairing {
  std::size_t braces = 0;
  std::size_t preLie = 0;
  bool bijective = false;
  std::vector<std::string> problems;
};
/// Braces on the carrier of `shape` (indices = shape indices) against pre-Lie
/// rings on `shape`: constructL must land in the pre-Lie list injectively and
/// onto, and constructS must send each image back to the brace.
Pairing pairCatalogs(const PShape& shape, const std::vector<SkewBrace>& braces, const std::vector<PostLieRing>& preLie);

/// Abelian group of a shape as a Cayley table on shape indices.
FinGroup abelianGroup(const PShape& shape);

}  // namespace lazard
