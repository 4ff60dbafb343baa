#pragma once

// Line-oriented text formats for Lie rings, post-Lie rings, groups and skew
// braces. Every file starts with `lazard-format 1`; `#` starts a comment.
//
//   lie <p> shape <e1> ... <er>          bracket <i> <j> <c1> ... <cr>   (i < j)
//   postlie <p> shape <e1> ... <er>      bracket ... / triangle <i> <j> <c1> ... <cr>
//   group <n> identity <e> [carrier <p> shape <e1> ...]   then n table rows
//   skewbrace <n> [carrier <p> shape <e1> ...]
//     dot identity <e>   n rows
//     circ identity <e>  n rows
//
// Generators are numbered from 1. A carrier clause says that element x is
// the shape element with index x.

#include <iosfwd>
#include <optional>
#include <string>

#include "lazard/skewbrace.hpp"

namespace lazard {

inline constexpr int kFormatVersion = 1;

enum class FileKind { Lie, PostLie, Group, SkewBrace };
const char* fileKindName(FileKind k);

struct StructureFile {
  FileKind kind = FileKind::Lie;
  LieRingSC lie;
  PostLieRing postLie;
  FinGroup group;
  SkewBrace brace;
  std::optional<PShape> carrier;
};

/// Throws ParseError with the offending line number.
StructureFile parseStructure(std::istream& in);
StructureFile parseStructure(const std::string& text);
StructureFile readStructureFile(const std::string& path);

std::string formatLie(const LieRingSC& L);
std::string formatPostLie(const PostLieRing& P);
std::string formatGroup(const FinGroup& G, const PShape* carrier = nullptr);
std::string formatSkewBrace(const SkewBrace& B, const PShape* carrier = nullptr);

}  // namespace lazard
