#include <gtest/gtest.h>

#include "lazard/catalog.hpp"
#include "lazard/error.hpp"
#include "lazard/formats.hpp"

using namespace lazard;

TEST(Formats, LieRoundTrip) {
  const LieRingSC L = filiformLie(5, 4);
  const std::string text = formatLie(L);
  EXPECT_EQ(text, "lazard-format 1\nlie 5 shape 1 1 1 1\nbracket 1 2 0 0 1 0\nbracket 1 3 0 0 0 1\n");
  const StructureFile f = parseStructure(text);
  EXPECT_EQ(f.kind, FileKind::Lie);
  EXPECT_EQ(f.lie, L);
}

TEST(Formats, PostLieRoundTrip) {
  for (const NamedPostLie& e : postLieCatalog()) {
    const StructureFile f = parseStructure(formatPostLie(e.ring));
    ASSERT_EQ(f.kind, FileKind::PostLie);
    EXPECT_EQ(f.postLie, e.ring) << e.name;
  }
}

TEST(Formats, SkewBraceAndGroupRoundTrip) {
  const PShape s(5, {2});
  const SkewBrace B = constructS(radicalRing(5, 2));
  StructureFile f = parseStructure(formatSkewBrace(B, &s));
  EXPECT_EQ(f.kind, FileKind::SkewBrace);
  EXPECT_EQ(f.brace, B);
  ASSERT_TRUE(f.carrier.has_value());
  EXPECT_EQ(*f.carrier, s);
  const FinGroup G = unitriangularGroup(3);
  f = parseStructure(formatGroup(G));
  EXPECT_EQ(f.group, G);
  EXPECT_FALSE(f.carrier.has_value());
}

TEST(Formats, CommentsAndBlankLines) {
  const StructureFile f = parseStructure("# header\n\nlazard-format 1\npostlie 5 shape 1 1  # F_5^2\n\ntriangle 1 1 0 6\n");
  EXPECT_EQ(f.postLie, squareShift(5));
}

TEST(Formats, ErrorsCarryLineNumbers) {
  auto lineOf = [](const std::string& text) {
    try {
      parseStructure(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  EXPECT_EQ(lineOf("lazard-format 2\n"), 1);
  EXPECT_EQ(lineOf("lazard-format 1\nlie 4 shape 1\n"), 2);
  EXPECT_EQ(lineOf("lazard-format 1\nlie 5 shape 1 2\n"), 2);
  EXPECT_EQ(lineOf("lazard-format 1\nlie 5 shape 1 1\n\nbracket 2 1 0 1\n"), 4);
  EXPECT_EQ(lineOf("lazard-format 1\nlie 5 shape 1 1\nbracket 1 2 0 x\n"), 3);
  EXPECT_EQ(lineOf("lazard-format 1\nlie 5 shape 1 1\ntriangle 1 1 0 1\n"), 3);
  EXPECT_EQ(lineOf("lazard-format 1\ngroup 2 identity 0\n0 1\n"), 3);
  EXPECT_EQ(lineOf("lazard-format 1\nskewbrace 1\ndot identity 0\n0\ncirc\n0\n"), 5);
  EXPECT_EQ(lineOf("lazard-format 1\nwidget 3\n"), 2);
}

TEST(Formats, NonGroupTableIsNotAParseError) {
  try {
    parseStructure("lazard-format 1\ngroup 2 identity 0\n0 1\n0 1\n");
    ADD_FAILURE() << "accepted a non-Latin table";
  } catch (const ParseError&) {
    ADD_FAILURE() << "reported as a parse error";
  } catch (const Error&) {
  }
}
