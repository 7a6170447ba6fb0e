#include <gtest/gtest.h>

#include <sstream>

#include "oracles.hpp"

using namespace ykh;

TEST(ParseBraid, TrefoilWithoutHeader) {
  BraidWord b = parse_braid("1 1 1");
  EXPECT_EQ(b.strands(), 2);
  EXPECT_EQ(b.letters(), (std::vector<int>{1, 1, 1}));
}

TEST(ParseBraid, IdentityWithHeader) {
  BraidWord b = parse_braid("3:");
  EXPECT_EQ(b.strands(), 3);
  EXPECT_TRUE(b.empty());
}

TEST(ParseBraid, MixedSigns) {
  BraidWord b = parse_braid("2 -1 2 -1");
  EXPECT_EQ(b.strands(), 3);
  EXPECT_EQ(b.letters(), (std::vector<int>{2, -1, 2, -1}));
}

TEST(ParseBraid, EmptyTextIsTrivialOneStrand) {
  BraidWord b = parse_braid("   ");
  EXPECT_EQ(b.strands(), 1);
  EXPECT_TRUE(b.empty());
}

TEST(ParseBraid, ErrorsCarryPositions) {
  auto position_of = [](std::string_view text) -> std::size_t {
    try {
      parse_braid(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    ADD_FAILURE() << "no error for '" << text << "'";
    return 0;
  };
  EXPECT_EQ(position_of("1 x 2"), 2u);
  EXPECT_EQ(position_of("1 0"), 2u);
  EXPECT_EQ(position_of("3: 1 3"), 5u);
  EXPECT_EQ(position_of("0: "), 0u);
  EXPECT_EQ(position_of("-2: 1"), 0u);
  EXPECT_EQ(position_of("a: 1"), 0u);
  EXPECT_EQ(position_of("2: 1 : 1"), 5u);
  EXPECT_EQ(position_of("1 1-"), 2u);
}

TEST(ParseBraid, PrintRoundTrip) {
  for (const char* text : {"1 1 1", "3:", "4: 1 -3 2", "2 -1 2 -1", "1:"}) {
    BraidWord b = parse_braid(text);
    EXPECT_EQ(parse_braid(print_braid(b)), b) << text;
  }
  EXPECT_EQ(print_braid(parse_braid("3:")), "3:");
  EXPECT_EQ(print_braid(parse_braid("1 -2")), "3: 1 -2");
}

TEST(BraidWord, RejectsBadLetters) {
  EXPECT_THROW(BraidWord(2, {2}), MathError);
  EXPECT_THROW(BraidWord(3, {0}), MathError);
  EXPECT_THROW(BraidWord(0, {}), MathError);
}

TEST(BraidOps, ExponentSum) {
  EXPECT_EQ(exponent_sum(parse_braid("1 1 1")), 3);
  EXPECT_EQ(exponent_sum(parse_braid("4:")), 0);
  EXPECT_EQ(exponent_sum(parse_braid("-1 -1 -1")), -3);
  EXPECT_EQ(exponent_sum(parse_braid("1 -2 3 -1")), 0);
}

TEST(BraidOps, InverseMirrorConjugate) {
  BraidWord b = parse_braid("1 -2 2 3");
  EXPECT_EQ(inverse(b).letters(), (std::vector<int>{-3, -2, 2, -1}));
  EXPECT_EQ(mirror(b).letters(), (std::vector<int>{-1, 2, -2, -3}));
  BraidWord w = parse_braid("4: 2");
  EXPECT_EQ(markov_conjugate(b, w).letters(), (std::vector<int>{2, 1, -2, 2, 3, -2}));
  EXPECT_THROW(markov_conjugate(b, parse_braid("1")), MathError);
}

TEST(BraidOps, Stabilize) {
  BraidWord b = parse_braid("1 1 1");
  BraidWord s = markov_stabilize(b, -1);
  EXPECT_EQ(s.strands(), 3);
  EXPECT_EQ(s.letters(), (std::vector<int>{1, 1, 1, -2}));
  EXPECT_THROW(markov_stabilize(b, 0), MathError);
}

TEST(BraidOps, ReplaceLetter) {
  BraidWord b = parse_braid("1 -2 1");
  EXPECT_EQ(replace_letter(b, 1, 2).letters(), (std::vector<int>{1, 2, 2, 1}));
  EXPECT_EQ(replace_letter(b, 1, 0).letters(), (std::vector<int>{1, 1}));
  EXPECT_EQ(replace_letter(b, 0, -1).letters(), (std::vector<int>{-1, -2, 1}));
  EXPECT_EQ(replace_letter(b, 2, 0).strands(), 3);
  EXPECT_THROW(replace_letter(b, 3, 1), MathError);
}

TEST(BraidOps, ComponentsMatchUnionFind) {
  Rng rng(11);
  for (int k = 0; k < 300; ++k) {
    int n = static_cast<int>(rng.uniform(1, 6));
    BraidWord b = random_braid(rng, n, 10);
    EXPECT_EQ(closure_component_count(b), oracle::components(b)) << print_braid(b);
  }
  EXPECT_EQ(closure_component_count(parse_braid("1 1 1")), 1);
  EXPECT_EQ(closure_component_count(parse_braid("1 1")), 2);
  EXPECT_EQ(closure_component_count(parse_braid("3:")), 3);
}

TEST(Corpus, GoodAndBadRecordsKeepOrder) {
  std::istringstream in(
      "# knots\n"
      "trefoil; 1 1 1\n"
      "\n"
      "broken; 1 x\n"
      "no separator here\n"
      "unlink;3:   # two-strand identity\n");
  auto recs = parse_corpus(in);
  ASSERT_EQ(recs.size(), 4u);
  EXPECT_EQ(recs[0].name, "trefoil");
  EXPECT_EQ(recs[0].line, 2u);
  ASSERT_TRUE(recs[0].braid);
  EXPECT_EQ(recs[0].braid->letters(), (std::vector<int>{1, 1, 1}));
  EXPECT_FALSE(recs[1].braid);
  EXPECT_NE(recs[1].error.find("position 3"), std::string::npos) << recs[1].error;
  EXPECT_FALSE(recs[2].braid);
  ASSERT_TRUE(recs[3].braid);
  EXPECT_EQ(recs[3].braid->strands(), 3);
}

TEST(BraidPermutation, MatchesWordPermutation) {
  Rng rng(5);
  for (int k = 0; k < 100; ++k) {
    int n = static_cast<int>(rng.uniform(2, 6));
    BraidWord b = random_braid(rng, n, 8);
    std::vector<int> word;
    for (int l : b.letters()) word.push_back(std::abs(l));
    auto p = permutation_of_word(n, word);
    auto q = braid_permutation(b);
    // position j ends at q[j]; p lists, for each final position, the starting strand (1-based)
    for (int j = 0; j < n; ++j) EXPECT_EQ(p[static_cast<std::size_t>(q[static_cast<std::size_t>(j)])], j + 1);
  }
}
