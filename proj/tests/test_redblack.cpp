#include <gtest/gtest.h>

#include <algorithm>

#include "opf/enumerate.hpp"
#include "opf/error.hpp"
#include "opf/fixtures.hpp"
#include "opf/maps.hpp"
#include "opf/parse.hpp"
#include "opf/redblack.hpp"

using namespace opf;

TEST(Coloring, Examples) {
  EXPECT_EQ(to_string(color_edges(parse_rooted("1(3(2),4)"))), "1(3(2),4) red=[(1,3),(1,4),(3,2)]");
  EXPECT_EQ(to_string(color_edges(parse_rooted("1(3,4(2))"))), "1(4(2),3) red=[(4,2)]");
  EXPECT_TRUE(color_edges(parse_rooted("1(2,3)")).red_edges.empty());
  EXPECT_TRUE(color_edges(parse_rooted("5")).red_edges.empty());
}

TEST(Coloring, GoldenFourVertexTrees) {
  const auto& cases = golden_colorings();
  ASSERT_EQ(cases.size(), 64u);
  for (const auto& c : cases) {
    ColoredTree ct = color_edges(parse_rooted(c.tree));
    std::set<Edge> expected(c.red.begin(), c.red.end());
    EXPECT_EQ(ct.red_edges, expected) << c.tree;
  }
}

TEST(Coloring, TypeATreesAreAllBlack) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& t : enumerate_rooted_trees(n)) {
      ColoredTree c = color_edges(t);
      EXPECT_EQ(c.red_edges.empty(), is_type_a(t)) << to_string(t);
    }
}

TEST(Decompose, Example) {
  Decomposition d = decompose(parse_rooted("4(1(2,3))"));
  ASSERT_EQ(d.blocks.size(), 2u);
  EXPECT_EQ(d.blocks[0], (std::vector<Label>{1, 2, 3}));
  EXPECT_EQ(d.blocks[1], (std::vector<Label>{4}));
  EXPECT_EQ(to_string(d.components[0]), "1(2,3)");
  EXPECT_EQ(to_string(d.skeleton), "4(3)");
}

TEST(Decompose, InvariantsAndRoundTrip) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& t : enumerate_rooted_trees(n)) {
      Decomposition d = decompose(t);
      ASSERT_EQ(d.blocks.size(), d.components.size());
      ASSERT_EQ(d.skeleton.size(), d.blocks.size());
      std::size_t total = 0;
      for (std::size_t i = 0; i < d.blocks.size(); ++i) {
        ASSERT_TRUE(is_type_a(d.components[i]));
        auto labels = d.components[i].labels();
        std::sort(labels.begin(), labels.end());
        ASSERT_EQ(labels, d.blocks[i]);
        if (i > 0) {
          ASSERT_LT(d.blocks[i - 1].back(), d.blocks[i].back());
        }
        total += d.blocks[i].size();
      }
      ASSERT_EQ(total, t.size());
      ASSERT_EQ(reconstruct(d), t) << to_string(t);
    }
}

TEST(Decompose, ReconstructRejectsBrokenInput) {
  Decomposition d = decompose(parse_rooted("4(1(2,3))"));
  Decomposition bad = d;
  bad.components[0] = parse_rooted("3(1,2)");
  EXPECT_THROW(reconstruct(bad), Error);
  bad = d;
  bad.skeleton = parse_rooted("4(2)");
  EXPECT_THROW(reconstruct(bad), Error);
  bad = d;
  bad.blocks[0] = {1, 2};
  EXPECT_THROW(reconstruct(bad), Error);
}

TEST(XTrees, RecursiveCharacterizationMatchesColoring) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& t : enumerate_rooted_trees(n)) {
      ColoredTree c = color_edges(t);
      bool all_red = c.red_edges.size() + 1 == t.size();
      ASSERT_EQ(is_x_tree(t), all_red) << to_string(t);
    }
}

TEST(XTrees, Counts) {
  const std::vector<std::size_t> expected{1, 1, 3, 16, 120, 1146};
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(count_x_trees(n), expected[n - 1]) << n;
  EXPECT_THROW(count_x_trees(0), Error);
}
