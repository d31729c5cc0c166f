#include <gtest/gtest.h>

#include <random>

#include "cocktail/extremal.hpp"
#include "cocktail/generate.hpp"
#include "cocktail/reachability.hpp"

namespace cocktail {
namespace {

// Pairwise definitions straight from the neighborhoods, for cross-checks.
bool slow_reach(const ColoredCocktail& g, Color c, VertexSet s) {
  for (int u : s)
    for (int v : s)
      if (u < v && !dist_le2(g, c, u, v)) return false;
  return true;
}

bool slow_diam2(const ColoredCocktail& g, Color c, VertexSet s) {
  for (int u : s)
    for (int v : s) {
      if (u >= v) continue;
      if (g.neighbors(c, u).contains(v)) continue;
      if ((g.neighbors(c, u) & g.neighbors(c, v) & s).empty()) return false;
    }
  return true;
}

TEST(DistLe2, Examples) {
  EXPECT_TRUE(dist_le2(all_red(4), Color::red, 0, 1));
  const ColoredCocktail sharp = build_sharp_example(8);
  EXPECT_FALSE(dist_le2(sharp, Color::red, 0, 1));
  // Blue neighbors of 0 are {3,5,7}, of 1 are {2,4,6}: no blue middle.
  EXPECT_FALSE(dist_le2(sharp, Color::blue, 0, 1));
  EXPECT_TRUE(dist_le2(sharp, Color::blue, 0, 3));
  EXPECT_TRUE(dist_le2(sharp, Color::blue, 0, 2));  // via 3
  EXPECT_THROW(dist_le2(sharp, Color::red, 2, 2), InputError);
  EXPECT_THROW(dist_le2(sharp, Color::red, 0, 8), InputError);
}

TEST(DistLe2, Symmetric) {
  for (std::uint64_t s = 0; s < 50; ++s) {
    const ColoredCocktail g = random_coloring(10, s);
    for (Color c : kColors)
      for (int u = 0; u < 10; ++u)
        for (int v = 0; v < 10; ++v)
          if (u != v) { EXPECT_EQ(dist_le2(g, c, u, v), dist_le2(g, c, v, u)); }
  }
}

TEST(CriticalPairs, MonochromaticInput) {
  const ColoredCocktail g = all_red(4);
  EXPECT_TRUE(critical_pairs(g, Color::red).empty());
  const std::vector<CriticalPair> blue = critical_pairs(g, Color::blue);
  EXPECT_EQ(blue.size(), 6U);
  for (const CriticalPair& p : blue) EXPECT_EQ(p.is_edge, p.v != partner_of(p.u));
}

TEST(CriticalPairs, SharpExampleRedIsCrossPairs) {
  const ColoredCocktail g = build_sharp_example(8);
  const std::vector<CriticalPair> red = critical_pairs(g, Color::red);
  ASSERT_EQ(red.size(), 16U);
  for (const CriticalPair& p : red) {
    EXPECT_NE(p.u % 2, p.v % 2);
    EXPECT_LT(p.u, p.v);
    EXPECT_EQ(p.color, Color::red);
  }
  // Blue: only the four partner pairs.
  const std::vector<CriticalPair> blue = critical_pairs(g, Color::blue);
  ASSERT_EQ(blue.size(), 4U);
  for (const CriticalPair& p : blue) {
    EXPECT_EQ(p.v, partner_of(p.u));
    EXPECT_FALSE(p.is_edge);
  }
}

TEST(CriticalPairs, EdgelessOrderTwo) {
  const ColoredCocktail g = all_blue(2);
  for (Color c : kColors) {
    const std::vector<CriticalPair> pairs = critical_pairs(g, c);
    ASSERT_EQ(pairs.size(), 1U);
    EXPECT_EQ(pairs[0], (CriticalPair{0, 1, c, false}));
  }
}

TEST(CriticalPairs, CriticalEdgesHaveTheOtherColor) {
  for (std::uint64_t s = 0; s < 300; ++s) {
    const ColoredCocktail g = random_coloring(8 + 2 * static_cast<int>(s % 4), s);
    for (Color c : kColors) {
      const std::vector<CriticalPair> pairs = critical_pairs(g, c);
      EXPECT_EQ(mono_diam_le2(g, c), pairs.empty());
      for (const CriticalPair& p : pairs) {
        EXPECT_FALSE(dist_le2(g, c, p.u, p.v));
        if (p.is_edge) { EXPECT_EQ(color_of(g, p.u, p.v), flip(c)); }
      }
    }
  }
}

TEST(TwoReachable, Examples) {
  const ColoredCocktail sharp = build_sharp_example(8);
  for (int v = 0; v < 8; ++v)
    for (Color c : kColors) EXPECT_TRUE(is_2reachable_set(sharp, c, VertexSet::single(v)));
  EXPECT_TRUE(is_2reachable_set(sharp, Color::red, VertexSet{}));
  EXPECT_TRUE(is_2reachable_set(sharp, Color::red, VertexSet::of({0, 2, 4, 6})));
  EXPECT_FALSE(is_2reachable_set(sharp, Color::red, VertexSet::of({0, 2, 4, 6, 1})));
}

TEST(Diam2, Examples) {
  const ColoredCocktail sharp = build_sharp_example(8);
  EXPECT_FALSE(is_diam2_subset(sharp, Color::blue, sharp.vertices()));
  EXPECT_TRUE(is_diam2_subset(sharp, Color::red, VertexSet::of({0, 2, 4, 6})));
  EXPECT_TRUE(is_diam2_subset(sharp, Color::blue, VertexSet{}));
  for (std::uint64_t s = 0; s < 100; ++s) {
    const ColoredCocktail g = random_coloring(12, s);
    for (Color c : kColors)
      for (int v = 0; v < 12; ++v) EXPECT_TRUE(is_diam2_subset(g, c, star(g, c, v)));
  }
}

TEST(Diam2, ImpliesReachableOnEveryOrderFourColoring) {
  for (auto it = enumerate_colorings(4).begin(); it != enumerate_colorings(4).end(); ++it) {
    const ColoredCocktail g = *it;
    for (Color c : kColors)
      for (std::uint64_t m = 0; m < 16; ++m) {
        const VertexSet s(m);
        EXPECT_EQ(is_2reachable_set(g, c, s), slow_reach(g, c, s));
        EXPECT_EQ(is_diam2_subset(g, c, s), slow_diam2(g, c, s));
        if (is_diam2_subset(g, c, s)) { EXPECT_TRUE(is_2reachable_set(g, c, s)); }
      }
  }
}

TEST(Diam2, AgreesWithPairwiseDefinitionOnRandomSets) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 2 * static_cast<int>(rng() % 10 + 1);
    const ColoredCocktail g = random_coloring(n, rng());
    const VertexSet s(rng() & g.vertices().bits());
    for (Color c : kColors) {
      EXPECT_EQ(is_2reachable_set(g, c, s), slow_reach(g, c, s));
      EXPECT_EQ(is_diam2_subset(g, c, s), slow_diam2(g, c, s));
    }
  }
}

TEST(Diam2, NotHereditary) {
  // Frozen from a search over n = 4: all blue, S = {0,1,2} has diameter 2
  // in blue (0-2-1) but the partner pair {0,1} alone does not.
  const ColoredCocktail g = ColoredCocktail::from_edge_code(4, 0);
  EXPECT_TRUE(is_diam2_subset(g, Color::blue, VertexSet::of({0, 1, 2})));
  EXPECT_FALSE(is_diam2_subset(g, Color::blue, VertexSet::of({0, 1})));
  // Yet the smaller set is still 2-reachable.
  EXPECT_TRUE(is_2reachable_set(g, Color::blue, VertexSet::of({0, 1})));
}

TEST(TwoReachable, MonotoneUnderSubsets) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const ColoredCocktail g = random_coloring(8, rng());
    const Color c = rng() & 1 ? Color::red : Color::blue;
    const VertexSet s(rng() & 0xFF);
    const VertexSet sub(s.bits() & rng());
    if (is_2reachable_set(g, c, s)) { EXPECT_TRUE(is_2reachable_set(g, c, sub)); }
  }
}

TEST(Star, Examples) {
  EXPECT_EQ(star(all_red(4), Color::red, 0), VertexSet::of({0, 2, 3}));
  EXPECT_EQ(star(build_sharp_example(8), Color::blue, 0), VertexSet::of({0, 3, 5, 7}));
  const ColoredCocktail g = random_coloring(16, 3);
  for (int v = 0; v < 16; ++v)
    for (Color c : kColors) EXPECT_EQ(star(g, c, v).size(), 1 + g.neighbors(c, v).size());
}

TEST(MonoDiam, Examples) {
  for (int n : {4, 6, 8}) {
    EXPECT_TRUE(mono_diam_le2(all_red(n), Color::red));
    EXPECT_FALSE(mono_diam_le2(all_red(n), Color::blue));
  }
  for (Color c : kColors) EXPECT_FALSE(mono_diam_le2(build_sharp_example(8), c));
  // For S = V the two set predicates coincide with mono_diam_le2.
  for (std::uint64_t s = 0; s < 200; ++s) {
    const ColoredCocktail g = random_coloring(8, s);
    for (Color c : kColors) {
      EXPECT_EQ(mono_diam_le2(g, c), is_2reachable_set(g, c, g.vertices()));
      EXPECT_EQ(mono_diam_le2(g, c), is_diam2_subset(g, c, g.vertices()));
    }
  }
}

}  // namespace
}  // namespace cocktail
