#include <gtest/gtest.h>

#include <random>

#include "cocktail/cover.hpp"
#include "cocktail/extremal.hpp"
#include "cocktail/generate.hpp"

namespace cocktail {
namespace {

TEST(MaxReach, AllRed) {
  const MaxReach best = max_2reachable(all_red(6), Color::red);
  EXPECT_EQ(best.size, 6);
  EXPECT_EQ(best.witness, VertexSet::full(6));
}

TEST(MaxReach, SharpExampleOrderEight) {
  const ColoredCocktail g = build_sharp_example(8);
  const MaxReach red = max_2reachable(g, Color::red);
  EXPECT_EQ(red.size, 4);
  EXPECT_EQ(red.witness, VertexSet::of({0, 2, 4, 6}));
  const MaxReach blue = max_2reachable(g, Color::blue);
  EXPECT_EQ(blue.size, 4);
  EXPECT_TRUE(is_2reachable_set(g, Color::blue, blue.witness));
  EXPECT_EQ(brute_max_2reachable(g, Color::blue), 4);
}

TEST(MaxReach, SharpExampleIsTight) {
  for (int n = 4; n <= 16; n += 2) {
    const ColoredCocktail g = build_sharp_example(n);
    for (Color c : kColors) EXPECT_EQ(max_2reachable(g, c).size, n / 2) << "n=" << n;
  }
  EXPECT_EQ(brute_max_2reachable(build_sharp_example(12), Color::red), 6);
}

TEST(MaxReach, OrderTwo) {
  for (Color c : kColors) {
    EXPECT_EQ(brute_max_2reachable(all_blue(2), c), 1);
    EXPECT_EQ(max_2reachable(all_blue(2), c).size, 1);
  }
}

TEST(MaxReach, MatchesBruteForceOnRandomColorings) {
  for (int n : {8, 10, 12, 14})
    for (std::uint64_t s = 0; s < 40; ++s) {
      const ColoredCocktail g = random_coloring(n, s);
      for (Color c : kColors) {
        const MaxReach best = max_2reachable(g, c);
        EXPECT_EQ(best.size, brute_max_2reachable(g, c)) << to_compact(g);
        EXPECT_EQ(best.witness.size(), best.size);
        EXPECT_TRUE(is_2reachable_set(g, c, best.witness));
      }
    }
}

TEST(MaxReach, WitnessIsLexicographicallySmallest) {
  for (std::uint64_t s = 0; s < 60; ++s) {
    const ColoredCocktail g = random_coloring(10, s);
    for (Color c : kColors) {
      const MaxReach best = max_2reachable(g, c);
      // Brute force: the first size-k 2-reachable set by sorted vertex list.
      std::vector<int> want;
      std::vector<int> pick(static_cast<std::size_t>(best.size));
      std::function<bool(int, int)> rec = [&](int from, int depth) {
        if (depth == best.size) {
          VertexSet s;
          for (int v : pick) s.insert(v);
          if (!is_2reachable_set(g, c, s)) return false;
          want = pick;
          return true;
        }
        for (int v = from; v < 10; ++v) {
          pick[static_cast<std::size_t>(depth)] = v;
          if (rec(v + 1, depth + 1)) return true;
        }
        return false;
      };
      ASSERT_TRUE(rec(0, 0));
      EXPECT_EQ(best.witness.vertices(), want);
    }
  }
}

TEST(MaxReach, LargeOrdersAreFastAndConsistent) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const ColoredCocktail g = random_coloring(64, s);
    int best = 0;
    for (Color c : kColors) {
      const MaxReach r = max_2reachable(g, c);
      EXPECT_TRUE(is_2reachable_set(g, c, r.witness));
      best = std::max(best, r.size);
    }
    EXPECT_GE(best, 32);
  }
}

TEST(BruteForce, RejectsLargeOrders) { EXPECT_THROW(brute_max_2reachable(all_red(18), Color::red), InputError); }

TEST(AuxGraph, CliquesAreReachableSets) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 3000; ++trial) {
    const ColoredCocktail g = random_coloring(10, rng() % 64);
    const Color c = rng() & 1 ? Color::red : Color::blue;
    const VertexSet s(rng() & g.vertices().bits() & rng());
    EXPECT_EQ(is_clique(build_aux_graph(g, c), s), is_2reachable_set(g, c, s));
  }
}

TEST(AuxGraph, SymmetricAndLoopFree) {
  for (std::uint64_t s = 0; s < 50; ++s) {
    const ColoredCocktail g = random_coloring(12, s);
    for (Color c : kColors) {
      const AuxReachGraph h = build_aux_graph(g, c);
      for (int u = 0; u < 12; ++u) {
        EXPECT_FALSE((h.adj[static_cast<std::size_t>(u)] >> u) & 1U);
        for (int v = 0; v < 12; ++v)
          EXPECT_EQ((h.adj[static_cast<std::size_t>(u)] >> v) & 1U, (h.adj[static_cast<std::size_t>(v)] >> u) & 1U);
      }
    }
  }
}

TEST(Corollary, HalfTheVerticesOnEveryOrderFourAndSixColoring) {
  for (int n : {4, 6})
    for (std::uint64_t code = 0; code < coloring_count(n); ++code) {
      const ColoredCocktail g = ColoredCocktail::from_edge_code(n, code);
      const int best = std::max(max_2reachable(g, Color::red).size, max_2reachable(g, Color::blue).size);
      EXPECT_GE(best, n / 2);
      const Cover c = solve(g);
      EXPECT_GE(std::max(c.a.size(), c.b.size()), n / 2);
    }
}

TEST(SharpExample, LargeSubsetsHoldACriticalPartnerPair) {
  for (int n : {4, 6, 8, 10}) {
    const ColoredCocktail g = build_sharp_example(n);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      const VertexSet s(m);
      if (s.size() != n / 2 + 1) continue;
      bool found = false;
      for (int v = 0; v < n; v += 2)
        if (s.contains(v) && s.contains(v + 1) && !dist_le2(g, Color::red, v, v + 1) &&
            !dist_le2(g, Color::blue, v, v + 1))
          found = true;
      EXPECT_TRUE(found) << "n=" << n << " set " << m;
    }
  }
}

}  // namespace
}  // namespace cocktail
