#ifndef COCKTAIL_EXTREMAL_HPP
#define COCKTAIL_EXTREMAL_HPP

// Largest monochromatic 2-reachable sets.
//
// 2-reachability is a pairwise condition, so the 2-reachable sets of color c
// are exactly the cliques of the auxiliary graph H_c with u ~ v iff
// dist_c(u, v) <= 2. max_2reachable() runs an exact bitset clique search on
// H_c; brute_max_2reachable() enumerates subsets and serves as the oracle.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <vector>

#include "cocktail/graph.hpp"
#include "cocktail/reachability.hpp"

namespace cocktail {

/// X = even vertices and Y = odd vertices each hold one vertex of every
/// partner pair, so both induce cliques of the cocktail party graph. Edges
/// inside X or inside Y are red, all others blue. No monochromatic
/// 2-reachable set has more than n/2 vertices.
inline ColoredCocktail build_sharp_example(int n) {
  check_order(n);
  if (n < 4) throw InputError("sharp example needs n >= 4, got " + std::to_string(n));
  std::vector<Edge> red;
  for (int u = 0; u < n; ++u)
    for (int v = u + 2; v < n; v += 2) red.emplace_back(u, v);
  return from_red_set(n, red);
}

struct AuxReachGraph {
  int n = 0;
  Adjacency adj{};
};

inline AuxReachGraph build_aux_graph(const ColoredCocktail& g, Color c) {
  const ReachIndex index(g);
  AuxReachGraph h;
  h.n = g.n();
  for (int u = 0; u < h.n; ++u) h.adj[static_cast<std::size_t>(u)] = index.reach(c, u);
  return h;
}

inline bool is_clique(const AuxReachGraph& h, VertexSet s) {
  for (int u : s)
    if ((s.bits() & ~h.adj[static_cast<std::size_t>(u)] & ~(std::uint64_t{1} << u)) != 0) return false;
  return true;
}

namespace detail {

/// Exact maximum clique by branch and bound with a greedy coloring bound
/// (vertices are branched on in decreasing color-class order, so a color
/// number bounds the clique size of the remaining candidates).
class CliqueSearch {
 public:
  explicit CliqueSearch(const AuxReachGraph& h) : h_(h) {}

  /// Size of a largest clique inside `candidates`, or 0 if it is below
  /// `at_least`. Stops as soon as a clique of size `stop_at` is seen.
  int largest(std::uint64_t candidates, int at_least = 0, int stop_at = kMaxVertices + 1) {
    best_ = at_least - 1;
    stop_at_ = stop_at;
    expand(0, candidates);
    return best_ < at_least ? 0 : best_;
  }

 private:
  void expand(int depth, std::uint64_t candidates) {
    if (best_ >= stop_at_) return;
    if (candidates == 0) {
      best_ = std::max(best_, depth);
      return;
    }
    std::array<int, kMaxVertices> order{};
    std::array<int, kMaxVertices> bound{};
    int count = 0;
    std::uint64_t uncolored = candidates;
    for (int color = 1; uncolored; ++color) {
      std::uint64_t open = uncolored;
      while (open) {
        const int v = std::countr_zero(open);
        open &= ~(std::uint64_t{1} << v) & ~h_.adj[static_cast<std::size_t>(v)];
        uncolored &= ~(std::uint64_t{1} << v);
        order[static_cast<std::size_t>(count)] = v;
        bound[static_cast<std::size_t>(count)] = color;
        ++count;
      }
    }
    for (int i = count - 1; i >= 0; --i) {
      if (depth + bound[static_cast<std::size_t>(i)] <= best_ || best_ >= stop_at_) return;
      const int v = order[static_cast<std::size_t>(i)];
      expand(depth + 1, candidates & h_.adj[static_cast<std::size_t>(v)]);
      candidates &= ~(std::uint64_t{1} << v);
    }
  }

  const AuxReachGraph& h_;
  int best_ = 0;
  int stop_at_ = 0;
};

}  // namespace detail

/// The lexicographically smallest maximum clique (as a sorted vertex list).
inline VertexSet max_clique(const AuxReachGraph& h) {
  detail::CliqueSearch search(h);
  const std::uint64_t all = VertexSet::full(h.n).bits();
  int needed = search.largest(all);
  VertexSet chosen;
  std::uint64_t candidates = all;
  // Fix vertices in increasing order as long as a maximum clique survives.
  while (needed > 0) {
    for (std::uint64_t rest = candidates; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const std::uint64_t next = candidates & h.adj[static_cast<std::size_t>(v)];
      if (needed == 1 || search.largest(next, needed - 1, needed - 1) >= needed - 1) {
        chosen.insert(v);
        candidates = next;
        --needed;
        break;
      }
    }
  }
  return chosen;
}

struct MaxReach {
  int size = 0;
  VertexSet witness;
};

/// Largest 2-reachable set of color c. Only the size is contractual; the
/// witness is the lexicographically smallest one of that size.
inline MaxReach max_2reachable(const ColoredCocktail& g, Color c) {
  const VertexSet witness = max_clique(build_aux_graph(g, c));
  return {witness.size(), witness};
}

inline constexpr int kBruteForceBound = 16;

/// Oracle: tries subsets in decreasing size, pairwise dist_le2 checks only.
inline int brute_max_2reachable(const ColoredCocktail& g, Color c, int bound = kBruteForceBound) {
  const int n = g.n();
  if (n > bound) throw InputError("brute force supports n <= " + std::to_string(bound) + ", got " + std::to_string(n));
  auto reachable = [&](std::uint64_t s) {
    for (std::uint64_t a = s; a; a &= a - 1)
      for (std::uint64_t b = a & (a - 1); b; b &= b - 1)
        if (!dist_le2(g, c, std::countr_zero(a), std::countr_zero(b))) return false;
    return true;
  };
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (int k = n; k >= 1; --k) {
    // Gosper's hack over all k-subsets.
    for (std::uint64_t s = (std::uint64_t{1} << k) - 1; s < limit;) {
      if (reachable(s)) return k;
      const std::uint64_t low = s & (~s + 1);
      const std::uint64_t ripple = s + low;
      s = (((ripple ^ s) >> 2) / low) | ripple;
    }
  }
  return 0;
}

}  // namespace cocktail

#endif  // COCKTAIL_EXTREMAL_HPP
