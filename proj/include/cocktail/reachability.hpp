#ifndef COCKTAIL_REACHABILITY_HPP
#define COCKTAIL_REACHABILITY_HPP

// Distance-at-most-two predicates inside one color class.
//
// "2-reachable" lets the middle vertex of a path lie anywhere in V;
// "diameter 2" requires it inside the set. Both are computed from neighbor
// masks; no BFS is ever needed.

#include <array>
#include <cstdint>
#include <vector>

#include "cocktail/graph.hpp"

namespace cocktail {

/// A pair at distance > 2 in one color, stored with u < v.
struct CriticalPair {
  int u = 0;
  int v = 0;
  Color color = Color::red;
  bool is_edge = false;

  bool operator==(const CriticalPair&) const = default;
};

/// dist_c(u, v) <= 2 in the whole color-c graph.
inline bool dist_le2(const ColoredCocktail& g, Color c, int u, int v) {
  check_vertex(g, u);
  check_vertex(g, v);
  if (u == v) throw InputError("dist_le2 needs two distinct vertices");
  const std::uint64_t nu = g.mask(c, u);
  return ((nu >> v) & 1U) || (nu & g.mask(c, v)) != 0;
}

/// Vertices within color-c distance 2 of each vertex (the vertex itself
/// excluded), for both colors at once.
class ReachIndex {
 public:
  explicit ReachIndex(const ColoredCocktail& g) : n_(g.n()) {
    for (Color c : kColors) {
      auto& reach = reach_[static_cast<std::size_t>(index_of(c))];
      for (int u = 0; u < n_; ++u) {
        const std::uint64_t nu = g.mask(c, u);
        std::uint64_t r = nu;
        for (std::uint64_t rest = nu; rest; rest &= rest - 1) r |= g.mask(c, std::countr_zero(rest));
        reach[static_cast<std::size_t>(u)] = r & ~(std::uint64_t{1} << u);
      }
    }
  }

  int n() const { return n_; }

  std::uint64_t reach(Color c, int u) const {
    return reach_[static_cast<std::size_t>(index_of(c))][static_cast<std::size_t>(u)];
  }

  /// Vertices at color-c distance > 2 from u.
  std::uint64_t critical(Color c, int u) const {
    return VertexSet::full(n_).bits() & ~reach(c, u) & ~(std::uint64_t{1} << u);
  }

  bool has_critical(Color c) const {
    for (int u = 0; u < n_; ++u)
      if (critical(c, u)) return true;
    return false;
  }

 private:
  int n_;
  std::array<Adjacency, 2> reach_{};
};

/// All color-c critical pairs, u < v, in lexicographic order.
inline std::vector<CriticalPair> critical_pairs(const ColoredCocktail& g, Color c) {
  const ReachIndex index(g);
  std::vector<CriticalPair> out;
  for (int u = 0; u < g.n(); ++u) {
    const std::uint64_t later = index.critical(c, u) & ~((std::uint64_t{2} << u) - 1);
    for (std::uint64_t rest = later; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      out.push_back({u, v, c, v != partner_of(u)});
    }
  }
  return out;
}

/// Every pair of S is within color-c distance 2 in the whole graph.
inline bool is_2reachable_set(const ColoredCocktail& g, Color c, VertexSet s) {
  for (int u : s) {
    const std::uint64_t nu = g.mask(c, u);
    std::uint64_t r = nu;
    for (std::uint64_t rest = nu; rest; rest &= rest - 1) r |= g.mask(c, std::countr_zero(rest));
    if ((s.bits() & ~r & ~(std::uint64_t{1} << u)) != 0) return false;
  }
  return true;
}

/// The subgraph of color c induced by S has diameter at most 2.
inline bool is_diam2_subset(const ColoredCocktail& g, Color c, VertexSet s) {
  const std::uint64_t inside = s.bits();
  for (int u : s) {
    const std::uint64_t nu = g.mask(c, u) & inside;
    std::uint64_t r = nu;
    for (std::uint64_t rest = nu; rest; rest &= rest - 1) r |= g.mask(c, std::countr_zero(rest)) & inside;
    if ((inside & ~r & ~(std::uint64_t{1} << u)) != 0) return false;
  }
  return true;
}

/// {v} together with its color-c neighbors.
inline VertexSet star(const ColoredCocktail& g, Color c, int v) {
  check_vertex(g, v);
  return g.neighbors(c, v) | VertexSet::single(v);
}

/// The whole color-c graph has diameter at most 2 (no critical pair).
inline bool mono_diam_le2(const ColoredCocktail& g, Color c) {
  return !ReachIndex(g).has_critical(c);
}

}  // namespace cocktail

#endif  // COCKTAIL_REACHABILITY_HPP
