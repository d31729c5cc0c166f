#ifndef COCKTAIL_GRAPH_HPP
#define COCKTAIL_GRAPH_HPP

// Data model for 2-edge-colored cocktail party graphs.
//
// Vertices are 0..n-1 with n even. The deleted perfect matching is implicit:
// the partner of v is v ^ 1, so the pairs are {0,1}, {2,3}, ... Every other
// pair of vertices is an edge carrying exactly one of the two colors.

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cocktail {

inline constexpr int kMaxVertices = 64;

/// Bad user input: malformed text, invariant violation, out-of-range argument.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A step of the covering proof did not hold. Never expected to fire; the
/// message carries the offending coloring in compact form.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class Color : std::uint8_t { red = 1, blue = 2 };

constexpr Color flip(Color c) noexcept {
  return c == Color::red ? Color::blue : Color::red;
}

/// 0 for red, 1 for blue; used to index per-color tables.
constexpr int index_of(Color c) noexcept { return static_cast<int>(c) - 1; }

constexpr int to_int(Color c) noexcept { return static_cast<int>(c); }

inline Color color_from_int(int value) {
  if (value != 1 && value != 2)
    throw InputError("color must be 1 or 2, got " + std::to_string(value));
  return static_cast<Color>(value);
}

inline constexpr std::array<Color, 2> kColors{Color::red, Color::blue};

/// An n-bit subset of vertices, n <= 64.
class VertexSet {
 public:
  class iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }
  static constexpr VertexSet full(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static VertexSet of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s.insert(v);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }
  /// Smallest member; undefined on the empty set.
  constexpr int front() const { return std::countr_zero(bits_); }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> vertices() const { return {begin(), end()}; }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }
  constexpr bool operator==(const VertexSet&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

constexpr int partner_of(int v) noexcept { return v ^ 1; }

/// The vertex paired with v in the deleted matching.
inline int partner(int v, int n) {
  if (n < 2 || n % 2 != 0) throw InputError("vertex count must be even and >= 2");
  if (v < 0 || v >= n)
    throw InputError("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n));
  return partner_of(v);
}

using Edge = std::pair<int, int>;

/// Non-partner pairs (u, v), u < v, in lexicographic order. Position k in
/// this order is bit k of an edge code.
class EdgeOrder {
 public:
  explicit EdgeOrder(int n) : n_(n) {
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (v != partner_of(u)) edges_.emplace_back(u, v);
  }

  int n() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  const Edge& operator[](std::size_t k) const { return edges_[k]; }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Position of the edge {u, v}; the pair must be a non-partner pair.
  std::size_t index(int u, int v) const {
    if (u > v) std::swap(u, v);
    // Row u skips the pairs (u, u+1) when u is even; all rows before it
    // contribute (n - 1 - w) pairs minus their partner pair if it lies ahead.
    std::size_t k = 0;
    for (int w = 0; w < u; ++w) k += static_cast<std::size_t>(n_ - 1 - w) - (w % 2 == 0 ? 1 : 0);
    std::size_t offset = static_cast<std::size_t>(v - u - 1);
    if (u % 2 == 0) --offset;
    return k + offset;
  }

 private:
  int n_;
  std::vector<Edge> edges_;
};

constexpr std::size_t edge_count(int n) {
  return static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 2) / 2;
}

/// Shared, lazily built edge order for every admissible n.
inline const EdgeOrder& edge_order(int n) {
  static const std::vector<EdgeOrder> orders = [] {
    std::vector<EdgeOrder> all;
    for (int k = 0; k <= kMaxVertices; ++k) all.emplace_back(k);
    return all;
  }();
  if (n < 0 || n > kMaxVertices) throw InputError("n out of supported range");
  return orders[static_cast<std::size_t>(n)];
}

inline void check_order(int n) {
  if (n < 2 || n % 2 != 0)
    throw InputError("vertex count must be even and >= 2, got " + std::to_string(n));
  if (n > kMaxVertices)
    throw InputError("vertex count " + std::to_string(n) + " exceeds " + std::to_string(kMaxVertices));
}

using Adjacency = std::array<std::uint64_t, kMaxVertices>;

/// A cocktail party graph on n vertices with every edge colored red (1) or
/// blue (2). Immutable once built.
class ColoredCocktail {
 public:
  /// Build from the red neighborhoods; blue is everything else except the
  /// vertex itself and its partner. Validates n, symmetry, loops and partner
  /// bits.
  ColoredCocktail(int n, const Adjacency& red) : n_(n) {
    check_order(n);
    const std::uint64_t all = VertexSet::full(n).bits();
    for (int v = 0; v < n; ++v) {
      const std::uint64_t r = red[static_cast<std::size_t>(v)];
      if (r & ~all) throw InputError("red neighborhood of " + std::to_string(v) + " leaves the vertex range");
      if ((r >> v) & 1U) throw InputError("loop at vertex " + std::to_string(v));
      if ((r >> partner_of(v)) & 1U)
        throw InputError("partner pair (" + std::to_string(std::min(v, partner_of(v))) + "," +
                         std::to_string(std::max(v, partner_of(v))) + ") cannot be an edge");
      for (std::uint64_t rest = r; rest; rest &= rest - 1) {
        const int u = std::countr_zero(rest);
        if (!((red[static_cast<std::size_t>(u)] >> v) & 1U))
          throw InputError("red adjacency is not symmetric at (" + std::to_string(v) + "," + std::to_string(u) + ")");
      }
    }
    fill(red);
  }

  /// Decode an edge code over EdgeOrder(n): bit k set means edge k is red.
  static ColoredCocktail from_edge_code(int n, std::uint64_t code) {
    check_order(n);
    if (edge_count(n) > 64) throw InputError("edge code needs more than 64 bits for n=" + std::to_string(n));
    const EdgeOrder& order = edge_order(n);
    Adjacency red{};
    for (std::uint64_t rest = code; rest; rest &= rest - 1) {
      const auto k = static_cast<std::size_t>(std::countr_zero(rest));
      if (k >= order.size()) throw InputError("edge code has bits beyond the edge count");
      const auto [u, v] = order[k];
      red[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
      red[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }
    return ColoredCocktail(n, red, Trusted{});
  }

  /// Same as from_edge_code for codes of any length (one bit per edge).
  static ColoredCocktail from_edge_bits(int n, const std::vector<bool>& red_bits) {
    check_order(n);
    const EdgeOrder& order = edge_order(n);
    if (red_bits.size() != order.size()) throw InputError("edge bit count does not match n");
    Adjacency red{};
    for (std::size_t k = 0; k < order.size(); ++k) {
      if (!red_bits[k]) continue;
      const auto [u, v] = order[k];
      red[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
      red[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }
    return ColoredCocktail(n, red, Trusted{});
  }

  int n() const { return n_; }
  VertexSet vertices() const { return VertexSet::full(n_); }

  /// Neighbors of v in color c.
  VertexSet neighbors(Color c, int v) const {
    return VertexSet(adj_[static_cast<std::size_t>(index_of(c))][static_cast<std::size_t>(v)]);
  }
  std::uint64_t mask(Color c, int v) const {
    return adj_[static_cast<std::size_t>(index_of(c))][static_cast<std::size_t>(v)];
  }

  /// Edge bits over EdgeOrder(n); bit k set means edge k is red.
  std::vector<bool> edge_bits() const {
    const EdgeOrder& order = edge_order(n_);
    std::vector<bool> bits(order.size());
    for (std::size_t k = 0; k < order.size(); ++k)
      bits[k] = (mask(Color::red, order[k].first) >> order[k].second) & 1U;
    return bits;
  }

  /// Edge code for n <= 12 (at most 60 edges).
  std::uint64_t edge_code() const {
    if (edge_count(n_) > 64) throw InputError("edge code needs more than 64 bits for n=" + std::to_string(n_));
    const EdgeOrder& order = edge_order(n_);
    std::uint64_t code = 0;
    for (std::size_t k = 0; k < order.size(); ++k)
      if ((mask(Color::red, order[k].first) >> order[k].second) & 1U) code |= std::uint64_t{1} << k;
    return code;
  }

  bool operator==(const ColoredCocktail& o) const { return n_ == o.n_ && adj_ == o.adj_; }

 private:
  struct Trusted {};

  ColoredCocktail(int n, const Adjacency& red, Trusted) : n_(n) { fill(red); }

  void fill(const Adjacency& red) {
    const std::uint64_t all = VertexSet::full(n_).bits();
    for (int v = 0; v < n_; ++v) {
      const auto i = static_cast<std::size_t>(v);
      adj_[0][i] = red[i];
      adj_[1][i] = all & ~red[i] & ~(std::uint64_t{1} << v) & ~(std::uint64_t{1} << partner_of(v));
    }
  }

  int n_;
  std::array<Adjacency, 2> adj_{};
};

inline void check_vertex(const ColoredCocktail& g, int v) {
  if (v < 0 || v >= g.n())
    throw InputError("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(g.n()));
}

/// Color of the edge {u, v}; empty when v is the partner of u.
inline std::optional<Color> color_of(const ColoredCocktail& g, int u, int v) {
  check_vertex(g, u);
  check_vertex(g, v);
  if (u == v) throw InputError("color_of needs two distinct vertices");
  if (v == partner_of(u)) return std::nullopt;
  return g.neighbors(Color::red, u).contains(v) ? Color::red : Color::blue;
}

/// Listed pairs are red; every other non-partner pair is blue.
inline ColoredCocktail from_red_set(int n, const std::vector<Edge>& red_pairs) {
  check_order(n);
  Adjacency red{};
  for (auto [u, v] : red_pairs) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw InputError("pair (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    if (u == v) throw InputError("loop (" + std::to_string(u) + "," + std::to_string(v) + ")");
    if (v == partner_of(u))
      throw InputError("partner pair (" + std::to_string(std::min(u, v)) + "," + std::to_string(std::max(u, v)) +
                       ") cannot be colored");
    if ((red[static_cast<std::size_t>(u)] >> v) & 1U)
      throw InputError("duplicate pair (" + std::to_string(std::min(u, v)) + "," + std::to_string(std::max(u, v)) + ")");
    red[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    red[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
  }
  return ColoredCocktail(n, red);
}

inline ColoredCocktail all_red(int n) {
  check_order(n);
  Adjacency red{};
  const std::uint64_t all = VertexSet::full(n).bits();
  for (int v = 0; v < n; ++v)
    red[static_cast<std::size_t>(v)] = all & ~(std::uint64_t{1} << v) & ~(std::uint64_t{1} << partner_of(v));
  return ColoredCocktail(n, red);
}

inline ColoredCocktail all_blue(int n) { return ColoredCocktail(n, Adjacency{}); }

}  // namespace cocktail

#endif  // COCKTAIL_GRAPH_HPP
