#ifndef COCKTAIL_GENERATE_HPP
#define COCKTAIL_GENERATE_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "cocktail/graph.hpp"

namespace cocktail {

/// Largest n accepted by exhaustive enumeration: the edge code must fit in a
/// 64-bit counter (n = 10 has 40 edges).
inline constexpr int kMaxEnumerableN = 10;

inline void check_enumerable(int n) {
  check_order(n);
  if (n > kMaxEnumerableN)
    throw InputError("enumeration supports n <= " + std::to_string(kMaxEnumerableN) + ", got " + std::to_string(n));
}

/// Number of colorings of the cocktail party graph on n vertices.
inline std::uint64_t coloring_count(int n) {
  check_enumerable(n);
  return std::uint64_t{1} << edge_count(n);
}

/// Every coloring of order n, in increasing edge-code order. A counter
/// range [first, last) selects a sub-stream, which is how parallel scans
/// split the work.
class ColoringRange {
 public:
  class iterator {
   public:
    using value_type = ColoredCocktail;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(int n, std::uint64_t code) : n_(n), code_(code) {}
    ColoredCocktail operator*() const { return ColoredCocktail::from_edge_code(n_, code_); }
    std::uint64_t code() const { return code_; }
    iterator& operator++() {
      ++code_;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++code_;
      return old;
    }
    bool operator==(const iterator& o) const { return code_ == o.code_; }

   private:
    int n_ = 2;
    std::uint64_t code_ = 0;
  };

  explicit ColoringRange(int n) : n_(n), first_(0), last_(coloring_count(n)) {}
  ColoringRange(int n, std::uint64_t first, std::uint64_t last) : n_(n), first_(first), last_(last) {
    if (last > coloring_count(n) || first > last) throw InputError("coloring range out of bounds");
  }

  iterator begin() const { return {n_, first_}; }
  iterator end() const { return {n_, last_}; }
  std::uint64_t size() const { return last_ - first_; }

 private:
  int n_;
  std::uint64_t first_;
  std::uint64_t last_;
};

inline ColoringRange enumerate_colorings(int n) { return ColoringRange(n); }

/// Uniform random coloring from std::mt19937_64 seeded with `seed`. Draw w
/// supplies edges 64w .. 64w+63 of EdgeOrder: edge k is red iff bit (k mod 64)
/// of draw floor(k/64) is set. The engine's output sequence is fixed by the
/// standard, so the result is identical on every platform.
inline ColoredCocktail random_coloring(int n, std::uint64_t seed) {
  check_order(n);
  std::mt19937_64 engine(seed);
  const std::size_t edges = edge_count(n);
  std::vector<bool> bits(edges);
  std::uint64_t word = 0;
  for (std::size_t k = 0; k < edges; ++k) {
    if (k % 64 == 0) word = engine();
    bits[k] = (word >> (k % 64)) & 1U;
  }
  return ColoredCocktail::from_edge_bits(n, bits);
}

/// SplitMix64 finalizer; derives independent per-sample seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed of sample i in a seeded random scan.
constexpr std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t i) noexcept {
  return splitmix64(seed ^ splitmix64(i));
}

}  // namespace cocktail

#endif  // COCKTAIL_GENERATE_HPP
