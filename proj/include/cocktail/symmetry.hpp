#ifndef COCKTAIL_SYMMETRY_HPP
#define COCKTAIL_SYMMETRY_HPP

// Canonical keys of colorings under the symmetry group generated by
// permuting the partner pairs, swapping the two vertices inside a pair, and
// swapping the two colors. The group has 2 * (n/2)! * 2^(n/2) elements (768
// at n = 8). The key is the smallest edge code over the orbit.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <vector>

#include "cocktail/graph.hpp"

namespace cocktail {

inline constexpr int kMaxSymmetryN = 8;

struct CanonicalKey {
  int n = 0;
  std::uint64_t code = 0;

  auto operator<=>(const CanonicalKey&) const = default;
};

/// Vertex relabelings preserving the pairing, each compiled to byte lookup
/// tables acting directly on edge codes. Color swap is the complement of the
/// code and is applied on top of every relabeling.
class SymmetryGroup {
 public:
  explicit SymmetryGroup(int n) : n_(n) {
    check_order(n);
    if (n > kMaxSymmetryN)
      throw InputError("symmetry reduction supports n <= " + std::to_string(kMaxSymmetryN) + ", got " + std::to_string(n));
    const int pairs = n / 2;
    const EdgeOrder& order = edge_order(n);
    edges_ = order.size();
    mask_ = edges_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << edges_) - 1;
    bytes_ = (edges_ + 7) / 8;

    std::vector<int> perm(static_cast<std::size_t>(pairs));
    std::iota(perm.begin(), perm.end(), 0);
    do {
      for (std::uint32_t flips = 0; flips < (1U << pairs); ++flips) {
        std::array<int, kMaxSymmetryN> image{};
        for (int v = 0; v < n; ++v)
          image[static_cast<std::size_t>(v)] =
              2 * perm[static_cast<std::size_t>(v / 2)] + ((v & 1) ^ static_cast<int>((flips >> (v / 2)) & 1U));
        std::vector<std::uint64_t> table(bytes_ * 256, 0);
        for (std::size_t k = 0; k < edges_; ++k) {
          const auto [u, v] = order[k];
          const std::uint64_t bit = std::uint64_t{1}
                                    << order.index(image[static_cast<std::size_t>(u)], image[static_cast<std::size_t>(v)]);
          const std::size_t byte = k / 8;
          for (unsigned value = 0; value < 256; ++value)
            if ((value >> (k % 8)) & 1U) table[byte * 256 + value] |= bit;
        }
        tables_.push_back(std::move(table));
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  int n() const { return n_; }

  /// Number of group elements, color swap included.
  std::size_t order() const { return 2 * tables_.size(); }

  std::uint64_t apply(std::size_t relabeling, std::uint64_t code) const {
    const std::vector<std::uint64_t>& table = tables_[relabeling];
    std::uint64_t out = 0;
    for (std::size_t j = 0; j < bytes_; ++j) out |= table[j * 256 + ((code >> (8 * j)) & 0xFF)];
    return out;
  }

  CanonicalKey canonical(std::uint64_t code) const {
    std::uint64_t best = code;
    for (std::size_t r = 0; r < tables_.size(); ++r) {
      const std::uint64_t t = apply(r, code);
      best = std::min({best, t, t ^ mask_});
    }
    return {n_, best};
  }

  /// True iff `code` is the smallest code in its orbit; `orbit_size` then
  /// receives the orbit length. Bails out at the first smaller image.
  bool is_canonical(std::uint64_t code, std::uint64_t& orbit_size) const {
    std::uint64_t stabilizer = 0;
    for (std::size_t r = 0; r < tables_.size(); ++r) {
      const std::uint64_t t = apply(r, code);
      const std::uint64_t swapped = t ^ mask_;
      if (t < code || swapped < code) return false;
      stabilizer += (t == code) + (swapped == code);
    }
    orbit_size = order() / stabilizer;
    return true;
  }

 private:
  int n_;
  std::size_t edges_ = 0;
  std::uint64_t mask_ = 0;
  std::size_t bytes_ = 0;
  std::vector<std::vector<std::uint64_t>> tables_;
};

/// Shared group instance for n in {2, 4, 6, 8}.
inline const SymmetryGroup& symmetry_group(int n) {
  static const std::array<SymmetryGroup, 4> groups{SymmetryGroup(2), SymmetryGroup(4), SymmetryGroup(6),
                                                   SymmetryGroup(8)};
  check_order(n);
  if (n > kMaxSymmetryN)
    throw InputError("symmetry reduction supports n <= " + std::to_string(kMaxSymmetryN) + ", got " + std::to_string(n));
  return groups[static_cast<std::size_t>(n / 2 - 1)];
}

inline CanonicalKey symmetry_reduce(const ColoredCocktail& g) {
  return symmetry_group(g.n()).canonical(g.edge_code());
}

}  // namespace cocktail

#endif  // COCKTAIL_SYMMETRY_HPP
