#ifndef COCKTAIL_COVER_HPP
#define COCKTAIL_COVER_HPP

// Covers of V by two monochromatic 2-reachable sets.
//
// solve() always succeeds. It tries, in order:
//   1. a color with no critical pair: V itself;
//   2. a critical non-edge {u, u'} in color i: the two color-(3-i) stars at
//      u and u' (no color-i path u-z-u' means every z sees one of them in
//      the other color);
//   3. a red-critical edge e and a blue-critical edge f sharing a vertex:
//      apply_lemma(), which ends in a pair of stars or two blown-up 5-cycles;
//   4. otherwise the vertex sets P, Q of the red- and blue-critical edges are
//      disjoint and V \ P (red), V \ Q (blue) cover V.
// Colors are scanned red before blue and pairs in lexicographic order, so the
// result is a function of the coloring alone.

#include <array>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "cocktail/format.hpp"
#include "cocktail/graph.hpp"
#include "cocktail/reachability.hpp"

namespace cocktail {

enum class LemmaCase : std::uint8_t { i, ii, iii, iv, v, vi };

inline const char* to_string(LemmaCase c) {
  static constexpr const char* kNames[] = {"i", "ii", "iii", "iv", "v", "vi"};
  return kNames[static_cast<int>(c)];
}

/// Vertices named in the lemma after relabeling: e = (x, y) is red-critical,
/// f = (x, q) is blue-critical, and q must equal y'.
struct LemmaWitness {
  int x = 0;
  int y = 0;
  int x_partner = 0;
  int y_partner = 0;
  int q = 0;

  bool operator==(const LemmaWitness&) const = default;
};

struct WholeVertexSet {
  Color color = Color::red;
  bool operator==(const WholeVertexSet&) const = default;
};

/// Stars of one color around both ends of a critical non-edge.
struct TwoStars {
  Color color = Color::red;
  int first_center = 0;
  int second_center = 0;
  bool operator==(const TwoStars&) const = default;
};

struct LemmaStars {
  LemmaCase which = LemmaCase::i;
  Color color_a = Color::red;
  int center_a = 0;
  Color color_b = Color::red;
  int center_b = 0;
  LemmaWitness witness;
  bool operator==(const LemmaStars&) const = default;
};

/// Two blown-up 5-cycles. blue_parts = ({x}, {y}, Y2, {x'}, X2) is the
/// blue set A, red_parts = ({x}, {y'}, X1, {x'}, Y1) the red set B.
/// Consecutive parts (cyclically) are completely joined in the set's color.
struct LemmaC5Plus {
  std::array<VertexSet, 5> blue_parts{};
  std::array<VertexSet, 5> red_parts{};
  LemmaWitness witness;
  bool operator==(const LemmaC5Plus&) const = default;
};

/// P, Q: vertices of the red- and blue-critical edges; disjoint.
struct CriticalComplement {
  VertexSet p;
  VertexSet q;
  bool operator==(const CriticalComplement&) const = default;
};

/// A cover by two diameter-2 sets found by search.
struct Diam2Witness {
  VertexSet a;
  VertexSet b;
  bool operator==(const Diam2Witness&) const = default;
};

using Certificate = std::variant<WholeVertexSet, TwoStars, LemmaStars, LemmaC5Plus, CriticalComplement, Diam2Witness>;

struct Cover {
  VertexSet a;
  Color color_a = Color::red;
  VertexSet b;
  Color color_b = Color::red;
  Certificate certificate;

  bool operator==(const Cover&) const = default;
};

/// Certificate kinds with the lemma's star cases split out; used for the
/// branch census.
enum class Branch : std::uint8_t {
  whole_vertex_set,
  two_stars,
  lemma_stars_i,
  lemma_stars_ii,
  lemma_stars_iii,
  lemma_stars_iv,
  lemma_stars_v,
  lemma_stars_vi,
  lemma_c5plus,
  critical_complement,
  diam2_witness,
};

/// The branches solve() can produce.
inline constexpr int kSolveBranchCount = 10;

inline const char* to_string(Branch b) {
  static constexpr const char* kNames[] = {
      "WholeVertexSet", "TwoStars",        "LemmaStars.i",       "LemmaStars.ii",
      "LemmaStars.iii", "LemmaStars.iv",   "LemmaStars.v",       "LemmaStars.vi",
      "LemmaC5Plus",    "CriticalComplement", "Diam2Witness"};
  return kNames[static_cast<int>(b)];
}

inline Branch branch_of(const Certificate& cert) {
  struct Visitor {
    Branch operator()(const WholeVertexSet&) const { return Branch::whole_vertex_set; }
    Branch operator()(const TwoStars&) const { return Branch::two_stars; }
    Branch operator()(const LemmaStars& s) const {
      return static_cast<Branch>(static_cast<int>(Branch::lemma_stars_i) + static_cast<int>(s.which));
    }
    Branch operator()(const LemmaC5Plus&) const { return Branch::lemma_c5plus; }
    Branch operator()(const CriticalComplement&) const { return Branch::critical_complement; }
    Branch operator()(const Diam2Witness&) const { return Branch::diam2_witness; }
  };
  return std::visit(Visitor{}, cert);
}

namespace detail {

inline std::string set_text(VertexSet s) {
  std::string out;
  for (int v : s) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out.empty() ? "-" : out;
}

inline std::string witness_text(const LemmaWitness& w) {
  return "x=" + std::to_string(w.x) + " y=" + std::to_string(w.y) + " x'=" + std::to_string(w.x_partner) +
         " y'=" + std::to_string(w.y_partner) + " q=" + std::to_string(w.q);
}

}  // namespace detail

/// One-line description: branch name followed by key=value fields.
inline std::string describe(const Certificate& cert) {
  struct Visitor {
    std::string operator()(const WholeVertexSet& c) const {
      return "WholeVertexSet color=" + std::to_string(to_int(c.color));
    }
    std::string operator()(const TwoStars& c) const {
      return "TwoStars color=" + std::to_string(to_int(c.color)) + " centers=" + std::to_string(c.first_center) +
             "," + std::to_string(c.second_center);
    }
    std::string operator()(const LemmaStars& c) const {
      return std::string("LemmaStars case=") + to_string(c.which) + " A=S" + std::to_string(to_int(c.color_a)) +
             "(" + std::to_string(c.center_a) + ") B=S" + std::to_string(to_int(c.color_b)) + "(" +
             std::to_string(c.center_b) + ") " + detail::witness_text(c.witness);
    }
    std::string operator()(const LemmaC5Plus& c) const {
      std::string out = "LemmaC5Plus " + detail::witness_text(c.witness) + " blue_parts=";
      for (std::size_t i = 0; i < 5; ++i) out += (i ? "|" : "") + detail::set_text(c.blue_parts[i]);
      out += " red_parts=";
      for (std::size_t i = 0; i < 5; ++i) out += (i ? "|" : "") + detail::set_text(c.red_parts[i]);
      return out;
    }
    std::string operator()(const CriticalComplement& c) const {
      return "CriticalComplement P=" + detail::set_text(c.p) + " Q=" + detail::set_text(c.q);
    }
    std::string operator()(const Diam2Witness& c) const {
      return "Diam2Witness A=" + detail::set_text(c.a) + " B=" + detail::set_text(c.b);
    }
  };
  return std::visit(Visitor{}, cert);
}

/// Counts of the proof steps checked inside apply_lemma. A failing step
/// throws instead of being counted.
struct LemmaAudit {
  std::uint64_t invocations = 0;
  std::uint64_t claim_checks = 0;
  std::uint64_t partition_checks = 0;
  std::uint64_t red_neighborhood_checks = 0;  // Y + {y'} = N1(x)
  std::uint64_t x_inside_checks = 0;          // X within N1(y')
  std::uint64_t nondegenerate_checks = 0;

  LemmaAudit& operator+=(const LemmaAudit& o) {
    invocations += o.invocations;
    claim_checks += o.claim_checks;
    partition_checks += o.partition_checks;
    red_neighborhood_checks += o.red_neighborhood_checks;
    x_inside_checks += o.x_inside_checks;
    nondegenerate_checks += o.nondegenerate_checks;
    return *this;
  }
  bool operator==(const LemmaAudit&) const = default;
};

namespace detail {

[[noreturn]] inline void inconsistent(const ColoredCocktail& g, const std::string& what) {
  throw InternalInconsistency(what + " on coloring " + to_compact(g));
}

inline void require_critical_edge(const ColoredCocktail& g, const CriticalPair& p, Color expected) {
  const std::string name = "(" + std::to_string(p.u) + "," + std::to_string(p.v) + ")";
  if (p.color != expected)
    throw InputError("pair " + name + " must be critical for color " + std::to_string(to_int(expected)));
  if (!p.is_edge || p.v == partner_of(p.u) || p.u == p.v) throw InputError("pair " + name + " must be an edge");
  if (dist_le2(g, expected, p.u, p.v))
    throw InputError("pair " + name + " is not critical for color " + std::to_string(to_int(expected)));
  if (color_of(g, p.u, p.v) != flip(expected))
    throw InputError("pair " + name + " must have color " + std::to_string(to_int(flip(expected))));
}

}  // namespace detail

/// The shared-vertex lemma. `e` must be a red-critical edge (hence blue),
/// `f` a blue-critical edge (hence red), with exactly one common vertex.
/// Returns the first case that fires; every intermediate claim of the
/// argument is checked and a failure raises InternalInconsistency.
inline Cover apply_lemma(const ColoredCocktail& g, const CriticalPair& e, const CriticalPair& f,
                         LemmaAudit* audit = nullptr) {
  detail::require_critical_edge(g, e, Color::red);
  detail::require_critical_edge(g, f, Color::blue);
  const VertexSet ends_e = VertexSet::of({e.u, e.v});
  const VertexSet ends_f = VertexSet::of({f.u, f.v});
  const VertexSet shared = ends_e & ends_f;
  if (shared.size() != 1)
    throw InputError("critical edges must share exactly one vertex, they share " + std::to_string(shared.size()));

  const int x = shared.front();
  const int y = e.u == x ? e.v : e.u;
  const int q = f.u == x ? f.v : f.u;
  const int xp = partner_of(x);
  const int yp = partner_of(y);
  LemmaAudit local;
  ++local.invocations;

  if (q != yp) detail::inconsistent(g, "claim q = y' failed (q=" + std::to_string(q) + ", y=" + std::to_string(y) + ")");
  ++local.claim_checks;

  const VertexSet n2x = g.neighbors(Color::blue, x);
  const VertexSet n2y = g.neighbors(Color::blue, y);
  const VertexSet core = VertexSet::of({x, xp, y, yp});
  const VertexSet big_x = n2x - VertexSet::single(y);
  const VertexSet big_y = n2y - (n2x | VertexSet::of({x, xp}));
  if (core.size() != 4 || core.intersects(big_x) || core.intersects(big_y) || big_x.intersects(big_y) ||
      (core | big_x | big_y) != g.vertices())
    detail::inconsistent(g, "partition V = {x,x',y,y'} + X + Y failed");
  ++local.partition_checks;
  if ((big_y | VertexSet::single(yp)) != g.neighbors(Color::red, x)) detail::inconsistent(g, "Y + {y'} = N1(x) failed");
  ++local.red_neighborhood_checks;
  if (!big_x.subset_of(g.neighbors(Color::red, yp))) detail::inconsistent(g, "X within N1(y') failed");
  ++local.x_inside_checks;

  const LemmaWitness witness{x, y, xp, yp, q};
  auto stars = [&](LemmaCase which, Color ca, int centre_a, Color cb, int centre_b) {
    if (audit) *audit += local;
    return Cover{star(g, ca, centre_a), ca, star(g, cb, centre_b), cb,
                 LemmaStars{which, ca, centre_a, cb, centre_b, witness}};
  };

  const VertexSet red_xp = g.neighbors(Color::red, xp);
  const VertexSet blue_xp = g.neighbors(Color::blue, xp);
  if (blue_xp.contains(y)) return stars(LemmaCase::i, Color::red, yp, Color::blue, y);
  if (red_xp.contains(yp)) return stars(LemmaCase::ii, Color::red, yp, Color::blue, y);

  const VertexSet x1 = big_x & red_xp;
  const VertexSet x2 = big_x & blue_xp;
  const VertexSet y1 = big_y & red_xp;
  const VertexSet y2 = big_y & blue_xp;
  if (x1.empty()) return stars(LemmaCase::iii, Color::blue, xp, Color::blue, y);
  if (y1.empty()) return stars(LemmaCase::iv, Color::blue, xp, Color::blue, x);
  if (x2.empty()) return stars(LemmaCase::v, Color::red, xp, Color::red, x);
  if (y2.empty()) return stars(LemmaCase::vi, Color::red, xp, Color::red, yp);

  if (!red_xp.contains(y) || !blue_xp.contains(yp) || (x1 | x2) != big_x || (y1 | y2) != big_y)
    detail::inconsistent(g, "non-degenerate split of X and Y failed");
  ++local.nondegenerate_checks;
  if (audit) *audit += local;

  LemmaC5Plus cert;
  cert.blue_parts = {VertexSet::single(x), VertexSet::single(y), y2, VertexSet::single(xp), x2};
  cert.red_parts = {VertexSet::single(x), VertexSet::single(yp), x1, VertexSet::single(xp), y1};
  cert.witness = witness;
  VertexSet a;
  VertexSet b;
  for (std::size_t i = 0; i < 5; ++i) {
    a |= cert.blue_parts[i];
    b |= cert.red_parts[i];
  }
  return Cover{a, Color::blue, b, Color::red, cert};
}

/// A cover of V by two monochromatic 2-reachable sets; see the file comment
/// for the branch order.
inline Cover solve(const ColoredCocktail& g, LemmaAudit* audit = nullptr) {
  const ReachIndex index(g);
  const int n = g.n();
  const VertexSet all = g.vertices();

  for (Color c : kColors)
    if (!index.has_critical(c)) return Cover{all, c, VertexSet{}, c, WholeVertexSet{c}};

  for (Color c : kColors)
    for (int u = 0; u < n; u += 2)
      if ((index.critical(c, u) >> (u + 1)) & 1U) {
        const Color other = flip(c);
        return Cover{star(g, other, u), other, star(g, other, u + 1), other, TwoStars{other, u, u + 1}};
      }

  // From here on every critical pair is an edge.
  VertexSet p;
  VertexSet q;
  for (int u = 0; u < n; ++u) {
    if (index.critical(Color::red, u)) p.insert(u);
    if (index.critical(Color::blue, u)) q.insert(u);
  }

  if (p.intersects(q)) {
    for (int u : p) {
      const std::uint64_t later = index.critical(Color::red, u) & ~((std::uint64_t{2} << u) - 1);
      for (std::uint64_t rest = later; rest; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        if (!q.contains(u) && !q.contains(v)) continue;
        const CriticalPair e{u, v, Color::red, true};
        for (int s : q) {
          const std::uint64_t partners = index.critical(Color::blue, s) & ~((std::uint64_t{2} << s) - 1);
          for (std::uint64_t rest2 = partners; rest2; rest2 &= rest2 - 1) {
            const int t = std::countr_zero(rest2);
            if (s == u || s == v || t == u || t == v) return apply_lemma(g, e, CriticalPair{s, t, Color::blue, true}, audit);
          }
        }
      }
    }
    detail::inconsistent(g, "P and Q intersect but no pair of critical edges shares a vertex");
  }

  return Cover{all - p, Color::red, all - q, Color::blue, CriticalComplement{p, q}};
}

enum class VerifyReason : std::uint8_t {
  ok,
  out_of_range,
  not_a_cover,
  a_not_reachable,
  b_not_reachable,
  a_not_diam2,
  b_not_diam2,
  certificate_mismatch,
};

inline const char* to_string(VerifyReason r) {
  static constexpr const char* kNames[] = {"ok",
                                           "vertex out of range",
                                           "not a cover",
                                           "A not 2-reachable",
                                           "B not 2-reachable",
                                           "A not diameter 2",
                                           "B not diameter 2",
                                           "certificate mismatch"};
  return kNames[static_cast<int>(r)];
}

/// Stable snake_case reason code for machine output.
inline const char* reason_code(VerifyReason r) {
  static constexpr const char* kCodes[] = {"ok",         "out_of_range", "not_a_cover",  "a_not_reachable",
                                           "b_not_reachable", "a_not_diam2", "b_not_diam2", "certificate_mismatch"};
  return kCodes[static_cast<int>(r)];
}

struct VerifyResult {
  VerifyReason reason = VerifyReason::ok;
  std::string detail;

  bool ok() const { return reason == VerifyReason::ok; }
  explicit operator bool() const { return ok(); }
};

enum class CoverProperty : std::uint8_t { reach2, diam2 };

/// Checks only the two sets: they cover V and each has the property in its
/// color.
inline VerifyResult verify_sets(const ColoredCocktail& g, VertexSet a, Color ca, VertexSet b, Color cb,
                                CoverProperty property = CoverProperty::reach2) {
  const VertexSet all = g.vertices();
  if (!a.subset_of(all) || !b.subset_of(all)) return {VerifyReason::out_of_range, "a set names a vertex >= n"};
  if ((a | b) != all)
    return {VerifyReason::not_a_cover, "missing vertices " + detail::set_text(all - (a | b))};
  if (property == CoverProperty::reach2) {
    if (!is_2reachable_set(g, ca, a)) return {VerifyReason::a_not_reachable, ""};
    if (!is_2reachable_set(g, cb, b)) return {VerifyReason::b_not_reachable, ""};
  } else {
    if (!is_diam2_subset(g, ca, a)) return {VerifyReason::a_not_diam2, ""};
    if (!is_diam2_subset(g, cb, b)) return {VerifyReason::b_not_diam2, ""};
  }
  return {};
}

namespace detail {

inline VerifyResult mismatch(const std::string& why) { return {VerifyReason::certificate_mismatch, why}; }

inline bool is_critical_edge(const ColoredCocktail& g, Color c, int u, int v) {
  return u != v && v != partner_of(u) && !dist_le2(g, c, u, v);
}

inline VerifyResult check_witness(const ColoredCocktail& g, const LemmaWitness& w) {
  const int n = g.n();
  for (int v : {w.x, w.y, w.x_partner, w.y_partner, w.q})
    if (v < 0 || v >= n) return mismatch("witness vertex out of range");
  if (w.x_partner != partner_of(w.x) || w.y_partner != partner_of(w.y) || w.q != w.y_partner)
    return mismatch("witness partners inconsistent");
  if (!is_critical_edge(g, Color::red, w.x, w.y)) return mismatch("e = (x,y) is not a red-critical edge");
  if (!is_critical_edge(g, Color::blue, w.x, w.q)) return mismatch("f = (x,q) is not a blue-critical edge");
  return {};
}

/// Every vertex of `left` sees every vertex of `right` in color c.
inline bool completely_joined(const ColoredCocktail& g, Color c, VertexSet left, VertexSet right) {
  for (int u : left)
    if (!right.subset_of(g.neighbors(c, u))) return false;
  return true;
}

inline VerifyResult check_c5plus(const ColoredCocktail& g, Color c, const std::array<VertexSet, 5>& parts,
                                 VertexSet whole) {
  VertexSet seen;
  for (std::size_t i = 0; i < 5; ++i) {
    if (parts[i].empty()) return mismatch("empty 5-cycle part");
    if (parts[i].intersects(seen)) return mismatch("5-cycle parts overlap");
    seen |= parts[i];
    if (!completely_joined(g, c, parts[i], parts[(i + 1) % 5])) return mismatch("consecutive parts not joined");
  }
  if (seen != whole) return mismatch("5-cycle parts do not make up the set");
  return {};
}

}  // namespace detail

/// Independent check of a cover: the sets, then the certificate, recomputed
/// from reachability primitives only.
inline VerifyResult verify_cover(const ColoredCocktail& g, const Cover& cover) {
  const bool diam2 = std::holds_alternative<Diam2Witness>(cover.certificate);
  if (VerifyResult r = verify_sets(g, cover.a, cover.color_a, cover.b, cover.color_b, CoverProperty::reach2); !r)
    return r;
  if (diam2)
    if (VerifyResult r = verify_sets(g, cover.a, cover.color_a, cover.b, cover.color_b, CoverProperty::diam2); !r)
      return r;

  const int n = g.n();
  const VertexSet all = g.vertices();
  auto in_range = [n](int v) { return v >= 0 && v < n; };
  using detail::mismatch;

  struct Visitor {
    const ColoredCocktail& g;
    const Cover& cover;
    VertexSet all;
    decltype(in_range) range;

    VerifyResult operator()(const WholeVertexSet& c) const {
      if (cover.color_a != c.color || cover.color_b != c.color) return mismatch("colors differ from certificate");
      if (cover.a != all || !cover.b.empty()) return mismatch("expected A = V and B empty");
      if (!critical_pairs(g, c.color).empty()) return mismatch("color has a critical pair");
      return {};
    }
    VerifyResult operator()(const TwoStars& c) const {
      if (!range(c.first_center) || !range(c.second_center)) return mismatch("center out of range");
      if (cover.color_a != c.color || cover.color_b != c.color) return mismatch("colors differ from certificate");
      if (cover.a != star(g, c.color, c.first_center) || cover.b != star(g, c.color, c.second_center))
        return mismatch("sets are not the stated stars");
      if (c.second_center != partner_of(c.first_center) ||
          dist_le2(g, flip(c.color), c.first_center, c.second_center))
        return mismatch("centers are not a critical non-edge");
      return {};
    }
    VerifyResult operator()(const LemmaStars& c) const {
      if (VerifyResult r = detail::check_witness(g, c.witness); !r) return r;
      if (!range(c.center_a) || !range(c.center_b)) return mismatch("center out of range");
      if (cover.color_a != c.color_a || cover.color_b != c.color_b) return mismatch("colors differ from certificate");
      if (cover.a != star(g, c.color_a, c.center_a) || cover.b != star(g, c.color_b, c.center_b))
        return mismatch("sets are not the stated stars");
      const LemmaWitness& w = c.witness;
      struct Expect {
        Color ca;
        int a;
        Color cb;
        int b;
      };
      Expect want{};
      switch (c.which) {
        case LemmaCase::i:
        case LemmaCase::ii: want = {Color::red, w.y_partner, Color::blue, w.y}; break;
        case LemmaCase::iii: want = {Color::blue, w.x_partner, Color::blue, w.y}; break;
        case LemmaCase::iv: want = {Color::blue, w.x_partner, Color::blue, w.x}; break;
        case LemmaCase::v: want = {Color::red, w.x_partner, Color::red, w.x}; break;
        case LemmaCase::vi: want = {Color::red, w.x_partner, Color::red, w.y_partner}; break;
      }
      if (want.ca != c.color_a || want.a != c.center_a || want.cb != c.color_b || want.b != c.center_b)
        return mismatch("star centers do not match the lemma case");
      return {};
    }
    VerifyResult operator()(const LemmaC5Plus& c) const {
      if (VerifyResult r = detail::check_witness(g, c.witness); !r) return r;
      if (cover.color_a != Color::blue || cover.color_b != Color::red) return mismatch("expected A blue and B red");
      const LemmaWitness& w = c.witness;
      if (c.blue_parts[0] != VertexSet::single(w.x) || c.blue_parts[1] != VertexSet::single(w.y) ||
          c.blue_parts[3] != VertexSet::single(w.x_partner) || c.red_parts[0] != VertexSet::single(w.x) ||
          c.red_parts[1] != VertexSet::single(w.y_partner) || c.red_parts[3] != VertexSet::single(w.x_partner))
        return mismatch("singleton parts do not match the witness");
      if (VerifyResult r = detail::check_c5plus(g, Color::blue, c.blue_parts, cover.a); !r) return r;
      return detail::check_c5plus(g, Color::red, c.red_parts, cover.b);
    }
    VerifyResult operator()(const CriticalComplement& c) const {
      VertexSet p;
      VertexSet q;
      for (const CriticalPair& pair : critical_pairs(g, Color::red))
        if (pair.is_edge) p |= VertexSet::of({pair.u, pair.v});
      for (const CriticalPair& pair : critical_pairs(g, Color::blue))
        if (pair.is_edge) q |= VertexSet::of({pair.u, pair.v});
      if (p != c.p || q != c.q) return mismatch("P or Q differs from the critical edges");
      if (p.intersects(q)) return mismatch("P and Q intersect");
      if (cover.color_a != Color::red || cover.color_b != Color::blue) return mismatch("expected A red and B blue");
      if (cover.a != all - p || cover.b != all - q) return mismatch("sets are not V - P and V - Q");
      return {};
    }
    VerifyResult operator()(const Diam2Witness& c) const {
      if (cover.a != c.a || cover.b != c.b) return mismatch("sets differ from the witness");
      return {};
    }
  };
  return std::visit(Visitor{g, cover, all, in_range}, cover.certificate);
}

}  // namespace cocktail

#endif  // COCKTAIL_COVER_HPP
