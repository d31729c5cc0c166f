#ifndef COCKTAIL_LAB_HPP
#define COCKTAIL_LAB_HPP

// Search for covers by two monochromatic diameter-2 sets, and whole-family
// scans that run the solver and the diameter-2 search over every coloring
// of an order (or a seeded random sample of colorings).

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "cocktail/cover.hpp"
#include "cocktail/format.hpp"
#include "cocktail/generate.hpp"
#include "cocktail/graph.hpp"
#include "cocktail/reachability.hpp"
#include "cocktail/symmetry.hpp"

namespace cocktail {

inline constexpr int kDefaultDiam2Bound = 10;
inline constexpr int kMaxDiam2Bound = 20;

namespace detail {

inline std::optional<Cover> diam2_cover(VertexSet a, Color ca, VertexSet b, Color cb) {
  return Cover{a, ca, b, cb, Diam2Witness{a, b}};
}

/// Complete search: for each color, flag every diameter-2 subset and close
/// the flags upward (up[m] = some diameter-2 superset of m). A cover exists
/// iff some diameter-2 A in color ca has up_cb[V - A].
inline std::optional<Cover> complete_diam2_search(const ColoredCocktail& g) {
  const int n = g.n();
  const std::size_t subsets = std::size_t{1} << n;
  constexpr std::uint64_t kNone = ~std::uint64_t{0};
  std::array<std::vector<std::uint64_t>, 2> up;
  for (Color c : kColors) {
    std::vector<std::uint64_t>& table = up[static_cast<std::size_t>(index_of(c))];
    table.assign(subsets, kNone);
    for (std::size_t m = subsets; m-- > 0;) {
      if (is_diam2_subset(g, c, VertexSet(m))) {
        table[m] = m;
        continue;
      }
      for (int v = 0; v < n; ++v) {
        const std::size_t bigger = m | (std::size_t{1} << v);
        if (bigger != m && table[bigger] != kNone) {
          table[m] = table[bigger];
          break;
        }
      }
    }
  }
  const std::uint64_t all = g.vertices().bits();
  for (Color ca : kColors) {
    const std::vector<std::uint64_t>& mine = up[static_cast<std::size_t>(index_of(ca))];
    for (std::size_t a = subsets; a-- > 0;) {
      if (mine[a] != a) continue;
      for (Color cb : kColors) {
        const std::uint64_t b = up[static_cast<std::size_t>(index_of(cb))][all & ~a];
        if (b != kNone) return diam2_cover(VertexSet(a), ca, VertexSet(b), cb);
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// A cover of V by two monochromatic diameter-2 sets, or nullopt if none
/// exists. Tries the solver's cover first, then every pair of stars, then a
/// complete search over all pairs of diameter-2 sets (so overlapping sets
/// are found too). `hint` may pass an already computed solve(g).
inline std::optional<Cover> exists_diam2_cover(const ColoredCocktail& g, const Cover* hint = nullptr,
                                               int bound = kDefaultDiam2Bound) {
  if (bound > kMaxDiam2Bound) throw InputError("diameter-2 search bound cannot exceed " + std::to_string(kMaxDiam2Bound));
  if (g.n() > bound)
    throw InputError("diameter-2 search supports n <= " + std::to_string(bound) + ", got " + std::to_string(g.n()));

  const Cover solved = hint ? *hint : solve(g);
  if (verify_sets(g, solved.a, solved.color_a, solved.b, solved.color_b, CoverProperty::diam2))
    return detail::diam2_cover(solved.a, solved.color_a, solved.b, solved.color_b);

  const VertexSet all = g.vertices();
  for (Color ca : kColors)
    for (int u = 0; u < g.n(); ++u)
      for (Color cb : kColors)
        for (int v = 0; v < g.n(); ++v) {
          const VertexSet a = star(g, ca, u);
          const VertexSet b = star(g, cb, v);
          if ((a | b) == all && is_diam2_subset(g, ca, a) && is_diam2_subset(g, cb, b))
            return detail::diam2_cover(a, ca, b, cb);
        }

  return detail::complete_diam2_search(g);
}

enum class ScanMode : std::uint8_t { exhaustive, random };
enum class ScanCheck : std::uint8_t { reach, diam2, both };

inline const char* to_string(ScanMode m) { return m == ScanMode::exhaustive ? "exhaustive" : "random"; }
inline const char* to_string(ScanCheck c) {
  return c == ScanCheck::reach ? "reach" : c == ScanCheck::diam2 ? "diam2" : "both";
}

struct ScanOptions {
  int n = 4;
  ScanMode mode = ScanMode::exhaustive;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  ScanCheck check = ScanCheck::reach;
  bool prune = false;
  int workers = 1;
  /// Exhaustive scans stop at n = 8 unless this is set (hard limit n = 10).
  bool allow_large = false;
  int diam2_bound = kDefaultDiam2Bound;
};

inline constexpr int kDefaultExhaustiveBound = 8;
inline constexpr std::uint64_t kScanChunk = std::uint64_t{1} << 14;
inline constexpr std::size_t kMaxListedFailures = 1000;

struct ScanFailure {
  std::uint64_t index = 0;
  std::string kind;      // reach, corollary, lemma_assertion, noncomplement_diam2, diam2
  std::string coloring;  // compact form
  std::string detail;

  bool operator==(const ScanFailure&) const = default;
};

/// Aggregate of one scan. With symmetry pruning every count is weighted by
/// the orbit size of the representative that was solved, so the counts
/// still describe all colorings; failures list representatives only.
struct ScanReport {
  ScanOptions options;
  std::uint64_t colorings_scanned = 0;
  std::uint64_t reduced_classes = 0;
  std::array<std::uint64_t, kSolveBranchCount> branch_counts{};
  std::array<std::optional<std::uint64_t>, kSolveBranchCount> first_index{};
  std::array<std::string, kSolveBranchCount> first_coloring{};
  LemmaAudit audit;
  std::uint64_t lemma_assertion_failures = 0;
  std::uint64_t reach_checked = 0;
  std::uint64_t reach_failures = 0;
  std::uint64_t corollary_failures = 0;
  std::uint64_t noncomplement_diam2_violations = 0;
  std::uint64_t diam2_checked = 0;
  std::uint64_t diam2_cover_found = 0;
  std::uint64_t diam2_failures = 0;
  std::uint64_t failures_total = 0;
  std::vector<ScanFailure> failures;
  double wall_seconds = 0;

  bool has_failures() const { return failures_total != 0; }
  std::vector<Branch> never_fired() const {
    std::vector<Branch> out;
    for (int b = 0; b < kSolveBranchCount; ++b)
      if (branch_counts[static_cast<std::size_t>(b)] == 0) out.push_back(static_cast<Branch>(b));
    return out;
  }
};

inline void validate(const ScanOptions& o) {
  check_order(o.n);
  if (o.workers < 1 || o.workers > 256) throw InputError("workers must be in 1..256");
  if (o.mode == ScanMode::exhaustive) {
    const int limit = o.allow_large ? kMaxEnumerableN : kDefaultExhaustiveBound;
    if (o.n > limit) throw InputError("exhaustive scans support n <= " + std::to_string(limit) + ", got " + std::to_string(o.n));
  } else if (o.prune) {
    throw InputError("symmetry pruning applies to exhaustive scans only");
  }
  if (o.prune && o.n > kMaxSymmetryN)
    throw InputError("symmetry pruning supports n <= " + std::to_string(kMaxSymmetryN));
  if (o.check != ScanCheck::reach) {
    if (o.diam2_bound > kMaxDiam2Bound)
      throw InputError("diameter-2 bound cannot exceed " + std::to_string(kMaxDiam2Bound));
    if (o.n > o.diam2_bound)
      throw InputError("diameter-2 checks support n <= " + std::to_string(o.diam2_bound) + ", got " + std::to_string(o.n));
  }
}

namespace detail {

inline void record_failure(ScanReport& r, std::uint64_t index, const char* kind, const ColoredCocktail& g,
                           std::string detail_text) {
  ++r.failures_total;
  if (r.failures.size() < kMaxListedFailures) r.failures.push_back({index, kind, to_compact(g), std::move(detail_text)});
}

inline void process(ScanReport& r, const ScanOptions& o, const ColoredCocktail& g, std::uint64_t index,
                    std::uint64_t weight) {
  r.colorings_scanned += weight;
  ++r.reduced_classes;
  std::optional<Cover> cover;
  try {
    cover = solve(g, &r.audit);
  } catch (const InternalInconsistency& e) {
    r.lemma_assertion_failures += weight;
    record_failure(r, index, "lemma_assertion", g, e.what());
    return;
  }
  const auto b = static_cast<std::size_t>(branch_of(cover->certificate));
  r.branch_counts[b] += weight;
  if (!r.first_index[b]) {
    r.first_index[b] = index;
    r.first_coloring[b] = to_compact(g);
  }

  if (o.check != ScanCheck::diam2) {
    r.reach_checked += weight;
    if (const VerifyResult v = verify_cover(g, *cover); !v) {
      r.reach_failures += weight;
      record_failure(r, index, "reach", g, std::string(reason_code(v.reason)) + " " + v.detail);
    }
    const int need = (g.n() + 1) / 2;
    if (std::max(cover->a.size(), cover->b.size()) < need) {
      r.corollary_failures += weight;
      record_failure(r, index, "corollary", g, "largest set below n/2");
    }
    if (!std::holds_alternative<CriticalComplement>(cover->certificate) &&
        !verify_sets(g, cover->a, cover->color_a, cover->b, cover->color_b, CoverProperty::diam2)) {
      r.noncomplement_diam2_violations += weight;
      record_failure(r, index, "noncomplement_diam2", g, describe(cover->certificate));
    }
  }

  if (o.check != ScanCheck::reach) {
    r.diam2_checked += weight;
    const std::optional<Cover> found = exists_diam2_cover(g, &*cover, o.diam2_bound);
    if (found && verify_cover(g, *found)) {
      r.diam2_cover_found += weight;
    } else {
      r.diam2_failures += weight;
      record_failure(r, index, "diam2", g, found ? "search returned an invalid cover" : "no diameter-2 cover exists");
    }
  }
}

inline void merge_into(ScanReport& total, ScanReport&& part) {
  total.colorings_scanned += part.colorings_scanned;
  total.reduced_classes += part.reduced_classes;
  for (std::size_t b = 0; b < total.branch_counts.size(); ++b) {
    total.branch_counts[b] += part.branch_counts[b];
    if (!total.first_index[b] && part.first_index[b]) {
      total.first_index[b] = part.first_index[b];
      total.first_coloring[b] = std::move(part.first_coloring[b]);
    }
  }
  total.audit += part.audit;
  total.lemma_assertion_failures += part.lemma_assertion_failures;
  total.reach_checked += part.reach_checked;
  total.reach_failures += part.reach_failures;
  total.corollary_failures += part.corollary_failures;
  total.noncomplement_diam2_violations += part.noncomplement_diam2_violations;
  total.diam2_checked += part.diam2_checked;
  total.diam2_cover_found += part.diam2_cover_found;
  total.diam2_failures += part.diam2_failures;
  total.failures_total += part.failures_total;
  for (ScanFailure& f : part.failures)
    if (total.failures.size() < kMaxListedFailures) total.failures.push_back(std::move(f));
}

}  // namespace detail

/// Runs the scan. Work is cut into fixed chunks of the coloring counter (or
/// sample index); workers claim chunks and the partial reports are merged in
/// chunk order, so the report does not depend on the worker count.
inline ScanReport scan(const ScanOptions& options) {
  validate(options);
  const auto started = std::chrono::steady_clock::now();
  const int n = options.n;
  const std::uint64_t total =
      options.mode == ScanMode::exhaustive ? std::uint64_t{1} << edge_count(n) : options.samples;
  const std::uint64_t chunks = (total + kScanChunk - 1) / kScanChunk;
  const SymmetryGroup* group = options.prune ? &symmetry_group(n) : nullptr;

  std::vector<ScanReport> parts(static_cast<std::size_t>(chunks));
  std::atomic<std::uint64_t> next{0};
  auto work = [&] {
    for (std::uint64_t c = next++; c < chunks; c = next++) {
      ScanReport& part = parts[static_cast<std::size_t>(c)];
      const std::uint64_t first = c * kScanChunk;
      const std::uint64_t last = std::min(total, first + kScanChunk);
      for (std::uint64_t i = first; i < last; ++i) {
        if (options.mode == ScanMode::random) {
          detail::process(part, options, random_coloring(n, sample_seed(options.seed, i)), i, 1);
          continue;
        }
        std::uint64_t weight = 1;
        if (group && !group->is_canonical(i, weight)) continue;
        detail::process(part, options, ColoredCocktail::from_edge_code(n, i), i, weight);
      }
    }
  };

  const auto threads = static_cast<std::size_t>(std::min<std::uint64_t>(
      static_cast<std::uint64_t>(options.workers), std::max<std::uint64_t>(chunks, 1)));
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work);
  }

  ScanReport report;
  report.options = options;
  for (ScanReport& part : parts) detail::merge_into(report, std::move(part));
  if (!options.prune) report.reduced_classes = report.colorings_scanned;
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

/// Line-oriented key=value form. Stable key names; wall time is left out so
/// the text is reproducible (it appears in to_text()).
inline std::string to_machine(const ScanReport& r) {
  const ScanOptions& o = r.options;
  std::string out;
  auto put = [&out](const std::string& key, const std::string& value) { out += key + "=" + value + "\n"; };
  put("format", "cocktail-scan-report/1");
  put("n", std::to_string(o.n));
  put("mode", to_string(o.mode));
  if (o.mode == ScanMode::random) {
    put("samples", std::to_string(o.samples));
    put("seed", std::to_string(o.seed));
  }
  put("check", to_string(o.check));
  put("prune", o.prune ? "on" : "off");
  put("colorings_scanned", std::to_string(r.colorings_scanned));
  put("reduced_classes", std::to_string(r.reduced_classes));
  for (int b = 0; b < kSolveBranchCount; ++b)
    put(std::string("branch.") + to_string(static_cast<Branch>(b)), std::to_string(r.branch_counts[static_cast<std::size_t>(b)]));
  for (int b = 0; b < kSolveBranchCount; ++b) {
    const auto i = static_cast<std::size_t>(b);
    put(std::string("first.") + to_string(static_cast<Branch>(b)),
        r.first_index[i] ? std::to_string(*r.first_index[i]) + " " + r.first_coloring[i] : "none");
  }
  std::string never;
  for (Branch b : r.never_fired()) never += (never.empty() ? "" : ",") + std::string(to_string(b));
  put("never_fired", never.empty() ? "none" : never);
  put("lemma_invocations", std::to_string(r.audit.invocations));
  put("lemma_claim_checks", std::to_string(r.audit.claim_checks));
  put("lemma_partition_checks", std::to_string(r.audit.partition_checks));
  put("lemma_red_neighborhood_checks", std::to_string(r.audit.red_neighborhood_checks));
  put("lemma_x_inside_checks", std::to_string(r.audit.x_inside_checks));
  put("lemma_nondegenerate_checks", std::to_string(r.audit.nondegenerate_checks));
  put("lemma_assertion_failures", std::to_string(r.lemma_assertion_failures));
  put("reach_checked", std::to_string(r.reach_checked));
  put("reach_failures", std::to_string(r.reach_failures));
  put("corollary_failures", std::to_string(r.corollary_failures));
  put("noncomplement_diam2_violations", std::to_string(r.noncomplement_diam2_violations));
  put("diam2_checked", std::to_string(r.diam2_checked));
  put("diam2_cover_found", std::to_string(r.diam2_cover_found));
  put("diam2_failures", std::to_string(r.diam2_failures));
  put("failures_total", std::to_string(r.failures_total));
  put("failures_listed", std::to_string(r.failures.size()));
  for (std::size_t i = 0; i < r.failures.size(); ++i) {
    const ScanFailure& f = r.failures[i];
    put("failure." + std::to_string(i), f.kind + " " + std::to_string(f.index) + " " + f.coloring + " " + f.detail);
  }
  return out;
}

/// One compact coloring per line, for every listed failure.
inline std::string failure_lines(const ScanReport& r) {
  std::string out;
  for (const ScanFailure& f : r.failures) out += f.coloring + "\n";
  return out;
}

inline std::string to_text(const ScanReport& r) {
  const ScanOptions& o = r.options;
  std::string out = "scan n=" + std::to_string(o.n) + " mode=" + to_string(o.mode);
  if (o.mode == ScanMode::random) out += " samples=" + std::to_string(o.samples) + " seed=" + std::to_string(o.seed);
  out += std::string(" check=") + to_string(o.check) + " prune=" + (o.prune ? "on" : "off") + "\n";
  out += "  colorings scanned: " + std::to_string(r.colorings_scanned) + "\n";
  if (o.prune) out += "  symmetry classes solved: " + std::to_string(r.reduced_classes) + "\n";
  out += "  branch census:\n";
  for (int b = 0; b < kSolveBranchCount; ++b) {
    const auto i = static_cast<std::size_t>(b);
    std::string name = to_string(static_cast<Branch>(b));
    name.resize(20, ' ');
    out += "    " + name + std::to_string(r.branch_counts[i]);
    if (r.first_index[i]) out += "  (first: #" + std::to_string(*r.first_index[i]) + " " + r.first_coloring[i] + ")";
    out += "\n";
  }
  std::string never;
  for (Branch b : r.never_fired()) never += (never.empty() ? "" : ", ") + std::string(to_string(b));
  out += "  never fired: " + (never.empty() ? std::string("none") : never) + "\n";
  if (o.check != ScanCheck::diam2) {
    out += "  2-reachable covers verified: " + std::to_string(r.reach_checked - r.reach_failures) + "/" +
           std::to_string(r.reach_checked) + "\n";
    out += "  lemma invocations: " + std::to_string(r.audit.invocations) +
           ", assertion failures: " + std::to_string(r.lemma_assertion_failures) + "\n";
    out += "  corollary failures: " + std::to_string(r.corollary_failures) + "\n";
  }
  if (o.check != ScanCheck::reach)
    out += "  diameter-2 covers found: " + std::to_string(r.diam2_cover_found) + "/" + std::to_string(r.diam2_checked) +
           "\n";
  out += "  failures: " + std::to_string(r.failures_total) + "\n";
  for (const ScanFailure& f : r.failures)
    out += "    " + f.kind + " #" + std::to_string(f.index) + " " + f.coloring + " " + f.detail + "\n";
  char seconds[32];
  std::snprintf(seconds, sizeof seconds, "%.3f", r.wall_seconds);
  out += std::string("  wall time: ") + seconds + " s\n";
  return out;
}

/// Smallest order (and first coloring there, in scan order) at which each
/// solver branch fires, over exhaustive scans of n = 2, 4, ..., max_n.
struct BranchCensus {
  int max_n = 0;
  std::array<std::optional<int>, kSolveBranchCount> smallest_n{};
  std::array<std::string, kSolveBranchCount> example{};
};

inline BranchCensus branch_census(int max_n, int workers = 1) {
  BranchCensus census;
  census.max_n = max_n;
  for (int n = 2; n <= max_n; n += 2) {
    ScanOptions o;
    o.n = n;
    o.workers = workers;
    const ScanReport r = scan(o);
    for (std::size_t b = 0; b < census.smallest_n.size(); ++b)
      if (!census.smallest_n[b] && r.first_index[b]) {
        census.smallest_n[b] = n;
        census.example[b] = r.first_coloring[b];
      }
  }
  return census;
}

/// Fixture format: one `Branch n n:HEX` line per branch, `Branch never` when
/// it did not fire.
inline std::string to_text(const BranchCensus& c) {
  std::string out = "# smallest n <= " + std::to_string(c.max_n) + " at which each solver branch fires\n";
  for (int b = 0; b < kSolveBranchCount; ++b) {
    const auto i = static_cast<std::size_t>(b);
    out += to_string(static_cast<Branch>(b));
    out += c.smallest_n[i] ? " " + std::to_string(*c.smallest_n[i]) + " " + c.example[i] : std::string(" never");
    out += "\n";
  }
  return out;
}

}  // namespace cocktail

#endif  // COCKTAIL_LAB_HPP
