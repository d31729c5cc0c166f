// cocktail: command-line front end.
//
//   cocktail solve    [FILE] [--verify] [--certificate]
//   cocktail verify   GRAPH COVER [--diam2]
//   cocktail gen      (--sharp N | --random N SEED | --all-red N) [--compact]
//   cocktail maxreach [FILE] [--color 1|2|both] [--oracle]
//   cocktail scan     --n N [--mode exhaustive|random:SAMPLES:SEED] [--check reach|diam2|both]
//                     [--workers K] [--prune] [--out FILE] [--failures FILE] [--machine]
//   cocktail census   [--max-n N] [--workers K]
//
// Exit codes: 0 success, 1 a mathematical negative finding (invalid cover,
// failed scan, oracle disagreement), 2 usage or input error. FILE defaults
// to standard input; "-" also means standard input.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "cocktail/cocktail.hpp"
#include "cocktail/cover_io.hpp"

namespace {

using namespace cocktail;

constexpr int kOk = 0;
constexpr int kFinding = 1;
constexpr int kInputError = 2;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

std::string vertex_list(VertexSet s) {
  std::string out;
  for (int v : s) out += (out.empty() ? "" : " ") + std::to_string(v);
  return out;
}

/// Seeds are decimal integers; anything else is hashed with 64-bit FNV-1a.
std::uint64_t parse_seed(const std::string& text) {
  bool numeric = !text.empty() && text.size() <= 19;
  for (char c : text) numeric = numeric && c >= '0' && c <= '9';
  if (numeric) return std::stoull(text);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

int run_solve(const std::string& input, bool verify, bool certificate) {
  const ColoredCocktail g = parse(read_input(input));
  Cover cover;
  try {
    cover = solve(g);
  } catch (const InternalInconsistency& e) {
    std::cerr << "fatal: " << e.what() << "\n";
    return kFinding;
  }
  std::cout << format_cover(cover);
  if (certificate) {
    std::cout << "# branch: " << to_string(branch_of(cover.certificate)) << "\n";
    std::cout << "# certificate: " << describe(cover.certificate) << "\n";
  }
  if (verify) {
    const VerifyResult r = verify_cover(g, cover);
    if (!r) {
      std::cerr << "fatal: verification failed: " << to_string(r.reason) << " " << r.detail << "\n"
                << "coloring: " << to_compact(g) << "\n";
      return kFinding;
    }
    std::cout << "# verified: ok\n";
  }
  return kOk;
}

int run_verify(const std::string& graph_path, const std::string& cover_path, bool diam2) {
  const ColoredCocktail g = parse(read_input(graph_path));
  const CoverSets sets = parse_cover(read_input(cover_path), g.n());
  const VerifyResult r = verify_sets(g, sets.a, sets.color_a, sets.b, sets.color_b,
                                     diam2 ? CoverProperty::diam2 : CoverProperty::reach2);
  if (!r) {
    std::cout << "invalid: " << to_string(r.reason) << (r.detail.empty() ? "" : " (" + r.detail + ")") << "\n";
    return kFinding;
  }
  std::cout << "valid " << (diam2 ? "diameter-2" : "2-reachable") << " cover\n";
  return kOk;
}

int run_gen(int sharp, const std::vector<std::string>& random, int red, bool compact) {
  const int modes = (sharp > 0) + !random.empty() + (red > 0);
  if (modes != 1) throw InputError("gen needs exactly one of --sharp, --random, --all-red");
  std::optional<ColoredCocktail> g;
  if (sharp > 0) g = build_sharp_example(sharp);
  if (red > 0) g = all_red(red);
  if (!random.empty()) {
    long long n = 0;
    if (!detail::parse_int(random[0], n) || n > kMaxVertices) throw InputError("--random needs N SEED");
    g = random_coloring(static_cast<int>(n), parse_seed(random[1]));
  }
  std::cout << (compact ? to_compact(*g) + "\n" : serialize(*g));
  return kOk;
}

int run_maxreach(const std::string& input, const std::string& color, bool oracle) {
  const ColoredCocktail g = parse(read_input(input));
  std::vector<Color> colors;
  if (color == "1" || color == "both") colors.push_back(Color::red);
  if (color == "2" || color == "both") colors.push_back(Color::blue);
  if (colors.empty()) throw InputError("--color must be 1, 2 or both");
  if (oracle && g.n() > kBruteForceBound)
    throw InputError("--oracle supports n <= " + std::to_string(kBruteForceBound));
  int status = kOk;
  for (Color c : colors) {
    const MaxReach best = max_2reachable(g, c);
    std::cout << "color " << to_int(c) << ": size " << best.size << " witness " << vertex_list(best.witness) << "\n";
    if (oracle) {
      const int brute = brute_max_2reachable(g, c);
      std::cout << "color " << to_int(c) << ": oracle " << brute << (brute == best.size ? " agree" : " DISAGREE")
                << "\n";
      if (brute != best.size) status = kFinding;
    }
  }
  return status;
}

ScanOptions scan_options(int n, const std::string& mode, const std::string& check, int workers, bool prune,
                         bool allow_large, int diam2_bound) {
  ScanOptions o;
  o.n = n;
  o.workers = workers;
  o.prune = prune;
  o.allow_large = allow_large;
  o.diam2_bound = diam2_bound;
  if (mode == "exhaustive") {
    o.mode = ScanMode::exhaustive;
  } else if (mode.rfind("random:", 0) == 0) {
    o.mode = ScanMode::random;
    const std::string rest = mode.substr(7);
    const std::size_t colon = rest.find(':');
    long long samples = 0;
    if (colon == std::string::npos || !detail::parse_int(rest.substr(0, colon), samples))
      throw InputError("--mode random needs random:SAMPLES:SEED");
    o.samples = static_cast<std::uint64_t>(samples);
    o.seed = parse_seed(rest.substr(colon + 1));
  } else {
    throw InputError("--mode must be exhaustive or random:SAMPLES:SEED");
  }
  if (check == "reach") o.check = ScanCheck::reach;
  else if (check == "diam2") o.check = ScanCheck::diam2;
  else if (check == "both") o.check = ScanCheck::both;
  else throw InputError("--check must be reach, diam2 or both");
  return o;
}

int run_scan(const ScanOptions& options, const std::string& out, const std::string& failures, bool machine) {
  const ScanReport report = scan(options);
  std::cout << (machine ? to_machine(report) : to_text(report));
  if (!out.empty()) write_file(out, to_machine(report));
  if (!failures.empty()) write_file(failures, failure_lines(report));
  if (report.has_failures()) {
    std::cerr << "scan recorded " << report.failures_total << " failure(s):\n" << failure_lines(report);
    return kFinding;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Covers of 2-colored cocktail party graphs by monochromatic 2-reachable sets"};
  app.require_subcommand(1);

  std::string input;
  bool verify = false;
  bool certificate = false;
  auto* solve_cmd = app.add_subcommand("solve", "cover V by two monochromatic 2-reachable sets");
  solve_cmd->add_option("input", input, "coloring file (default: stdin)");
  solve_cmd->add_flag("--verify", verify, "re-check the cover with the independent verifier");
  solve_cmd->add_flag("--certificate", certificate, "print the proof branch and witnesses");

  std::string graph_path;
  std::string cover_path;
  bool diam2 = false;
  auto* verify_cmd = app.add_subcommand("verify", "check a cover file against a coloring");
  verify_cmd->add_option("graph", graph_path, "coloring file")->required();
  verify_cmd->add_option("cover", cover_path, "cover file")->required();
  verify_cmd->add_flag("--diam2", diam2, "require diameter-2 sets instead of 2-reachable ones");

  int sharp = 0;
  int red = 0;
  std::vector<std::string> random;
  bool compact = false;
  auto* gen_cmd = app.add_subcommand("gen", "emit a coloring");
  gen_cmd->add_option("--sharp", sharp, "extremal coloring on N vertices");
  gen_cmd->add_option("--random", random, "uniform random coloring: N SEED")->expected(2);
  gen_cmd->add_option("--all-red", red, "all edges red on N vertices");
  gen_cmd->add_flag("--compact", compact, "emit the n:HEX form");

  std::string color = "both";
  bool oracle = false;
  auto* max_cmd = app.add_subcommand("maxreach", "largest monochromatic 2-reachable set");
  max_cmd->add_option("input", input, "coloring file (default: stdin)");
  max_cmd->add_option("--color", color, "1, 2 or both");
  max_cmd->add_flag("--oracle", oracle, "cross-check with brute force (n <= 16)");

  int n = 0;
  std::string mode = "exhaustive";
  std::string check = "reach";
  int workers = 1;
  bool prune = false;
  bool allow_large = false;
  int diam2_bound = kDefaultDiam2Bound;
  std::string out;
  std::string failures;
  bool machine = false;
  auto* scan_cmd = app.add_subcommand("scan", "run the solver or the diameter-2 search over many colorings");
  scan_cmd->add_option("--n", n, "vertex count")->required();
  scan_cmd->add_option("--mode", mode, "exhaustive or random:SAMPLES:SEED");
  scan_cmd->add_option("--check", check, "reach, diam2 or both");
  scan_cmd->add_option("--workers", workers, "worker threads");
  scan_cmd->add_flag("--prune", prune, "solve one coloring per symmetry class (exhaustive, n <= 8)");
  scan_cmd->add_flag("--allow-large", allow_large, "allow exhaustive scans up to n = 10");
  scan_cmd->add_option("--diam2-bound", diam2_bound, "largest n for the diameter-2 search");
  scan_cmd->add_option("--out", out, "write the key=value report here");
  scan_cmd->add_option("--failures", failures, "write failing colorings (n:HEX, one per line) here");
  scan_cmd->add_flag("--machine", machine, "print the key=value report instead of the text summary");

  int max_n = 8;
  auto* census_cmd = app.add_subcommand("census", "smallest n at which each solver branch fires");
  census_cmd->add_option("--max-n", max_n, "largest order to scan exhaustively (<= 8)");
  census_cmd->add_option("--workers", workers, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*solve_cmd) return run_solve(input, verify, certificate);
    if (*verify_cmd) return run_verify(graph_path, cover_path, diam2);
    if (*gen_cmd) return run_gen(sharp, random, red, compact);
    if (*max_cmd) return run_maxreach(input, color, oracle);
    if (*scan_cmd)
      return run_scan(scan_options(n, mode, check, workers, prune, allow_large, diam2_bound), out, failures, machine);
    if (*census_cmd) {
      if (max_n > kDefaultExhaustiveBound) throw InputError("--max-n must be <= 8");
      std::cout << to_text(branch_census(max_n, workers));
      return kOk;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
