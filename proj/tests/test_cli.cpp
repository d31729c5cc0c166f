#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

namespace {

struct Outcome {
  int code = -1;
  std::string out;
};

// stdout only; stderr goes to out as well when `merge` is set.
Outcome run(const std::string& args, bool merge = false) {
  const std::string cmd = std::string(COCKTAIL_CLI) + " " + args + (merge ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  Outcome r;
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  for (std::size_t got; (got = fread(buf.data(), 1, buf.size(), pipe)) > 0;) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string golden(const std::string& name) { return std::string(COCKTAIL_GOLDEN_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string temp_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / ("cocktail_cli_" + std::to_string(::getpid()) + "_" + name);
  std::ofstream(path) << body;
  return path.string();
}

TEST(Cli, SolveSharpExample) {
  const Outcome r = run("solve " + golden("sharp8.graph") + " --certificate");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, slurp(golden("sharp8.solve")));
  EXPECT_NE(r.out.find("# branch: TwoStars"), std::string::npos);
}

TEST(Cli, SolveAllRedFromStdin) {
  const Outcome r = run("gen --all-red 4 | " + std::string(COCKTAIL_CLI) + " solve --verify");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, slurp(golden("allred4.solve")) + "# verified: ok\n");
}

TEST(Cli, SolveCompactInput) {
  const Outcome r = run("solve " + temp_file("c.graph", "4:0f\n"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, 13), "A 1: 0 1 2 3\n");
}

TEST(Cli, DuplicateEdgeIsAnInputError) {
  const Outcome r = run("solve " + temp_file("dup.graph", "4\n0 2 1\n0 2 1\n0 3 1\n1 2 1\n1 3 1\n"), true);
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("line 3, column 1: pair (0,2) listed twice"), std::string::npos) << r.out;
}

TEST(Cli, MalformedInputs) {
  for (const std::string body : {"5\n", "4\n0 2 1\n", "4\n0 2 3\n0 3 1\n1 2 1\n1 3 1\n", "x\n", ""}) {
    const Outcome r = run("solve " + temp_file("bad.graph", body), true);
    EXPECT_EQ(r.code, 2) << body;
    EXPECT_NE(r.out.find("error: "), std::string::npos) << body;
  }
  EXPECT_EQ(run("solve /nonexistent/graph").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("").code, 2);
}

TEST(Cli, GenRoundTrips) {
  for (const std::string mode : {"--sharp 8", "--random 12 5", "--all-red 6"}) {
    const Outcome text = run("gen " + mode);
    const Outcome compact = run("gen " + mode + " --compact");
    ASSERT_EQ(text.code, 0);
    ASSERT_EQ(compact.code, 0);
    const Outcome back = run("gen " + mode + " --compact | " + std::string(COCKTAIL_CLI) + " solve");
    const Outcome direct = run("gen " + mode + " | " + std::string(COCKTAIL_CLI) + " solve");
    EXPECT_EQ(back.out, direct.out) << mode;
  }
  EXPECT_EQ(run("gen --sharp 8").out, slurp(golden("sharp8.graph")));
  EXPECT_EQ(run("gen --random 10 7 --compact").out, run("gen --random 10 7 --compact").out);
  EXPECT_NE(run("gen --random 10 7 --compact").out, run("gen --random 10 8 --compact").out);
  EXPECT_EQ(run("gen --sharp 7").code, 2);
  EXPECT_EQ(run("gen").code, 2);
}

TEST(Cli, MaxReach) {
  const Outcome r = run("maxreach " + golden("sharp8.graph"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, slurp(golden("sharp8.maxreach")));
  const Outcome o = run("gen --random 10 7 | " + std::string(COCKTAIL_CLI) + " maxreach --oracle");
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("agree"), std::string::npos);
  EXPECT_EQ(o.out.find("DISAGREE"), std::string::npos);
  EXPECT_EQ(run("maxreach " + golden("sharp8.graph") + " --color 2").out, "color 2: size 4 witness 0 2 4 6\n");
  EXPECT_EQ(run("maxreach " + golden("sharp8.graph") + " --color 3").code, 2);
}

TEST(Cli, VerifyValidCover) {
  const std::string cover = temp_file("ok.cover", slurp(golden("sharp8.solve")));
  const Outcome r = run("verify " + golden("sharp8.graph") + " " + cover);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "valid 2-reachable cover\n");
  EXPECT_EQ(run("verify " + golden("sharp8.graph") + " " + cover + " --diam2").code, 0);
}

TEST(Cli, VerifyDroppedVertex) {
  const std::string cover = temp_file("drop.cover", "A 2: 0 3 5\nB 2: 1 2 4 6\n");
  const Outcome r = run("verify " + golden("sharp8.graph") + " " + cover);
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("not a cover"), std::string::npos) << r.out;
}

TEST(Cli, VerifyNotReachable) {
  const std::string cover = temp_file("nr.cover", "A 1: 0 2 4 6 1\nB 2: 3 5 7\n");
  const Outcome r = run("verify " + golden("sharp8.graph") + " " + cover);
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out.rfind("invalid: ", 0), 0U);
}

TEST(Cli, VerifyDiameterTwoOnCriticalComplement) {
  const std::string graph = golden("cc_nondiam2.graph");
  const std::string cover = golden("cc_nondiam2.cover");
  EXPECT_NE(slurp(cover).find("# branch: CriticalComplement"), std::string::npos);
  EXPECT_EQ(run("verify " + graph + " " + cover).code, 0);
  const Outcome r = run("verify " + graph + " " + cover + " --diam2");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("not diameter 2"), std::string::npos) << r.out;
}

TEST(Cli, VerifyMalformedCover) {
  EXPECT_EQ(run("verify " + golden("sharp8.graph") + " " + temp_file("m.cover", "A 3: 0\nB 1: 1\n")).code, 2);
  EXPECT_EQ(run("verify " + golden("sharp8.graph") + " " + temp_file("m2.cover", "A 1: 0 9\nB 1: 1\n")).code, 2);
}

TEST(Cli, ScanMachineReports) {
  EXPECT_EQ(run("scan --n 4 --machine").out, slurp(golden("scan4.machine")));
  const Outcome r = run("scan --n 6 --check both --machine");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, slurp(golden("scan6_both.machine")));
  EXPECT_EQ(run("scan --n 6 --check both --machine --workers 4").out, r.out);
}

TEST(Cli, ScanRandomMode) {
  const Outcome r = run("scan --n 10 --mode random:100000:seed1 --machine");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("colorings_scanned=100000\n"), std::string::npos);
  EXPECT_NE(r.out.find("failures_total=0\n"), std::string::npos);
  const Outcome text = run("scan --n 8 --mode random:500:7");
  EXPECT_EQ(text.code, 0);
  EXPECT_NE(text.out.find("failures: 0"), std::string::npos);
}

TEST(Cli, ScanWritesFiles) {
  const auto dir = std::filesystem::temp_directory_path();
  const std::string out = (dir / ("cocktail_scan_" + std::to_string(::getpid()) + ".txt")).string();
  const std::string fail = out + ".fail";
  const Outcome r = run("scan --n 4 --out " + out + " --failures " + fail);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(slurp(out), slurp(golden("scan4.machine")));
  EXPECT_EQ(slurp(fail), "");
  std::filesystem::remove(out);
  std::filesystem::remove(fail);
}

TEST(Cli, ScanRejectsBadOptions) {
  EXPECT_EQ(run("scan --n 10").code, 2);
  EXPECT_EQ(run("scan --n 5").code, 2);
  EXPECT_EQ(run("scan --n 6 --mode random:x").code, 2);
  EXPECT_EQ(run("scan --n 6 --mode sideways").code, 2);
  EXPECT_EQ(run("scan --n 6 --check everything").code, 2);
  EXPECT_EQ(run("scan --n 12 --mode random:10:1 --check diam2").code, 2);
  EXPECT_EQ(run("scan --n 6 --workers 0").code, 2);
}

TEST(Cli, Census) {
  const Outcome r = run("census --max-n 6");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, slurp(golden("census6.txt")));
  EXPECT_EQ(run("census --max-n 10").code, 2);
}

TEST(Cli, Help) {
  const Outcome r = run("--help");
  EXPECT_EQ(r.code, 0);
  for (const char* sub : {"solve", "verify", "gen", "maxreach", "scan", "census"})
    EXPECT_NE(r.out.find(sub), std::string::npos) << sub;
}

}  // namespace
