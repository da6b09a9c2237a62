// End-to-end tests driving the built command line binary. The path to the
// binary comes from the WOFC_CLI environment variable (set by ctest).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

std::string cli_path() {
  if (const char* env = std::getenv("WOFC_CLI")) return env;
  std::error_code ec;
  const auto exe = std::filesystem::read_symlink("/proc/self/exe", ec);
  if (!ec) {
    const auto candidate = exe.parent_path().parent_path() / "tools" / "wofc";
    if (std::filesystem::exists(candidate)) return candidate.string();
  }
  return "../tools/wofc";
}

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = cli_path() + " " + args + " 2>/dev/null";
  CliResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) result.out.append(buf, n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string write_temp(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("wofc_cli_test_" + name);
  std::ofstream f(path);
  f << content;
  return path.string();
}

const char* kTreeFile = "x1 x2 x3\nx1 x3 x4\nx3 x4 x5\nx3 x5 x6\n";
const char* kTriangleFile = "x y\ny z\nx z\n";

}  // namespace

TEST_CASE("betti output is byte-stable and matches the golden diagram") {
  const std::string path = write_temp("tree.txt", kTreeFile);
  const std::string expected =
      "multigraded Betti numbers (S/I convention):\n"
      "b_{1, x1x2x3} = 1\n"
      "b_{1, x1x3x4} = 1\n"
      "b_{1, x3x4x5} = 1\n"
      "b_{1, x3x5x6} = 1\n"
      "b_{2, x1x2x3x4} = 1\n"
      "b_{2, x1x3x4x5} = 1\n"
      "b_{2, x3x4x5x6} = 1\n"
      "b_{2, x1x2x3x5x6} = 1\n"
      "b_{3, x1x2x3x4x5x6} = 1\n"
      "Betti diagram:\n"
      "      |  0  1  2  3\n"
      "------+------------\n"
      "Total |  1  4  4  1\n"
      "------+------------\n"
      "    0 |  1 -- -- --\n"
      "    1 | -- -- -- --\n"
      "    2 | --  4  3 --\n"
      "    3 | -- --  1  1\n"
      "pd = 3\n"
      "reg = 3\n";
  const CliResult first = run_cli("betti " + path);
  CHECK(first.exit_code == 0);
  CHECK(first.out == expected);
  const CliResult second = run_cli("betti " + path);
  CHECK(second.out == first.out);
}

TEST_CASE("betti json carries nine rank-one entries") {
  const std::string path = write_temp("tree.txt", kTreeFile);
  const CliResult r = run_cli("betti --format json " + path);
  CHECK(r.exit_code == 0);
  const auto parsed = nlohmann::json::parse(r.out);
  CHECK(parsed["convention"] == "quotient");
  CHECK(parsed["entries"].size() == 9);
}

TEST_CASE("ideal convention shifts the listing") {
  const std::string path = write_temp("tree.txt", kTreeFile);
  const CliResult r = run_cli("betti --convention ideal " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("b_{0, x1x2x3} = 1") != std::string::npos);
  CHECK(r.out.find("b_{2, x1x2x3x4x5x6} = 1") != std::string::npos);
}

TEST_CASE("oracle reports the triangle rank") {
  const std::string path = write_temp("tri.txt", kTriangleFile);
  const CliResult r = run_cli("oracle " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("b_{2, xyz} = 2") != std::string::npos);
}

TEST_CASE("compare verdicts") {
  const std::string tree = write_temp("tree.txt", kTreeFile);
  const CliResult match = run_cli("compare " + tree);
  CHECK(match.exit_code == 0);
  CHECK(match.out == "MATCH (9 multidegrees)\n");

  const std::string tri = write_temp("tri.txt", kTriangleFile);
  const CliResult sufficiency = run_cli("compare " + tri);
  CHECK(sufficiency.exit_code == 0);
  CHECK(sufficiency.out.find("certificate b_{2, xyz} confirmed (oracle rank 2)") !=
        std::string::npos);

  const std::string single = write_temp("single.txt", "a b\n");
  const CliResult trivial = run_cli("compare " + single);
  CHECK(trivial.exit_code == 0);
  CHECK(trivial.out == "MATCH (1 multidegrees)\n");
}

TEST_CASE("compare reports oracle-only entries on the five-cycle") {
  const std::string c5 = write_temp("c5.txt", "a b\nb c\nc d\nd e\ne a\n");
  const CliResult r = run_cli("compare " + c5);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("oracle-only entries (expected for non-forests):\n  b_{3, abcde} = 1") !=
        std::string::npos);
}

TEST_CASE("compare json modes") {
  const std::string tree = write_temp("tree.txt", kTreeFile);
  auto parsed = nlohmann::json::parse(run_cli("compare --format json " + tree).out);
  CHECK(parsed["mode"] == "forest");
  CHECK(parsed["match"] == true);
  CHECK(parsed["multidegrees"] == 9);
  const std::string c5 = write_temp("c5.txt", "a b\nb c\nc d\nd e\ne a\n");
  parsed = nlohmann::json::parse(run_cli("compare --format json " + c5).out);
  CHECK(parsed["mode"] == "certificates");
  CHECK(parsed["confirmed"] == 10);
  CHECK(parsed["violations"] == 0);
  CHECK(parsed["oracle_only"] == 1);
}

TEST_CASE("compare over seeded random instances") {
  const CliResult r = run_cli("compare --random 40 --seed 7");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("OK (40 random instances, seed 7)") != std::string::npos);
  const CliResult again = run_cli("compare --random 40 --seed 7");
  CHECK(again.out == r.out);
}

TEST_CASE("wofc json follows the certificate schema") {
  const std::string path = write_temp("tri.txt", kTriangleFile);
  const CliResult r = run_cli("wofc --format json " + path);
  CHECK(r.exit_code == 0);
  const auto parsed = nlohmann::json::parse(r.out);
  REQUIRE(parsed.size() == 1);
  CHECK(parsed[0]["cover"].size() == 2);
  CHECK(parsed[0]["order"].size() == 2);
  CHECK(parsed[0]["witnesses"].size() == 1);
}

TEST_CASE("is-forest") {
  const std::string tri = write_temp("tri.txt", kTriangleFile);
  CliResult r = run_cli("is-forest " + tri);
  CHECK(r.exit_code == 0);
  CHECK(r.out == "forest: no\nleafless subcollection: F1 F2 F3\n");
  const std::string tree = write_temp("tree.txt", kTreeFile);
  r = run_cli("is-forest " + tree);
  CHECK(r.out == "forest: yes\n");
}

TEST_CASE("stdin input works") {
  const std::string cmd = "echo 'a b' | " + cli_path() + " is-forest - 2>/dev/null";
  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[256];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  r.exit_code = WEXITSTATUS(pclose(pipe));
  CHECK(r.exit_code == 0);
  CHECK(r.out == "forest: yes\n");
}

TEST_CASE("localize emits the quotient generators") {
  const std::string path =
      write_temp("treeF.txt", "x3 x4 x5\nx3 x5 x6\nx1 x2 x3\nx1 x3 x4\n");
  const CliResult r = run_cli("localize --facet 2 " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.out == "x4\nx1x2\n");
}

TEST_CASE("lyubeznik respects --order") {
  // file order is x1x2x3, x1x3x4, x3x4x5, x3x5x6; rank them 3rd,4th,1st,2nd
  const std::string path = write_temp("tree.txt", kTreeFile);
  const CliResult r = run_cli("lyubeznik --format json --order 3,4,1,2 " + path);
  CHECK(r.exit_code == 0);
  const auto parsed = nlohmann::json::parse(r.out);
  CHECK(parsed["order"] == nlohmann::json::array({3, 4, 1, 2}));
  CHECK(parsed["facets"].size() == 2);
  CHECK(parsed["faces"].size() == 11);
  REQUIRE(parsed["witnesses"].size() == 1);
  CHECK(parsed["witnesses"][0]["i"] == 3);
}

TEST_CASE("covers lists facet and vertex covers") {
  const std::string tree = write_temp("tree.txt", kTreeFile);
  CliResult r = run_cli("covers " + tree);
  CHECK(r.out == "F1 F2 F4\nF1 F3 F4\n");  // file order: F3,F4,F1,F2 from the figure
  r = run_cli("covers --vertex " + tree);
  CHECK(r.out.substr(0, 3) == "x3\n");
}

TEST_CASE("bounds shows the strict improvement on the tree") {
  const std::string tree = write_temp("tree.txt", kTreeFile);
  const CliResult r = run_cli("bounds --format json " + tree);
  CHECK(r.exit_code == 0);
  const auto parsed = nlohmann::json::parse(r.out);
  CHECK(parsed["wofc_bound"] == 3);
  CHECK(parsed["induced_matching_bound"] == 2);
}

TEST_CASE("graph-bouquets on the path and the star") {
  const std::string path4 = write_temp("path.txt", "a b\nb c\nc d\n");
  CliResult r = run_cli("graph-bouquets " + path4);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("no well ordered edge cover") != std::string::npos);
  const std::string star = write_temp("star.txt", "r z1\nr z2\nr z3\n");
  r = run_cli("graph-bouquets " + star);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("well ordered; strongly disjoint bouquets") != std::string::npos);
}

TEST_CASE("exit codes") {
  const std::string tri = write_temp("tri.txt", kTriangleFile);
  CHECK(run_cli("betti " + tri).exit_code == 1);          // not a forest
  CHECK(run_cli("nonsense-verb " + tri).exit_code == 1);  // usage
  CHECK(run_cli("betti --no-such-flag " + tri).exit_code == 1);
  CHECK(run_cli("betti missing_file.txt").exit_code == 1);
  CHECK(run_cli("oracle --max-generators 2 " + tri).exit_code == 2);  // cap refusal
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("cap override via environment") {
  const std::string tri = write_temp("tri.txt", kTriangleFile);
  const CliResult r = run_cli("oracle " + tri + " --max-generators 3");
  CHECK(r.exit_code == 0);
}

TEST_CASE("generator caps differ per verb") {
  std::string matching;
  for (int i = 1; i <= 13; ++i)
    matching += "a" + std::to_string(i) + " b" + std::to_string(i) + "\n";
  const std::string path = write_temp("matching13.txt", matching);
  CHECK(run_cli("oracle " + path).exit_code == 2);      // 13 > 12
  const CliResult r = run_cli("lyubeznik --format json " + path);
  CHECK(r.exit_code == 0);                              // 13 <= 16
  const auto parsed = nlohmann::json::parse(r.out);
  CHECK(parsed["facets"].size() == 1);
  CHECK(parsed["facets"][0].size() == 13);
}

TEST_CASE("localize argument validation") {
  const std::string tree = write_temp("tree.txt", kTreeFile);
  CHECK(run_cli("localize --facet 0 " + tree).exit_code == 1);
  CHECK(run_cli("localize --facet 9 " + tree).exit_code == 1);
  CHECK(run_cli("localize " + tree).exit_code == 1);  // --facet required
}
