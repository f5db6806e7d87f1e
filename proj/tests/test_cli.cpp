#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "census_reference.hpp"
#include "rotkit/cli.hpp"

using namespace rotkit;

namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

std::filesystem::path temp_path(const std::string& name) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::filesystem::remove(path);
  return path;
}

}  // namespace

TEST_CASE("catalan prints the tree count") {
  CliResult r = run({"catalan", "--n", "10"});
  CHECK(r.code == 0);
  CHECK(r.out == "16796\n");
}

TEST_CASE("census prints CSV rows matching the reference") {
  CliResult r = run({"census", "--size", "4"});
  CHECK(r.code == 0);
  auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "size,no_common,difficult,total");
  CHECK(lines[1] == "4,68,8,196");
}

TEST_CASE("census accepts a size range and the naive flag") {
  CliResult fast = run({"census", "--size", "3..5"});
  CHECK(fast.code == 0);
  auto lines = lines_of(fast.out);
  REQUIRE(lines.size() == 4);
  CHECK(lines[1] == "3,10,0,25");
  CHECK(lines[2] == "4,68,8,196");
  CHECK(lines[3] == "5,546,42,1764");

  CliResult naive = run({"census", "--size", "3..5", "--naive"});
  CHECK(naive.code == 0);
  CHECK(naive.out == fast.out);
}

TEST_CASE("census writes to a file when asked") {
  auto path = temp_path("rotkit_census_cli.csv");
  CliResult r = run({"census", "--size", "3..6", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  REQUIRE(in.good());
  std::string header;
  std::getline(in, header);
  CHECK(header == "size,no_common,difficult,total");
  std::filesystem::remove(path);
}

TEST_CASE("classes counts dihedral representatives") {
  CliResult r = run({"classes", "--size", "4"});
  CHECK(r.code == 0);
  CHECK(r.out == "3\n");

  CliResult listed = run({"classes", "--size", "4", "--list"});
  auto lines = lines_of(listed.out);
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] == "3");
  int orbit_sum = 0;
  for (int i = 1; i < 4; ++i) {
    auto space = lines[i].rfind(' ');
    REQUIRE(space != std::string::npos);
    orbit_sum += std::stoi(lines[i].substr(space + 1));
  }
  CHECK(orbit_sum == 14);
}

TEST_CASE("classify names the class and its witnesses") {
  CliResult difficult = run({"classify", "--a", "6:(0,2),(2,4),(0,4)", "--b",
                             "6:(1,3),(3,5),(1,5)"});
  CHECK(difficult.code == 0);
  CHECK(lines_of(difficult.out).front() == "DIFFICULT");

  CliResult one_off = run({"classify", "--a", "4:(0,2)", "--b", "4:(1,3)"});
  CHECK(one_off.code == 0);
  auto lines = lines_of(one_off.out);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "ONE_OFF");
  CHECK(lines[1] == "one_off: side=S target=(0,2) flipped=(1,3)");
  CHECK(lines[2] == "one_off: side=T target=(1,3) flipped=(0,2)");

  CliResult common = run({"classify", "--a", "6:(0,2),(0,4),(2,4)", "--b",
                          "6:(0,2),(0,3),(0,4)"});
  auto common_lines = lines_of(common.out);
  REQUIRE(common_lines.size() == 2);
  CHECK(common_lines[0] == "HAS_COMMON");
  CHECK(common_lines[1] == "common: (0,2) (0,4)");
}

TEST_CASE("classify accepts trees and triangulations interchangeably") {
  CliResult mixed = run({"classify", "--a", "(L(LL))", "--b", "4:(0,2)"});
  CHECK(mixed.code == 0);
  CHECK(lines_of(mixed.out).front() == "ONE_OFF");
}

TEST_CASE("distance prints the exact flip distance") {
  CliResult trees = run({"distance", "--a", "(L(LL))", "--b", "((LL)L)"});
  CHECK(trees.code == 0);
  CHECK(trees.out == "1\n");

  CliResult snowflake = run({"distance", "--a", "6:(0,2),(2,4),(0,4)", "--b",
                             "6:(1,3),(3,5),(1,5)"});
  CHECK(snowflake.code == 0);
  CHECK(snowflake.out == "4\n");

  CliResult capped = run({"distance", "--a", "6:(0,2),(2,4),(0,4)", "--b",
                          "6:(1,3),(3,5),(1,5)", "--cap", "3"});
  CHECK(capped.code == 1);
  CHECK(capped.err.find("error:") != std::string::npos);
}

TEST_CASE("reduce emits the parts and move count as JSON") {
  CliResult r = run({"reduce", "--a", "4:(0,2)", "--b", "4:(1,3)"});
  CHECK(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["one_off_moves"] == 1);
  CHECK(doc["parts"].empty());

  CliResult snowflake = run({"reduce", "--a", "6:(0,2),(2,4),(0,4)", "--b",
                             "6:(1,3),(3,5),(1,5)"});
  auto snow = nlohmann::json::parse(snowflake.out);
  CHECK(snow["one_off_moves"] == 0);
  REQUIRE(snow["parts"].size() == 1);
  CHECK(snow["parts"][0]["s"] == "6:(0,2),(0,4),(2,4)");
  CHECK(snow["parts"][0]["t"] == "6:(1,3),(1,5),(3,5)");
}

TEST_CASE("fit reads back census output") {
  auto path = temp_path("rotkit_fit_cli.csv");
  CHECK(run({"census", "--size", "4..7", "--out", path.string()}).code == 0);

  CliResult fit = run({"fit", "--input", path.string(), "--column", "no_common",
                       "--model", "exp"});
  CHECK(fit.code == 0);
  auto doc = nlohmann::json::parse(fit.out);
  CHECK(doc["model"] == "exp");
  CHECK(doc["points"] == 4);
  CHECK(doc["ratio"].get<double>() > 0.0);

  CliResult cube = run({"fit", "--input", path.string(), "--column", "no_common",
                        "--model", "powcube"});
  CHECK(cube.code == 0);
  CHECK(nlohmann::json::parse(cube.out)["model"] == "powcube");
  std::filesystem::remove(path);
}

TEST_CASE("fit warns about excluded non-positive points") {
  auto path = temp_path("rotkit_fit_zero.csv");
  CHECK(run({"census", "--size", "3..6", "--out", path.string()}).code == 0);

  // difficult(3) = 0 has no logarithm and is dropped with a note
  CliResult fit = run({"fit", "--input", path.string(), "--column", "difficult",
                       "--model", "exp"});
  CHECK(fit.code == 0);
  CHECK(fit.err.find("non-positive") != std::string::npos);
  CHECK(nlohmann::json::parse(fit.out)["points"] == 3);
  std::filesystem::remove(path);
}

TEST_CASE("plot writes an SVG with optional fit overlay") {
  auto csv = temp_path("rotkit_plot_cli.csv");
  auto svg = temp_path("rotkit_plot_cli.svg");
  CHECK(run({"census", "--size", "3..7", "--out", csv.string()}).code == 0);

  CliResult plain = run({"plot", "--input", csv.string(), "--column", "no_common",
                         "--output", svg.string()});
  CHECK(plain.code == 0);
  {
    std::ifstream in(svg);
    REQUIRE(in.good());
    std::stringstream buffer;
    buffer << in.rdbuf();
    CHECK(buffer.str().find("<svg") != std::string::npos);
    CHECK(buffer.str().find("fit-line") == std::string::npos);
  }

  CliResult fitted = run({"plot", "--input", csv.string(), "--column", "no_common",
                          "--output", svg.string(), "--fit"});
  CHECK(fitted.code == 0);
  {
    std::ifstream in(svg);
    std::stringstream buffer;
    buffer << in.rdbuf();
    CHECK(buffer.str().find("fit-line") != std::string::npos);
  }
  std::filesystem::remove(csv);
  std::filesystem::remove(svg);
}

TEST_CASE("sample echoes its seed and is byte-deterministic") {
  std::vector<std::string> args{"sample", "--size", "6", "--iters", "2000",
                                "--seed", "77", "--threads", "2"};
  CliResult first = run(args);
  CliResult second = run(args);
  CHECK(first.code == 0);
  CHECK(first.out == second.out);
  auto lines = lines_of(first.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "size,iters,no_common,difficult,seed,workers");
  CHECK(lines[1].find("6,2000,") == 0);
  CHECK(lines[1].find(",77,2") != std::string::npos);
}

TEST_CASE("sample respects the threads environment default") {
  setenv("ROTKIT_THREADS", "3", 1);
  CliResult r = run({"sample", "--size", "5", "--iters", "100", "--seed", "5"});
  unsetenv("ROTKIT_THREADS");
  CHECK(r.code == 0);
  auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[1].back() == '3');

  setenv("ROTKIT_THREADS", "bogus", 1);
  CliResult bad = run({"sample", "--size", "5", "--iters", "100", "--seed", "5"});
  unsetenv("ROTKIT_THREADS");
  CHECK(bad.code == 1);
  CHECK(bad.err.find("ROTKIT_THREADS") != std::string::npos);
}

TEST_CASE("usage errors exit with code two") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"census"}).code == 2);                                // missing --size
  CHECK(run({"census", "--size", "4", "--bogus"}).code == 2);
  CHECK(run({"census", "--size", "x"}).code == 2);
  CHECK(run({"census", "--size", "5..3"}).code == 2);
  CHECK(run({"fit", "--input", "f.csv", "--model", "nope"}).code == 2);
}

TEST_CASE("domain errors exit with code one") {
  CliResult undersized = run({"census", "--size", "2"});
  CHECK(undersized.code == 1);
  CHECK(undersized.err.find("error:") != std::string::npos);

  CHECK(run({"classify", "--a", "4:(0,2)", "--b", "5:(0,2),(0,3)"}).code == 1);
  CHECK(run({"classify", "--a", "junk!", "--b", "4:(0,2)"}).code == 1);
  CHECK(run({"fit", "--input", "/nonexistent/f.csv"}).code == 1);
  CHECK(run({"census", "--size", "3..5", "--checkpoint", "/tmp/ck.txt"}).code == 1);
}

TEST_CASE("help requests succeed") {
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"census", "--help"}).code == 0);
  CliResult r = run({"--help"});
  CHECK(r.out.find("census") != std::string::npos);
}
