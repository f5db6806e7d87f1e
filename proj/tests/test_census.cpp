#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "census_reference.hpp"
#include "rotkit/census.hpp"

using namespace rotkit;
using rotkit::testing::census_reference;

namespace {

class TempFile {
 public:
  explicit TempFile(const std::string& stem)
      : path_(std::filesystem::temp_directory_path() / (stem + ".txt")) {
    std::filesystem::remove(path_);
  }
  ~TempFile() { std::filesystem::remove(path_); }
  const std::string path() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) lines.push_back(line);
  return lines;
}

void check_row(const CensusRow& row) {
  const auto& expected = census_reference(row.size);
  CHECK(row.no_common == expected.no_common);
  CHECK(row.difficult == expected.difficult);
  CHECK(row.total == expected.total);
}

}  // namespace

TEST_CASE("exact_census reproduces the reference rows") {
  for (int n = 3; n <= 8; ++n) check_row(exact_census(n, 1));
}

TEST_CASE("the all-pairs reference census agrees with the class-weighted one") {
  for (int n = 3; n <= 6; ++n) {
    CensusRow naive = exact_census_naive(n);
    CensusRow fast = exact_census(n, 1);
    CHECK(naive.no_common == fast.no_common);
    CHECK(naive.difficult == fast.difficult);
    CHECK(naive.total == fast.total);
    check_row(naive);
  }
}

TEST_CASE("exact_census is identical for any worker count") {
  CensusRow one = exact_census(6, 1);
  CensusRow three = exact_census(6, 3);
  CensusRow all = exact_census(6, 0);
  CHECK(one.no_common == three.no_common);
  CHECK(one.difficult == three.difficult);
  CHECK(one.no_common == all.no_common);
  CHECK(one.difficult == all.difficult);
}

TEST_CASE("exact_census rejects sizes outside its range") {
  CHECK_THROWS_AS(exact_census(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(exact_census(13, 1), std::invalid_argument);  // default ceiling is 12
  CHECK_THROWS_AS(exact_census(15, 1, 20), std::invalid_argument);
  CHECK_THROWS_AS(exact_census_naive(2), std::invalid_argument);
  CHECK_THROWS_AS(exact_census_naive(8), std::invalid_argument);
}

TEST_CASE("checkpointing records every representative and resumes cleanly") {
  TempFile ck("rotkit_census_ck_full");

  CensusRow first = exact_census(5, 1, 12, ck.path());
  check_row(first);
  auto lines = read_lines(ck.path());
  CHECK(lines.size() == 4);  // one line per size-5 class representative

  // complete file: everything is skipped, nothing is appended
  CensusRow second = exact_census(5, 1, 12, ck.path());
  check_row(second);
  CHECK(read_lines(ck.path()).size() == lines.size());

  // truncated file: the missing representatives are recomputed
  {
    std::ofstream out(ck.path(), std::ios::trunc);
    out << lines[0] << '\n' << lines[1] << '\n';
  }
  CensusRow resumed = exact_census(5, 1, 12, ck.path());
  check_row(resumed);
  CHECK(read_lines(ck.path()).size() == 4);

  // duplicated lines only count once
  {
    std::ofstream out(ck.path(), std::ios::app);
    out << lines[0] << '\n';
  }
  check_row(exact_census(5, 1, 12, ck.path()));
}

TEST_CASE("checkpointing rejects malformed and out-of-range lines") {
  TempFile ck("rotkit_census_ck_bad");
  {
    std::ofstream out(ck.path());
    out << "not a checkpoint line\n";
  }
  CHECK_THROWS_AS(exact_census(5, 1, 12, ck.path()), std::runtime_error);
  {
    std::ofstream out(ck.path(), std::ios::trunc);
    out << "99,1,1\n";  // index past the representative list
  }
  CHECK_THROWS_AS(exact_census(5, 1, 12, ck.path()), std::runtime_error);
}

TEST_CASE("sample_census is deterministic per seed and worker count") {
  SampleRow a = sample_census(7, 5000, 99, 2);
  SampleRow b = sample_census(7, 5000, 99, 2);
  CHECK(a.no_common_hits == b.no_common_hits);
  CHECK(a.difficult_hits == b.difficult_hits);
  CHECK(a.size == 7);
  CHECK(a.iterations == 5000);
  CHECK(a.seed == 99);
  CHECK(a.workers == 2);
  CHECK(a.no_common_hits <= a.iterations);
  CHECK(a.difficult_hits <= a.no_common_hits);
}

TEST_CASE("sample_census splits iterations exactly across workers") {
  // 7 iterations over 3 workers: blocks of 3, 2, 2.
  SampleRow r = sample_census(5, 7, 1234, 3);
  CHECK(r.iterations == 7);
  CHECK(r.no_common_hits <= 7);
}

TEST_CASE("sample_census converges to the exact fractions") {
  const auto& expected = census_reference(6);
  double p_nc = static_cast<double>(expected.no_common) / static_cast<double>(expected.total);
  double p_d = static_cast<double>(expected.difficult) / static_cast<double>(expected.total);

  SampleRow r = sample_census(6, 200000, 20260817, 1);
  double got_nc = static_cast<double>(r.no_common_hits) / static_cast<double>(r.iterations);
  double got_d = static_cast<double>(r.difficult_hits) / static_cast<double>(r.iterations);
  CHECK(got_nc == doctest::Approx(p_nc).epsilon(0.05));
  CHECK(got_d == doctest::Approx(p_d).epsilon(0.25));
}

TEST_CASE("sample_census rejects degenerate requests") {
  CHECK_THROWS_AS(sample_census(2, 100, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(sample_census(5, 0, 1, 1), std::invalid_argument);
}
