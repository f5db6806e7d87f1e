#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "rotkit/census.hpp"

using namespace rotkit;

namespace {

double time_of(CensusRow& row, CensusRow (*fn)(int), int size) {
  auto start = std::chrono::steady_clock::now();
  row = fn(size);
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

// Compares the all-pairs reference census against the class-weighted kernel,
// serial and parallel. Rows must agree; times show the class and thread wins.
int main(int argc, char** argv) {
  int max_size = argc > 1 ? std::atoi(argv[1]) : 9;
  if (max_size < 3 || max_size > 12) {
    std::fprintf(stderr, "usage: %s [max_size in 3..12]\n", argv[0]);
    return 2;
  }

  std::printf("%4s  %12s  %12s  %12s  %10s\n", "size", "all-pairs", "classes x1",
              "classes auto", "speedup");
  for (int n = 3; n <= max_size; ++n) {
    double naive_s = -1.0;
    CensusRow naive_row;
    if (n <= 7) naive_s = time_of(naive_row, exact_census_naive, n);

    auto start = std::chrono::steady_clock::now();
    CensusRow serial = exact_census(n, 1);
    double serial_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    start = std::chrono::steady_clock::now();
    CensusRow parallel = exact_census(n, 0);
    double parallel_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    if (serial.no_common != parallel.no_common || serial.difficult != parallel.difficult) {
      std::fprintf(stderr, "size %d: serial and parallel rows disagree\n", n);
      return 1;
    }
    if (naive_s >= 0.0 &&
        (naive_row.no_common != serial.no_common || naive_row.difficult != serial.difficult)) {
      std::fprintf(stderr, "size %d: all-pairs and class-weighted rows disagree\n", n);
      return 1;
    }

    char naive_text[32];
    if (naive_s >= 0.0)
      std::snprintf(naive_text, sizeof(naive_text), "%10.3fs", naive_s);
    else
      std::snprintf(naive_text, sizeof(naive_text), "%11s", "-");
    char speedup[32];
    if (naive_s >= 0.0 && serial_s > 0.0)
      std::snprintf(speedup, sizeof(speedup), "%9.1fx", naive_s / serial_s);
    else
      std::snprintf(speedup, sizeof(speedup), "%9s", "-");
    std::printf("%4d  %12s  %10.3fs  %10.3fs  %10s\n", n, naive_text, serial_s, parallel_s,
                speedup);
  }
  return 0;
}
