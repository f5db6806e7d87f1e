#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "rotkit/combinatorics.hpp"

namespace rotkit {

struct CensusRow {
  int size = 0;
  ExactCount no_common;  // ordered pairs sharing no diagonal (includes difficult)
  ExactCount difficult;
  ExactCount total;      // catalan(size)^2
};

struct SampleRow {
  int size = 0;
  std::uint64_t iterations = 0;
  std::uint64_t no_common_hits = 0;
  std::uint64_t difficult_hits = 0;
  std::uint64_t seed = 0;
  int workers = 0;
};

// Exact census over all ordered pairs of the given size, accelerated by
// classifying one representative per dihedral orbit against every
// triangulation and weighting by orbit size. Results are identical for any
// worker count (per-representative counts merge by addition). workers = 0
// uses all available threads. Sizes run 3..max_size; the kernel itself stops
// at size 14, where counts still fit the 64-bit accumulators.
//
// `checkpoint` names a resume file: one line per completed representative
// index with its weighted counts, appended as work finishes and skipped on
// the next run.
CensusRow exact_census(int size, int workers = 0, int max_size = 12,
                       const std::optional<std::string>& checkpoint = std::nullopt);

// Reference census that classifies all catalan(size)^2 ordered pairs directly
// through the generic pair machinery, serially. Sizes 3..7.
CensusRow exact_census_naive(int size);

// Monte-Carlo census over `iterations` independent uniform pairs. Worker w
// draws from the substream seeded with derive_stream_seed(seed, w) and
// handles a contiguous block of iterations, so results are bit-identical for
// a fixed (seed, workers). workers = 0 uses all available threads.
SampleRow sample_census(int size, std::uint64_t iterations, std::uint64_t seed, int workers = 0);

}  // namespace rotkit
