#pragma once

#include <cstdint>

namespace rotkit::testing {

// Exhaustive ordered-pair counts by tree size: pairs sharing no diagonal, the
// difficult subset, and the catalan(size)^2 total. Sizes through 10 are
// recomputed by the census tests; the larger rows back the decay-rate fits
// and the extended census runs.
struct CensusReferenceRow {
  int size;
  std::uint64_t no_common;
  std::uint64_t difficult;
  std::uint64_t total;
};

inline constexpr CensusReferenceRow kCensusReference[] = {
    {3, 10, 0, 25},
    {4, 68, 8, 196},
    {5, 546, 42, 1764},
    {6, 4872, 304, 17424},
    {7, 46782, 2616, 184041},
    {8, 474180, 23150, 2044900},
    {9, 5010456, 209638, 23639044},
    {10, 54721224, 1947692, 282105616},
    {11, 613912182, 18501730, 3455793796},
    {12, 7042779996, 179062646, 43268992144},
    {13, 82329308040, 1760984370, 551900410000},
    {14, 978034001472, 17561480528, 7152629313600},
};

inline const CensusReferenceRow& census_reference(int size) {
  return kCensusReference[size - 3];
}

}  // namespace rotkit::testing
