#pragma once

#include <cstdint>
#include <vector>

#include "rotkit/classify.hpp"

namespace rotkit {

struct DistanceResult {
  int distance = 0;
  std::uint64_t explored = 0;  // states inserted across both search sides
};

// All triangulations one flip away; exactly size-1 of them, no duplicates.
std::vector<Triangulation> flip_neighbors(const Triangulation& tri);

// Exact flip distance by bidirectional breadth-first search over the flip
// graph. Pairs larger than size_cap are refused (default 13, where one side
// of the search can already reach C_13 = 742900 states); raise the cap to
// override at your own expense.
DistanceResult exact_distance(const TreePairProblem& pair, int size_cap = 13);

}  // namespace rotkit
