#pragma once

#include <compare>
#include <utility>
#include <vector>

#include "rotkit/triangulation.hpp"

namespace rotkit {

// A rotation-distance instance: an ordered pair of triangulations of the same
// polygon. Construction rejects mismatched polygon sizes.
struct TreePairProblem {
  Triangulation s, t;

  TreePairProblem(Triangulation s_in, Triangulation t_in);

  int size() const { return s.size(); }
  int vertex_count() const { return s.vertex_count(); }

  friend auto operator<=>(const TreePairProblem&, const TreePairProblem&) = default;
};

enum class PairClass { HasCommon, OneOff, Difficult };
const char* to_string(PairClass c);

// A diagonal one flip away from being shared: `target` lives in `side`,
// crosses exactly one diagonal `flipped` of the other triangulation, and
// flipping `flipped` there introduces `target`.
struct OneOffWitness {
  enum class Side { S, T };
  Side side = Side::S;
  Diagonal target;
  Diagonal flipped;

  friend auto operator<=>(const OneOffWitness&, const OneOffWitness&) = default;
};

// Diagonals present in both triangulations, sorted.
std::vector<Diagonal> common_diagonals(const TreePairProblem& pair);

// All one-off witnesses, S-side witnesses first, each side sorted by target.
std::vector<OneOffWitness> one_off_diagonals(const TreePairProblem& pair);

// HAS_COMMON if any diagonal is shared, else ONE_OFF if a witness exists,
// else DIFFICULT. Defined for size >= 2 only.
PairClass classify_pair(const TreePairProblem& pair);

// Splits both triangulations along a shared diagonal d = (a, b). The first
// part keeps vertices a..b, the second the complementary side including both
// endpoints; each part is relabeled by rank in its sorted vertex set, and the
// part sizes sum to the input size.
std::pair<TreePairProblem, TreePairProblem> split_common(const TreePairProblem& pair, Diagonal d);

struct Reduction {
  std::vector<TreePairProblem> parts;  // every part is difficult, size >= 2
  int one_off_moves = 0;
};

// Deterministic reduction: split along the least common diagonal until no
// part has one, then apply the least one-off witness (side S before side T,
// then by target, then by flipped diagonal) of the first part that has any,
// and repeat. Parts of size <= 1 are dropped as trivial.
Reduction reduce_fully(const TreePairProblem& pair);

}  // namespace rotkit
