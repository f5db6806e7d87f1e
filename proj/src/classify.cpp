#include "rotkit/classify.hpp"

#include <algorithm>
#include <deque>
#include <iterator>
#include <stdexcept>
#include <string>

namespace rotkit {

namespace {

bool has_shared_diagonal(const TreePairProblem& pair) {
  const auto& a = pair.s.diagonals();
  const auto& b = pair.t.diagonals();
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return true;
    if (a[i] < b[j])
      ++i;
    else
      ++j;
  }
  return false;
}

}  // namespace

TreePairProblem::TreePairProblem(Triangulation s_in, Triangulation t_in)
    : s(std::move(s_in)), t(std::move(t_in)) {
  if (s.vertex_count() != t.vertex_count())
    throw std::invalid_argument("pair size mismatch: " + std::to_string(s.vertex_count()) +
                                "-gon vs " + std::to_string(t.vertex_count()) + "-gon");
}

const char* to_string(PairClass c) {
  switch (c) {
    case PairClass::HasCommon:
      return "HAS_COMMON";
    case PairClass::OneOff:
      return "ONE_OFF";
    case PairClass::Difficult:
      return "DIFFICULT";
  }
  return "?";
}

std::vector<Diagonal> common_diagonals(const TreePairProblem& pair) {
  std::vector<Diagonal> out;
  std::set_intersection(pair.s.diagonals().begin(), pair.s.diagonals().end(),
                        pair.t.diagonals().begin(), pair.t.diagonals().end(),
                        std::back_inserter(out));
  return out;
}

std::vector<OneOffWitness> one_off_diagonals(const TreePairProblem& pair) {
  std::vector<OneOffWitness> out;
  auto scan = [&](const Triangulation& from, const Triangulation& other, OneOffWitness::Side side) {
    for (Diagonal d : from.diagonals()) {
      if (other.contains(d)) continue;
      int crossings = 0;
      Diagonal hit{};
      for (Diagonal e : other.diagonals()) {
        if (diagonals_cross(d, e)) {
          hit = e;
          if (++crossings > 1) break;
        }
      }
      // d crosses exactly one diagonal of the other side, so it is the
      // opposite diagonal of hit's quadrilateral there: flipping hit makes
      // d common.
      if (crossings == 1) out.push_back({side, d, hit});
    }
  };
  scan(pair.s, pair.t, OneOffWitness::Side::S);
  scan(pair.t, pair.s, OneOffWitness::Side::T);
  return out;
}

PairClass classify_pair(const TreePairProblem& pair) {
  if (pair.size() < 2)
    throw std::invalid_argument("classify_pair: defined for size >= 2, got " +
                                std::to_string(pair.size()));
  if (has_shared_diagonal(pair)) return PairClass::HasCommon;
  if (!one_off_diagonals(pair).empty()) return PairClass::OneOff;
  return PairClass::Difficult;
}

std::pair<TreePairProblem, TreePairProblem> split_common(const TreePairProblem& pair, Diagonal d) {
  if (!pair.s.contains(d) || !pair.t.contains(d))
    throw std::invalid_argument("split_common: diagonal is not shared by the pair");
  int m = pair.vertex_count();
  int a = d.a, b = d.b;
  int drop = b - a - 1;

  // Vertices a..b relabeled v -> v-a; the split diagonal becomes the root side.
  auto inner = [&](const Triangulation& tri) {
    std::vector<Diagonal> out;
    for (Diagonal e : tri.diagonals()) {
      if (e == d) continue;
      if (e.a >= a && e.b <= b) out.push_back({e.a - a, e.b - a});
    }
    return Triangulation(b - a + 1, std::move(out));
  };
  // Vertices 0..a and b..m-1 relabeled by rank; the original root side stays
  // the root side and the split diagonal becomes the side (a, a+1).
  auto outer = [&](const Triangulation& tri) {
    std::vector<Diagonal> out;
    for (Diagonal e : tri.diagonals()) {
      if (e == d) continue;
      bool a_out = e.a <= a || e.a >= b;
      bool b_out = e.b <= a || e.b >= b;
      if (a_out && b_out)
        out.push_back({e.a <= a ? e.a : e.a - drop, e.b <= a ? e.b : e.b - drop});
    }
    return Triangulation(m - drop, std::move(out));
  };
  return {TreePairProblem(inner(pair.s), inner(pair.t)),
          TreePairProblem(outer(pair.s), outer(pair.t))};
}

Reduction reduce_fully(const TreePairProblem& pair) {
  Reduction red;
  std::deque<TreePairProblem> work{pair};
  std::vector<TreePairProblem> parts;
  for (;;) {
    // Split until no part has a shared diagonal; trivial parts drop out.
    parts.clear();
    while (!work.empty()) {
      TreePairProblem p = std::move(work.front());
      work.pop_front();
      if (p.size() <= 1) continue;
      auto common = common_diagonals(p);
      if (!common.empty()) {
        auto [p1, p2] = split_common(p, common.front());
        work.push_front(std::move(p2));
        work.push_front(std::move(p1));
        continue;
      }
      parts.push_back(std::move(p));
    }
    // Apply the least witness of the first reducible part, then re-split.
    bool applied = false;
    for (auto& p : parts) {
      auto witnesses = one_off_diagonals(p);
      if (witnesses.empty()) continue;
      const OneOffWitness& w = witnesses.front();
      if (w.side == OneOffWitness::Side::S) {
        Triangulation flipped = flip(p.t, w.flipped).result;
        p = TreePairProblem(p.s, std::move(flipped));
      } else {
        Triangulation flipped = flip(p.s, w.flipped).result;
        p = TreePairProblem(std::move(flipped), p.t);
      }
      ++red.one_off_moves;
      applied = true;
      break;
    }
    if (!applied) break;
    for (auto& p : parts) work.push_back(std::move(p));
  }
  red.parts = std::move(parts);
  return red;
}

}  // namespace rotkit
