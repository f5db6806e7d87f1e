#include "rotkit/distance.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>

namespace rotkit {

std::vector<Triangulation> flip_neighbors(const Triangulation& tri) {
  std::vector<Triangulation> out;
  out.reserve(tri.diagonals().size());
  for (Diagonal d : tri.diagonals()) out.push_back(flip(tri, d).result);
  return out;
}

namespace {

// Packed key: one byte per diagonal endpoint, in sorted diagonal order.
std::string key_of(const Triangulation& t) {
  std::string k;
  k.reserve(t.diagonals().size() * 2);
  for (Diagonal d : t.diagonals()) {
    k.push_back(static_cast<char>(d.a));
    k.push_back(static_cast<char>(d.b));
  }
  return k;
}

}  // namespace

DistanceResult exact_distance(const TreePairProblem& pair, int size_cap) {
  if (pair.size() > size_cap)
    throw std::invalid_argument("exact_distance: pair size " + std::to_string(pair.size()) +
                                " exceeds the cap " + std::to_string(size_cap));
  if (pair.vertex_count() > 127)
    throw std::invalid_argument("exact_distance: polygons beyond 127 vertices are not supported");
  if (pair.s == pair.t) return {0, 2};

  std::unordered_map<std::string, int> dist_s{{key_of(pair.s), 0}};
  std::unordered_map<std::string, int> dist_t{{key_of(pair.t), 0}};
  std::vector<Triangulation> frontier_s{pair.s}, frontier_t{pair.t};
  int depth_s = 0, depth_t = 0;
  std::uint64_t explored = 2;
  int best = -1;

  while (!frontier_s.empty() && !frontier_t.empty()) {
    bool expand_s = frontier_s.size() <= frontier_t.size();
    auto& frontier = expand_s ? frontier_s : frontier_t;
    auto& mine = expand_s ? dist_s : dist_t;
    auto& other = expand_s ? dist_t : dist_s;
    int depth = (expand_s ? depth_s : depth_t) + 1;

    std::vector<Triangulation> next;
    for (const auto& u : frontier) {
      for (auto& v : flip_neighbors(u)) {
        auto [it, inserted] = mine.try_emplace(key_of(v), depth);
        if (!inserted) continue;
        ++explored;
        if (auto jt = other.find(it->first); jt != other.end()) {
          int total = depth + jt->second;
          if (best < 0 || total < best) best = total;
        }
        next.push_back(std::move(v));
      }
    }
    frontier = std::move(next);
    (expand_s ? depth_s : depth_t) = depth;
    // A meeting at combined depth depth_s + depth_t or less would already
    // have been recorded, so a candidate within one of that bound is optimal.
    if (best >= 0 && best <= depth_s + depth_t + 1) return {best, explored};
  }
  throw std::logic_error("exact_distance: search exhausted without meeting");
}

}  // namespace rotkit
