#include "rotkit/census.hpp"

#include <omp.h>

#include <bit>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rotkit/classify.hpp"
#include "rotkit/tree.hpp"
#include "rotkit/triangulation.hpp"

namespace rotkit {

namespace {

// Diagonal set of one triangulation as a bitset over the chord universe of
// the m-gon. m <= 16 keeps the universe within m(m-3)/2 <= 104 bits.
struct ChordSet {
  std::uint64_t w0 = 0, w1 = 0;

  void set(int bit) {
    if (bit < 64)
      w0 |= std::uint64_t(1) << bit;
    else
      w1 |= std::uint64_t(1) << (bit - 64);
  }
  bool intersects(const ChordSet& o) const { return ((w0 & o.w0) | (w1 & o.w1)) != 0; }
  int overlap(const ChordSet& o) const {
    return std::popcount(w0 & o.w0) + std::popcount(w1 & o.w1);
  }
};

struct ChordUniverse {
  int m = 0;
  int count = 0;
  std::vector<int> index;        // m*m table, diagonal (a,b) -> bit
  std::vector<ChordSet> crosses; // bit -> set of crossing chords

  explicit ChordUniverse(int m_in) : m(m_in), index(m_in * m_in, -1) {
    std::vector<Diagonal> chords;
    for (int a = 0; a + 2 < m; ++a)
      for (int b = a + 2; b < m; ++b) {
        if (a == 0 && b == m - 1) continue;
        index[a * m + b] = count++;
        chords.push_back({a, b});
      }
    crosses.resize(count);
    for (int i = 0; i < count; ++i)
      for (int j = 0; j < count; ++j)
        if (diagonals_cross(chords[i], chords[j])) crosses[i].set(j);
  }

  ChordSet pack(const Triangulation& t) const {
    ChordSet out;
    for (Diagonal d : t.diagonals()) out.set(index[d.a * m + d.b]);
    return out;
  }
};

PairClass classify_packed(const ChordSet& a, const ChordSet& b,
                          const std::vector<ChordSet>& crosses) {
  if (a.intersects(b)) return PairClass::HasCommon;
  auto one_off_scan = [&](const ChordSet& from, const ChordSet& against) {
    for (std::uint64_t w = from.w0; w != 0; w &= w - 1)
      if (crosses[std::countr_zero(w)].overlap(against) == 1) return true;
    for (std::uint64_t w = from.w1; w != 0; w &= w - 1)
      if (crosses[std::countr_zero(w) + 64].overlap(against) == 1) return true;
    return false;
  };
  if (one_off_scan(a, b) || one_off_scan(b, a)) return PairClass::OneOff;
  return PairClass::Difficult;
}

int resolve_workers(int workers) { return workers > 0 ? workers : omp_get_max_threads(); }

}  // namespace

CensusRow exact_census(int size, int workers, int max_size,
                       const std::optional<std::string>& checkpoint) {
  if (size < 3 || size > max_size)
    throw std::invalid_argument("exact_census: size must be in 3.." + std::to_string(max_size) +
                                ", got " + std::to_string(size));
  if (size > 14)
    throw std::invalid_argument("exact_census: the packed kernel stops at size 14");

  ChordUniverse universe(size + 2);
  std::vector<ChordSet> tris;
  enumerate_triangulations(size, [&](const Triangulation& t) { tris.push_back(universe.pack(t)); });
  std::vector<std::pair<ChordSet, std::uint64_t>> reps;
  enumerate_class_representatives(size, [&](const Triangulation& r, int orbit) {
    reps.push_back({universe.pack(r), std::uint64_t(orbit)});
  });

  std::vector<char> done(reps.size(), 0);
  std::uint64_t no_common = 0, difficult = 0;
  std::ofstream ck_out;
  if (checkpoint) {
    std::ifstream in(*checkpoint);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      std::istringstream row(line);
      std::size_t idx;
      std::uint64_t nc, dd;
      char c1, c2;
      if (!(row >> idx >> c1 >> nc >> c2 >> dd) || c1 != ',' || c2 != ',' || idx >= reps.size())
        throw std::runtime_error("exact_census: malformed checkpoint line: " + line);
      if (done[idx]) continue;
      done[idx] = 1;
      no_common += nc;
      difficult += dd;
    }
    ck_out.open(*checkpoint, std::ios::app);
    if (!ck_out) throw std::runtime_error("exact_census: cannot append to " + *checkpoint);
  }

  const long rep_count = static_cast<long>(reps.size());
#pragma omp parallel for schedule(dynamic) num_threads(resolve_workers(workers)) \
    reduction(+ : no_common, difficult)
  for (long i = 0; i < rep_count; ++i) {
    if (done[i]) continue;
    const auto& [rep, weight] = reps[i];
    std::uint64_t nc = 0, dd = 0;
    for (const ChordSet& t : tris) {
      PairClass c = classify_packed(rep, t, universe.crosses);
      if (c != PairClass::HasCommon) {
        ++nc;
        if (c == PairClass::Difficult) ++dd;
      }
    }
    nc *= weight;
    dd *= weight;
    no_common += nc;
    difficult += dd;
    if (ck_out.is_open()) {
#pragma omp critical(rotkit_census_checkpoint)
      {
        ck_out << i << ',' << nc << ',' << dd << '\n';
        ck_out.flush();
      }
    }
  }

  return {size, ExactCount(no_common), ExactCount(difficult), count_instances(size)};
}

CensusRow exact_census_naive(int size) {
  if (size < 3 || size > 7)
    throw std::invalid_argument("exact_census_naive: size must be in 3..7, got " +
                                std::to_string(size));
  auto tris = all_triangulations(size);
  std::uint64_t no_common = 0, difficult = 0;
  for (const auto& s : tris) {
    for (const auto& t : tris) {
      PairClass c = classify_pair(TreePairProblem(s, t));
      if (c != PairClass::HasCommon) {
        ++no_common;
        if (c == PairClass::Difficult) ++difficult;
      }
    }
  }
  return {size, ExactCount(no_common), ExactCount(difficult), count_instances(size)};
}

SampleRow sample_census(int size, std::uint64_t iterations, std::uint64_t seed, int workers) {
  if (size < 3) throw std::invalid_argument("sample_census: size must be >= 3");
  if (iterations < 1) throw std::invalid_argument("sample_census: iterations must be >= 1");
  int nw = resolve_workers(workers);

  std::uint64_t no_common = 0, difficult = 0;
  std::uint64_t base = iterations / nw, extra = iterations % nw;
#pragma omp parallel for schedule(static) num_threads(nw) reduction(+ : no_common, difficult)
  for (int w = 0; w < nw; ++w) {
    std::uint64_t quota = base + (std::uint64_t(w) < extra ? 1 : 0);
    SplitMix64 rng(derive_stream_seed(seed, std::uint64_t(w)));
    std::uint64_t nc = 0, dd = 0;
    for (std::uint64_t it = 0; it < quota; ++it) {
      BinaryTree a = remy_sample(size, rng);
      BinaryTree b = remy_sample(size, rng);
      TreePairProblem p(tree_to_triangulation(a), tree_to_triangulation(b));
      PairClass c = classify_pair(p);
      if (c != PairClass::HasCommon) {
        ++nc;
        if (c == PairClass::Difficult) ++dd;
      }
    }
    no_common += nc;
    difficult += dd;
  }
  return {size, iterations, no_common, difficult, seed, nw};
}

}  // namespace rotkit
