#pragma once

#include <compare>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace rotkit {

// Chord of the labeled convex polygon, endpoints a < b.
struct Diagonal {
  int a = 0;
  int b = 0;

  friend auto operator<=>(const Diagonal&, const Diagonal&) = default;
};

// True iff the chords cross in the open interior of the polygon. Chords that
// share an endpoint do not cross.
bool diagonals_cross(Diagonal d1, Diagonal d2);

// Triangulation of the convex m-gon, vertices 0..m-1 labeled clockwise with
// side (0, m-1) marked as the root side. A full triangulation carries m-3
// pairwise non-crossing diagonals; the list is kept sorted.
class Triangulation {
 public:
  Triangulation() = default;
  Triangulation(int m, std::vector<Diagonal> diagonals);

  // Text form "m:(a,b),(c,d),...". Throws ParseError on malformed text and
  // std::invalid_argument when the parsed value fails validate().
  static Triangulation parse(std::string_view text);

  int vertex_count() const { return m_; }
  int size() const { return m_ - 2; }  // size of the dual tree
  const std::vector<Diagonal>& diagonals() const { return diags_; }
  bool contains(Diagonal d) const;
  std::string to_string() const;

  friend auto operator<=>(const Triangulation&, const Triangulation&) = default;

 private:
  int m_ = 0;
  std::vector<Diagonal> diags_;
};

// Empty result means valid; otherwise one message per violation (wrong
// diagonal count, out-of-range or degenerate endpoints, duplicates, crossing
// pairs).
std::vector<std::string> validate(const Triangulation& tri);

// Symmetry of the m-gon: v -> (v + shift) mod m, preceded by the reflection
// v -> (m-1-v) mod m when `reflected` is set. The group has order 2m.
struct DihedralElement {
  int shift = 0;
  bool reflected = false;
};

Triangulation apply_dihedral(const Triangulation& tri, DihedralElement g);

struct CanonicalForm {
  Triangulation representative;  // lexicographically least dihedral image
  int orbit_size = 0;            // number of distinct images; divides 2m
};

CanonicalForm canonical_form(const Triangulation& tri);

struct FlipResult {
  Triangulation result;
  Diagonal created;
};

// Replaces diagonal d by the opposite diagonal of the quadrilateral formed by
// its two incident triangles. Throws when d is not present. Involution: the
// created diagonal flips back to d.
FlipResult flip(const Triangulation& tri, Diagonal d);

// Every triangulation of the (size+2)-gon exactly once. Order: recursive by
// the apex of the triangle resting on the root side, ascending, then by the
// left sub-region, then the right.
void enumerate_triangulations(int size, const std::function<void(const Triangulation&)>& fn);
std::vector<Triangulation> all_triangulations(int size);

// The canonical member of each dihedral orbit together with its orbit size.
// Orbit sizes summed over a full enumeration give catalan(size).
void enumerate_class_representatives(int size,
                                     const std::function<void(const Triangulation&, int)>& fn);

}  // namespace rotkit
