#include "rotkit/triangulation.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <utility>

#include "rotkit/errors.hpp"

namespace rotkit {

namespace {

std::string diag_str(Diagonal d) {
  return "(" + std::to_string(d.a) + "," + std::to_string(d.b) + ")";
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += "; ";
    out += p;
  }
  return out;
}

}  // namespace

bool diagonals_cross(Diagonal d1, Diagonal d2) {
  return (d1.a < d2.a && d2.a < d1.b && d1.b < d2.b) ||
         (d2.a < d1.a && d1.a < d2.b && d2.b < d1.b);
}

Triangulation::Triangulation(int m, std::vector<Diagonal> diagonals)
    : m_(m), diags_(std::move(diagonals)) {
  std::sort(diags_.begin(), diags_.end());
}

bool Triangulation::contains(Diagonal d) const {
  return std::binary_search(diags_.begin(), diags_.end(), d);
}

std::string Triangulation::to_string() const {
  std::string out = std::to_string(m_) + ":";
  for (std::size_t i = 0; i < diags_.size(); ++i) {
    if (i > 0) out += ",";
    out += diag_str(diags_[i]);
  }
  return out;
}

Triangulation Triangulation::parse(std::string_view text) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) -> void { throw ParseError(what, pos); };
  auto read_int = [&]() -> int {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected an integer");
    if (pos - start > 9) fail("integer too long");
    int value = 0;
    for (std::size_t i = start; i < pos; ++i) value = value * 10 + (text[i] - '0');
    return value;
  };
  auto expect = [&](char c) {
    if (pos >= text.size() || text[pos] != c) fail(std::string("expected '") + c + "'");
    ++pos;
  };

  int m = read_int();
  expect(':');
  std::vector<Diagonal> diags;
  if (pos < text.size()) {
    for (;;) {
      expect('(');
      int a = read_int();
      expect(',');
      int b = read_int();
      expect(')');
      diags.push_back({a, b});
      if (pos == text.size()) break;
      expect(',');
    }
  }

  Triangulation tri(m, std::move(diags));
  auto errors = validate(tri);
  if (!errors.empty()) throw std::invalid_argument("invalid triangulation: " + join(errors));
  return tri;
}

std::vector<std::string> validate(const Triangulation& tri) {
  std::vector<std::string> errors;
  int m = tri.vertex_count();
  const auto& ds = tri.diagonals();
  if (m < 3) {
    errors.push_back("polygon needs at least 3 vertices, got " + std::to_string(m));
    return errors;
  }
  if (static_cast<int>(ds.size()) != m - 3)
    errors.push_back("expected " + std::to_string(m - 3) + " diagonals, got " +
                     std::to_string(ds.size()));
  for (Diagonal d : ds) {
    if (!(0 <= d.a && d.a < d.b && d.b < m))
      errors.push_back("endpoints of " + diag_str(d) + " are out of range or unordered");
    else if (d.b - d.a < 2 || (d.a == 0 && d.b == m - 1))
      errors.push_back(diag_str(d) + " is a polygon side, not a diagonal");
  }
  for (std::size_t i = 0; i + 1 < ds.size(); ++i)
    if (ds[i] == ds[i + 1]) errors.push_back("duplicate diagonal " + diag_str(ds[i]));
  for (std::size_t i = 0; i < ds.size(); ++i)
    for (std::size_t j = i + 1; j < ds.size(); ++j)
      if (diagonals_cross(ds[i], ds[j]))
        errors.push_back(diag_str(ds[i]) + " crosses " + diag_str(ds[j]));
  return errors;
}

Triangulation apply_dihedral(const Triangulation& tri, DihedralElement g) {
  int m = tri.vertex_count();
  int shift = ((g.shift % m) + m) % m;
  std::vector<Diagonal> out;
  out.reserve(tri.diagonals().size());
  for (Diagonal d : tri.diagonals()) {
    int x = g.reflected ? (m - 1 - d.a) % m : d.a;
    int y = g.reflected ? (m - 1 - d.b) % m : d.b;
    x = (x + shift) % m;
    y = (y + shift) % m;
    if (x > y) std::swap(x, y);
    out.push_back({x, y});
  }
  return Triangulation(m, std::move(out));
}

CanonicalForm canonical_form(const Triangulation& tri) {
  int m = tri.vertex_count();
  std::vector<Triangulation> images;
  images.reserve(2 * m);
  for (int refl = 0; refl < 2; ++refl)
    for (int shift = 0; shift < m; ++shift)
      images.push_back(apply_dihedral(tri, {shift, refl == 1}));
  std::sort(images.begin(), images.end());
  int orbit = static_cast<int>(std::unique(images.begin(), images.end()) - images.begin());
  return {std::move(images.front()), orbit};
}

FlipResult flip(const Triangulation& tri, Diagonal d) {
  if (!tri.contains(d))
    throw std::invalid_argument("flip: diagonal " + diag_str(d) + " is not in the triangulation");
  int m = tri.vertex_count();
  auto is_edge = [&](int x, int y) {
    if (x > y) std::swap(x, y);
    return y - x == 1 || (x == 0 && y == m - 1) || tri.contains({x, y});
  };
  // The two triangles incident to d have apexes on opposite sides of d; a
  // vertex p is an apex exactly when (d.a,p) and (p,d.b) are both edges.
  int apex[2];
  int found = 0;
  for (int p = 0; p < m && found < 2; ++p) {
    if (p == d.a || p == d.b) continue;
    if (is_edge(d.a, p) && is_edge(p, d.b)) apex[found++] = p;
  }
  if (found != 2)
    throw std::invalid_argument("flip: triangulation is not valid around " + diag_str(d));
  Diagonal created{std::min(apex[0], apex[1]), std::max(apex[0], apex[1])};
  std::vector<Diagonal> out;
  out.reserve(tri.diagonals().size());
  for (Diagonal e : tri.diagonals())
    if (e != d) out.push_back(e);
  out.push_back(created);
  return {Triangulation(m, std::move(out)), created};
}

void enumerate_triangulations(int size, const std::function<void(const Triangulation&)>& fn) {
  if (size < 1) throw std::invalid_argument("enumerate_triangulations: size must be >= 1");
  int m = size + 2;
  std::vector<Diagonal> buf;
  buf.reserve(m - 3);
  // region(i, j) triangulates the sub-polygon with hull chord (i, j); cont()
  // fires once for each completed triangulation of the region.
  std::function<void(int, int, const std::function<void()>&)> region =
      [&](int i, int j, const std::function<void()>& cont) {
        if (j - i < 2) {
          cont();
          return;
        }
        for (int k = i + 1; k < j; ++k) {
          std::size_t base = buf.size();
          if (k - i >= 2) buf.push_back({i, k});
          if (j - k >= 2) buf.push_back({k, j});
          region(i, k, [&] { region(k, j, cont); });
          buf.resize(base);
        }
      };
  region(0, m - 1, [&] { fn(Triangulation(m, buf)); });
}

std::vector<Triangulation> all_triangulations(int size) {
  std::vector<Triangulation> out;
  enumerate_triangulations(size, [&](const Triangulation& t) { out.push_back(t); });
  return out;
}

void enumerate_class_representatives(int size,
                                     const std::function<void(const Triangulation&, int)>& fn) {
  enumerate_triangulations(size, [&](const Triangulation& t) {
    CanonicalForm c = canonical_form(t);
    if (c.representative == t) fn(t, c.orbit_size);
  });
}

}  // namespace rotkit
