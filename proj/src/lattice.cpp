#include "tonnetz/lattice.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>

#include "text_util.hpp"

namespace tonnetz {

Isometry identity_isometry() { return {}; }

Isometry generator_isometry(Generator g) {
  switch (g) {
    // Fixes the C-G line: (p,q) -> (p+q, -q).
    case Generator::S1: return {{{1, 1, 0, -1}}, {0, 0}};
    // Fixes the C-E line: (p,q) -> (-p, p+q).
    case Generator::S2: return {{{-1, 0, 1, 1}}, {0, 0}};
    // Fixes the E-G line: (p,q) -> (1-q, 1-p).
    case Generator::S3: return {{{0, -1, -1, 0}}, {1, 1}};
  }
  throw std::out_of_range("bad generator");
}

Isometry generator_isometry(int i) { return generator_isometry(generator_from_index(i)); }

Isometry compose_iso(const Isometry& u, const Isometry& w) {
  return {u.m * w.m, u.m * w.v + u.v};
}

VertexPoint apply(const Isometry& u, VertexPoint x) { return u.m * x + u.v; }

Triangle apply(const Isometry& u, const Triangle& t) {
  auto vs = vertices(t);
  for (auto& v : vs) v = apply(u, v);
  return triangle_from_vertices(vs);
}

Isometry perm_to_iso(const AffinePermutation& f) {
  Isometry out = identity_isometry();
  for (Generator g : reduce(f)) out = compose_iso(out, generator_isometry(g));
  return out;
}

std::array<VertexPoint, 3> vertices(const Triangle& t) {
  const VertexPoint v = t.root;
  if (t.orientation == Orientation::Up) return {v, v + kFifth, v + kMajorThird};
  return {v, v + kFifth, v + kFifth - kMajorThird};
}

bool contains(const Triangle& t, VertexPoint x) {
  const auto vs = vertices(t);
  return std::find(vs.begin(), vs.end(), x) != vs.end();
}

Triangle triangle_from_vertices(std::array<VertexPoint, 3> pts) {
  std::sort(pts.begin(), pts.end());
  for (const VertexPoint& v : pts) {
    for (Orientation o : {Orientation::Up, Orientation::Down}) {
      Triangle t{v, o};
      auto vs = vertices(t);
      std::sort(vs.begin(), vs.end());
      if (vs == pts) return t;
    }
  }
  throw std::invalid_argument("points do not form a lattice triangle");
}

Triangle triangle_of(const AffinePermutation& f) {
  return apply(perm_to_iso(f), kReferenceTriangle);
}

ScaledCentroid scaled_centroid(const Triangle& t) {
  // Vertex (p,q) sits at column 2p + q, row q.
  Int x3 = 0, y3 = 0;
  for (const VertexPoint& v : vertices(t)) {
    x3 += 2 * v.p + v.q;
    y3 += v.q;
  }
  return {x3, y3};
}

TriangleCoords geometric_center_coords(const Triangle& t) {
  const ScaledCentroid ref = scaled_centroid(kReferenceTriangle);
  const ScaledCentroid c = scaled_centroid(t);
  const Int dx = (c.x3 - ref.x3) / 3;  // always a whole number of columns
  const Int dy3 = c.y3 - ref.y3;
  return {-dx, (dx + dy3) / 2, (dx - dy3) / 2};
}

AffinePermutation perm_of_triangle(const Triangle& t) {
  return triangle_to_perm(geometric_center_coords(t));
}

Triangle flip(const Triangle& t, EdgeType edge) {
  const VertexPoint v = t.root;
  if (t.orientation == Orientation::Up) {
    switch (edge) {
      case EdgeType::Fifth: return {v, Orientation::Down};
      case EdgeType::MinorThird: return {v + kMajorThird, Orientation::Down};
      case EdgeType::MajorThird: return {v - kFifth + kMajorThird, Orientation::Down};
    }
  } else {
    switch (edge) {
      case EdgeType::Fifth: return {v, Orientation::Up};
      case EdgeType::MajorThird: return {v + kFifth - kMajorThird, Orientation::Up};
      case EdgeType::MinorThird: return {v - kMajorThird, Orientation::Up};
    }
  }
  throw std::invalid_argument("bad edge type");
}

Int gallery_distance_bfs(const Triangle& from, const Triangle& to) {
  if (from == to) return 0;
  std::unordered_map<Triangle, Int> dist{{from, 0}};
  std::deque<Triangle> frontier{from};
  while (!frontier.empty()) {
    const Triangle t = frontier.front();
    frontier.pop_front();
    const Int d = dist.at(t);
    for (EdgeType e : {EdgeType::Fifth, EdgeType::MinorThird, EdgeType::MajorThird}) {
      const Triangle n = flip(t, e);
      if (n == to) return d + 1;
      if (dist.emplace(n, d + 1).second) frontier.push_back(n);
    }
  }
  throw std::logic_error("gallery search exhausted");  // unreachable: the lattice is connected
}

std::string to_string(VertexPoint v) {
  return "(" + std::to_string(v.p) + "," + std::to_string(v.q) + ")";
}

std::string to_string(const Triangle& t) {
  return (t.orientation == Orientation::Up ? "U" : "D") + to_string(t.root);
}

std::string to_string(EdgeType e) {
  switch (e) {
    case EdgeType::Fifth: return "fifth";
    case EdgeType::MajorThird: return "major-third";
    case EdgeType::MinorThird: return "minor-third";
  }
  return "?";
}

Triangle parse_triangle(std::string_view text) {
  detail::Scanner s(text);
  s.skip_space();
  Orientation o;
  if (s.consume('U')) o = Orientation::Up;
  else if (s.consume('D')) o = Orientation::Down;
  else s.fail("expected 'U' or 'D'");
  s.expect('(');
  s.skip_space();
  const Int p = s.integer();
  s.skip_space();
  s.expect(',');
  s.skip_space();
  const Int q = s.integer();
  s.skip_space();
  s.expect(')');
  s.skip_space();
  s.expect_end();
  return {{p, q}, o};
}

}  // namespace tonnetz
