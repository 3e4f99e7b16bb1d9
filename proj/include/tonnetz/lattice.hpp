#pragma once

// Concrete realization of the Tonnetz: note vertices are integer points
// (p, q) = p fifths + q major thirds above C, triads are lattice triangles,
// and group elements act as integer affine isometries.
//
// Up(v)   = {v, v + fifth, v + third}            (major triad rooted at v)
// Down(v) = {v, v + fifth, v + fifth - third}    (minor triad rooted at v)

#include <array>
#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

#include "tonnetz/affine_permutation.hpp"

namespace tonnetz {

struct VertexPoint {
  Int p = 0;
  Int q = 0;

  friend VertexPoint operator+(VertexPoint x, VertexPoint y) { return {x.p + y.p, x.q + y.q}; }
  friend VertexPoint operator-(VertexPoint x, VertexPoint y) { return {x.p - y.p, x.q - y.q}; }
  friend VertexPoint operator-(VertexPoint x) { return {-x.p, -x.q}; }
  friend VertexPoint operator*(Int k, VertexPoint x) { return {k * x.p, k * x.q}; }
  friend auto operator<=>(const VertexPoint&, const VertexPoint&) = default;
};

inline constexpr VertexPoint kFifth{1, 0};
inline constexpr VertexPoint kMajorThird{0, 1};

enum class Orientation { Up, Down };

struct Triangle {
  VertexPoint root;
  Orientation orientation = Orientation::Up;
  friend auto operator<=>(const Triangle&, const Triangle&) = default;
};

// The reference triangle C-E-G, written (*) in diagrams.
inline constexpr Triangle kReferenceTriangle{{0, 0}, Orientation::Up};

enum class EdgeType { Fifth, MajorThird, MinorThird };

struct Mat2 {
  std::array<Int, 4> e{1, 0, 0, 1};  // row-major
  static Mat2 identity() { return {}; }
  Int det() const { return e[0] * e[3] - e[1] * e[2]; }
  Int trace() const { return e[0] + e[3]; }
  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {{x.e[0] * y.e[0] + x.e[1] * y.e[2], x.e[0] * y.e[1] + x.e[1] * y.e[3],
             x.e[2] * y.e[0] + x.e[3] * y.e[2], x.e[2] * y.e[1] + x.e[3] * y.e[3]}};
  }
  friend VertexPoint operator*(const Mat2& m, VertexPoint v) {
    return {m.e[0] * v.p + m.e[1] * v.q, m.e[2] * v.p + m.e[3] * v.q};
  }
  friend auto operator<=>(const Mat2&, const Mat2&) = default;
};

// x -> m x + v on vertex points.
struct Isometry {
  Mat2 m;
  VertexPoint v;
  friend auto operator<=>(const Isometry&, const Isometry&) = default;
};

Isometry identity_isometry();
Isometry generator_isometry(Generator g);
Isometry generator_isometry(int i);

// (u o w)(x) = u(w(x)).
Isometry compose_iso(const Isometry& u, const Isometry& w);
VertexPoint apply(const Isometry& u, VertexPoint x);
Triangle apply(const Isometry& u, const Triangle& t);

// Homomorphism from the group to lattice isometries.
Isometry perm_to_iso(const AffinePermutation& f);

std::array<VertexPoint, 3> vertices(const Triangle& t);
bool contains(const Triangle& t, VertexPoint x);

// Normalizes an unordered vertex triple. Throws std::invalid_argument if the
// points are not the corners of a single lattice triangle.
Triangle triangle_from_vertices(std::array<VertexPoint, 3> pts);

// Image of the reference triangle under f.
Triangle triangle_of(const AffinePermutation& f);

// The group element whose triangle is t (inverse of triangle_of).
AffinePermutation perm_of_triangle(const Triangle& t);

// Axis coordinates of the center of t, computed from geometry alone:
// -c1 is the horizontal offset in half-edge columns from the center of (*),
// c2 - c3 is three times the vertical offset in rows.
TriangleCoords geometric_center_coords(const Triangle& t);

// Triangle across the edge of the given interval type.
Triangle flip(const Triangle& t, EdgeType edge);

// Minimal number of edge flips from `from` to `to`, by breadth-first search.
Int gallery_distance_bfs(const Triangle& from, const Triangle& to);

// Three times the centroid in diagram units: x counts half-edge columns,
// y counts rows (row height = triangle height).
struct ScaledCentroid {
  Int x3 = 0;
  Int y3 = 0;
};
ScaledCentroid scaled_centroid(const Triangle& t);

// Text form "U(p,q)" / "D(p,q)".
std::string to_string(const Triangle& t);
std::string to_string(VertexPoint v);
std::string to_string(EdgeType e);
Triangle parse_triangle(std::string_view text);

}  // namespace tonnetz

template <>
struct std::hash<tonnetz::VertexPoint> {
  std::size_t operator()(const tonnetz::VertexPoint& v) const noexcept {
    auto h = static_cast<std::uint64_t>(v.p) * 0x9E3779B97F4A7C15ULL;
    h ^= static_cast<std::uint64_t>(v.q) + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

template <>
struct std::hash<tonnetz::Triangle> {
  std::size_t operator()(const tonnetz::Triangle& t) const noexcept {
    return std::hash<tonnetz::VertexPoint>{}(t.root) * 2 +
           (t.orientation == tonnetz::Orientation::Down ? 1 : 0);
  }
};
