#include <doctest.h>

#include "helpers.hpp"
#include "tonnetz/errors.hpp"
#include "tonnetz/lattice.hpp"

using namespace tonnetz;

TEST_CASE("triangle of a word follows the gallery walk") {
  for (int len = 0; len <= 6; ++len)
    for (const auto& w : testing::words(len)) {
      GeneratorWord gw;
      for (int i : w) gw.push_back(generator_from_index(i));
      REQUIRE(testing::tri(triangle_of(from_word(gw))) == testing::walk(w));
    }
}

TEST_CASE("isometry of an element moves the reference triangle to its triangle") {
  for (const auto& f : ball(6)) REQUIRE(apply(perm_to_iso(f), kReferenceTriangle) == triangle_of(f));
}

TEST_CASE("generator isometries") {
  CHECK(apply(generator_isometry(1), VertexPoint{0, 1}) == VertexPoint{1, -1});
  CHECK(apply(generator_isometry(2), VertexPoint{1, 0}) == VertexPoint{-1, 1});
  CHECK(apply(generator_isometry(3), VertexPoint{0, 0}) == VertexPoint{1, 1});
  for (int i = 1; i <= 3; ++i) CHECK(generator_isometry(i).m.det() == -1);
}

TEST_CASE("flips") {
  const Triangle c = kReferenceTriangle;
  CHECK(flip(c, EdgeType::Fifth) == Triangle{{0, 0}, Orientation::Down});
  CHECK(flip(c, EdgeType::MinorThird) == Triangle{{0, 1}, Orientation::Down});
  CHECK(flip(c, EdgeType::MajorThird) == Triangle{{-1, 1}, Orientation::Down});
  for (const auto& f : ball(4)) {
    const Triangle t = triangle_of(f);
    std::set<oracle::Tri> expected;
    for (const auto& n : oracle::neighbours(testing::tri(t))) expected.insert(n);
    std::set<oracle::Tri> got;
    for (EdgeType e : {EdgeType::Fifth, EdgeType::MinorThird, EdgeType::MajorThird})
      got.insert(testing::tri(flip(t, e)));
    REQUIRE(got == expected);
  }
}

TEST_CASE("gallery distance against the oracle") {
  const auto dist = oracle::gallery(oracle::up(0, 0), 6);
  for (const auto& f : ball(6)) {
    const Triangle t = triangle_of(f);
    REQUIRE(gallery_distance_bfs(kReferenceTriangle, t) == dist.at(testing::tri(t)));
  }
  CHECK(gallery_distance_bfs(Triangle{{3, -2}, Orientation::Down}, Triangle{{3, -2}, Orientation::Down}) == 0);
}

TEST_CASE("vertices and containment") {
  const Triangle d{{0, 0}, Orientation::Down};
  const auto v = vertices(d);
  CHECK(contains(d, VertexPoint{1, -1}));
  CHECK_FALSE(contains(d, VertexPoint{0, 1}));
  CHECK(triangle_from_vertices({v[2], v[0], v[1]}) == d);
  CHECK_THROWS(triangle_from_vertices({VertexPoint{0, 0}, VertexPoint{2, 0}, VertexPoint{0, 1}}));
}

TEST_CASE("geometric coordinates match the window coordinates") {
  for (const auto& f : ball(6)) {
    REQUIRE(geometric_center_coords(triangle_of(f)) == center_coords(f));
    REQUIRE(perm_of_triangle(triangle_of(f)) == f);
  }
}

TEST_CASE("triangle text") {
  CHECK(to_string(kReferenceTriangle) == "U(0,0)");
  CHECK(to_string(Triangle{{-1, 2}, Orientation::Down}) == "D(-1,2)");
  CHECK(parse_triangle("D(-1,2)") == Triangle{{-1, 2}, Orientation::Down});
  CHECK_THROWS_AS(parse_triangle("X(0,0)"), ParseError);
}
