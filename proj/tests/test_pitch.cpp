#include <doctest.h>

#include "helpers.hpp"
#include "tonnetz/errors.hpp"
#include "tonnetz/pitch.hpp"

using namespace tonnetz;

TEST_CASE("vertex spelling matches the line of fifths") {
  for (Int p = -8; p <= 8; ++p)
    for (Int q = -6; q <= 6; ++q) {
      const NoteName n = spell_vertex({p, q});
      REQUIRE(to_string(n) == oracle::note(p, q));
      REQUIRE(n.comma_level == q);
      REQUIRE(vertex_of(n) == VertexPoint{p, q});
    }
}

TEST_CASE("accidentals") {
  CHECK(to_string(spell_vertex({-1, 2})) == "C#");
  CHECK(spelling(14) == "Cx");
  CHECK(spelling(21) == "C#x");
  CHECK(spelling(-14) == "Cbb");
  CHECK(spelling(-1) == "F");
  CHECK(spelling(5) == "B");
  CHECK(spelling(6) == "F#");
}

TEST_CASE("default placement reproduces the familiar neighbourhood of C") {
  CHECK(parse_note("C#").comma_level == 2);
  CHECK(vertex_of(parse_note("C#")) == VertexPoint{-1, 2});
  CHECK(vertex_of(parse_note("G#")) == VertexPoint{0, 2});
  CHECK(vertex_of(parse_note("Eb")) == VertexPoint{1, -1});
  CHECK(vertex_of(parse_note("Ab")) == VertexPoint{0, -1});
  CHECK(vertex_of(parse_note("Bb")) == VertexPoint{2, -1});
  CHECK(vertex_of(parse_note("A")) == VertexPoint{-1, 1});
  CHECK(vertex_of(parse_note("D")) == VertexPoint{-2, 1});
  CHECK(vertex_of(parse_note("B")) == VertexPoint{1, 1});
  CHECK(vertex_of(parse_note("E")) == VertexPoint{0, 1});
  CHECK(vertex_of(parse_note("C")) == VertexPoint{0, 0});
}

TEST_CASE("chord symbols") {
  CHECK(parse_chord("C").triangle == Triangle{{0, 0}, Orientation::Up});
  CHECK(parse_chord("Cm").triangle == Triangle{{0, 0}, Orientation::Down});
  CHECK(parse_chord("Cmin").triangle == parse_chord("Cm").triangle);
  CHECK(parse_chord("C\xE2\x99\xAFm").triangle == parse_chord("C#m").triangle);
  CHECK(parse_chord("D\xE2\x99\xAD").name.root.fifth_index == -5);
  CHECK(parse_chord("C\xF0\x9D\x84\xAA").name.root.fifth_index == 14);
  CHECK(parse_chord("E[q=0]").triangle == Triangle{{4, 0}, Orientation::Up});
  CHECK(parse_chord("E", Int{0}).triangle == Triangle{{4, 0}, Orientation::Up});
  CHECK(to_string(parse_chord("Ab[q=-1]").name, true) == "Ab[q=-1]");
  CHECK_THROWS_AS(parse_chord("H"), ParseError);
  CHECK_THROWS_AS(parse_chord("Cmaj"), ParseError);
  CHECK_THROWS_AS(parse_chord("C[q=]"), ParseError);
  CHECK_THROWS_AS(parse_chord(""), ParseError);
}

TEST_CASE("chord names of triangles") {
  CHECK(to_string(name_triangle({{0, 1}, Orientation::Down})) == "Em");
  CHECK(to_string(name_triangle({{-1, 2}, Orientation::Down})) == "C#m");
  CHECK(to_string(name_triangle({{-1, 2}, Orientation::Up})) == "C#");
  for (Int p = -4; p <= 4; ++p)
    for (Int q = -4; q <= 4; ++q)
      for (Orientation o : {Orientation::Up, Orientation::Down}) {
        const Triangle t{{p, q}, o};
        REQUIRE(triangle_of(name_triangle(t)) == t);
      }
}

TEST_CASE("pitch classes") {
  CHECK(pitch_class(parse_note("C")) == 0);
  CHECK(pitch_class(parse_note("E#")) == 5);
  CHECK(pitch_class(parse_note("F")) == 5);
  CHECK(pitch_class(parse_note("Cb")) == 11);
  CHECK(pitch_class(parse_note("Cx")) == 2);
}
