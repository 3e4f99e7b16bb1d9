#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "tonnetz/affine_permutation.hpp"
#include "tonnetz/errors.hpp"

using namespace tonnetz;
using testing::win;

TEST_CASE("generator windows") {
  for (int i = 1; i <= 3; ++i) CHECK(win(generator(i)) == oracle::generator(i));
  CHECK(to_string(generator(1)) == "[0,-1,1]");
  CHECK(to_string(generator(2)) == "[-1,1,0]");
  CHECK(to_string(generator(3)) == "[-2,0,2]");
  CHECK_THROWS_AS(generator(4), std::out_of_range);
}

TEST_CASE("window constructor validates") {
  CHECK_THROWS_AS(AffinePermutation(1, 1, -2), std::invalid_argument);
  CHECK_THROWS_AS(AffinePermutation(0, 0, 1), std::invalid_argument);
  CHECK_NOTHROW(AffinePermutation(-3, 2, 1));
}

TEST_CASE("eval and compose agree with pointwise oracle") {
  const auto elems = ball(4);
  for (const auto& f : elems)
    for (Int n = -7; n <= 7; ++n) REQUIRE(eval(f, n) == oracle::apply(win(f), n));
  for (const auto& f : elems)
    for (const auto& g : elems) REQUIRE(win(compose(f, g)) == oracle::compose(win(f), win(g)));
}

TEST_CASE("right multiplication by generators") {
  const AffinePermutation f(-3, 2, 1);
  CHECK(right_mult_generator(f, 1) == AffinePermutation(2, -3, 1));
  CHECK(right_mult_generator(f, 2) == AffinePermutation(-3, 1, 2));
  CHECK(right_mult_generator(f, 3) == AffinePermutation(-2, 2, 0));
}

TEST_CASE("inverse") {
  for (const auto& f : ball(5)) {
    REQUIRE(compose(f, inverse(f)) == identity());
    REQUIRE(win(compose(inverse(f), f)) == oracle::kIdentity);
  }
}

TEST_CASE("length against inversion count") {
  for (const auto& f : ball(7)) REQUIRE(length(f) == oracle::shi_length(win(f)));
}

TEST_CASE("from_word against the oracle for every word up to length 6") {
  for (int len = 0; len <= 6; ++len)
    for (const auto& w : testing::words(len)) {
      GeneratorWord gw;
      for (int i : w) gw.push_back(generator_from_index(i));
      REQUIRE(win(from_word(gw)) == oracle::from_word(w));
    }
}

TEST_CASE("reduce") {
  CHECK(to_string(reduce(parse_window("[-3,2,1]"))) == "s2 s3 s2");
  CHECK(to_string(reduce(identity())) == "e");
  CHECK(reduce(from_word({Generator::S1, Generator::S1})).empty());
  for (const auto& f : ball(6)) {
    const auto w = reduce(f);
    REQUIRE(win(f) == oracle::from_word(testing::ints(w)));
    REQUIRE(static_cast<Int>(w.size()) == oracle::shi_length(win(f)));
  }
}

TEST_CASE("descents are the shortening generators") {
  for (const auto& f : ball(5)) {
    const auto ds = right_descents(f);
    for (int i = 1; i <= 3; ++i) {
      const auto g = oracle::compose(win(f), oracle::generator(i));
      const bool shorter = oracle::shi_length(g) < oracle::shi_length(win(f));
      const bool listed = std::find(ds.begin(), ds.end(), generator_from_index(i)) != ds.end();
      REQUIRE(shorter == listed);
    }
  }
}

TEST_CASE("order and classification") {
  CHECK(classify(identity()) == ElementType::Identity);
  CHECK(classify(generator(1)) == ElementType::Reflection);
  CHECK(classify(parse_window("[-3,2,1]")) == ElementType::Reflection);
  CHECK(classify(from_word(parse_word("s2s3"))) == ElementType::Rotation);
  CHECK(order(from_word(parse_word("s2s3"))) == 3);
  CHECK(classify(parse_window("[2,-3,1]")) == ElementType::Translation);
  CHECK(classify(from_word(parse_word("s1 s2 s3"))) == ElementType::GlideReflection);
  CHECK_FALSE(order(parse_window("[2,-3,1]")).has_value());
}

TEST_CASE("parity is residue-permutation sign") {
  for (const auto& f : ball(6)) {
    const auto p = oracle::residue_perm(win(f));
    const int moved = (p[0] != 0) + (p[1] != 1) + (p[2] != 2);
    // Identity or a 3-cycle is even; a transposition moves exactly two.
    REQUIRE(is_even(f) == (moved != 2));
  }
}

TEST_CASE("center coordinates") {
  CHECK(center_coords(identity()) == TriangleCoords{0, 0, 0});
  CHECK(center_coords(parse_window("[-3,2,1]")) == TriangleCoords{0, 2, -2});
  std::set<TriangleCoords> seen;
  for (const auto& f : ball(6)) {
    REQUIRE(triangle_to_perm(center_coords(f)) == f);
    REQUIRE(seen.insert(center_coords(f)).second);
  }
  CHECK_THROWS_AS(triangle_to_perm({1, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(triangle_to_perm({2, 0, -2}), std::invalid_argument);
}

TEST_CASE("corollary distance differs from length on s2 s3 s2") {
  const auto f = parse_window("[-3,2,1]");
  CHECK(length(f) == 3);
  CHECK(corollary_distance(f) == 2);
  CHECK(corollary_distance(identity()) == 0);
  for (Generator g : kGenerators) CHECK(corollary_distance(generator(g)) == 1);
}

TEST_CASE("ball sizes") {
  // 1 + 3 + 6 + 9 + ... : sphere of radius r > 0 has 3r elements.
  for (int r = 0; r <= 8; ++r) CHECK(ball(r).size() == static_cast<std::size_t>(1 + 3 * r * (r + 1) / 2));
}

TEST_CASE("text forms") {
  CHECK(parse_window(" [ -3 , 2 , 1 ] ") == AffinePermutation(-3, 2, 1));
  CHECK(parse_window("[\xE2\x88\x92" "3,2,1]") == AffinePermutation(-3, 2, 1));
  CHECK_THROWS_AS(parse_window("[1,1,1]"), ParseError);
  CHECK_THROWS_AS(parse_window("[0,0"), ParseError);
  CHECK_THROWS_AS(parse_window("(0,0,0)"), ParseError);
  CHECK(parse_word("s2s3s2") == parse_word("s2 s3 s2"));
  CHECK(parse_word("s2.s3.s2").size() == 3);
  CHECK(parse_word("e").empty());
  CHECK_THROWS_AS(parse_word("s4"), ParseError);
  CHECK_THROWS_AS(parse_word("t1"), ParseError);
  CHECK(to_string(TriangleCoords{0, 2, -2}) == "(0,2,-2)");
}
