#include <doctest.h>

#include <map>

#include "helpers.hpp"
#include "tonnetz/errors.hpp"
#include "tonnetz/subgroups.hpp"

using namespace tonnetz;

TEST_CASE("translation generators") {
  CHECK(to_string(translation_generator(1)) == "[2,-3,1]");
  CHECK(to_string(translation_generator(2)) == "[-1,3,-2]");
  CHECK(to_string(translation_generator(3)) == "[-4,0,4]");
  // t1 = (s2 s3 s2) s1
  CHECK(translation_generator(1) == from_word(parse_word("s2 s3 s2 s1")));
  CHECK(translation_offset({1, 0}) == VertexPoint{-1, 2});
  CHECK(translation_offset({0, 1}) == VertexPoint{2, -1});
}

TEST_CASE("translation coordinates") {
  for (Int a = -3; a <= 3; ++a)
    for (Int b = -3; b <= 3; ++b) {
      const auto t = translation_element({a, b});
      REQUIRE(is_translation(t));
      REQUIRE(translation_coords(t) == TranslationVector{a, b});
      const auto p = oracle::residue_perm(testing::win(t));
      REQUIRE(p == std::array<int, 3>{0, 1, 2});
    }
  CHECK_THROWS_AS(translation_coords(generator(1)), NotATranslation);
}

TEST_CASE("quotient multiplication equals the residue permutation table") {
  // Map each coset representative to its residue permutation and compare
  // products in both worlds.
  std::map<std::array<int, 3>, FiniteS3> by_perm;
  for (FiniteS3 s : kFiniteS3) by_perm[oracle::residue_perm(testing::win(s3_element(s)))] = s;
  REQUIRE(by_perm.size() == 6);
  for (FiniteS3 x : kFiniteS3)
    for (FiniteS3 y : kFiniteS3) {
      const auto px = oracle::residue_perm(testing::win(s3_element(x)));
      const auto py = oracle::residue_perm(testing::win(s3_element(y)));
      std::array<int, 3> pxy{};
      for (int r = 0; r < 3; ++r) pxy[r] = px[py[r]];
      REQUIRE(s3_multiply(x, y) == by_perm.at(pxy));
    }
}

TEST_CASE("decomposition") {
  for (const auto& f : ball(6)) {
    const auto d = decompose(f);
    REQUIRE(compose(translation_element(d.translation), s3_element(d.finite)) == f);
    REQUIRE(coset_mod_T(f) == d.finite);
    REQUIRE(hexagon_of(f).base == d.translation);
  }
  const auto d = decompose(parse_window("[-3,2,1]"));
  CHECK(d.finite == FiniteS3::S2S3S2);
  CHECK(d.translation == TranslationVector{0, 0});
}

TEST_CASE("conjugation") {
  for (int i = 1; i <= 3; ++i)
    for (Int a = -2; a <= 2; ++a)
      for (Int b = -2; b <= 2; ++b) {
        const auto s = generator(i);
        const auto c = compose(compose(s, translation_element({a, b})), s);
        REQUIRE(translation_coords(c) == conjugate_translation(i, {a, b}));
      }
}

TEST_CASE("s3 words") {
  CHECK(to_string(s3_word(FiniteS3::S2S3S2)) == "s2 s3 s2");
  CHECK(to_string(FiniteS3::E) == "e");
  CHECK(to_string(FiniteS3::S3S2) == "s3 s2");
}

TEST_CASE("translation text") {
  CHECK(to_string(TranslationVector{1, -2}) == "t1^{1} t2^{-2}");
  CHECK(parse_translation("t1^{1} t2^{-2}") == TranslationVector{1, -2});
  CHECK_THROWS_AS(parse_translation("t3^{1}"), ParseError);
}
