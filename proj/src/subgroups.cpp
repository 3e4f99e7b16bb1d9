#include "tonnetz/subgroups.hpp"

#include "text_util.hpp"

namespace tonnetz {

namespace {

// Translations keep residues in place, so their windows are
// [-1,0,1] + 3k with k summing to zero, and k adds under composition.
std::array<Int, 3> shift_of(const AffinePermutation& t) {
  return {(t.a() + 1) / 3, t.b() / 3, (t.c() - 1) / 3};
}

constexpr VertexPoint kT1Offset{-1, 2};  // two rows straight up
constexpr VertexPoint kT2Offset{2, -1};  // towards the lower right

}  // namespace

AffinePermutation translation_generator(int i) {
  using G = Generator;
  switch (i) {
    case 1: return from_word({G::S2, G::S3, G::S2, G::S1});
    case 2: return from_word({G::S3, G::S1, G::S3, G::S2});
    case 3: return from_word({G::S1, G::S2, G::S1, G::S3});
    default: throw std::out_of_range("translation index must be 1, 2 or 3");
  }
}

bool is_translation(const AffinePermutation& f) {
  return perm_to_iso(f).m == Mat2::identity();
}

VertexPoint translation_offset(TranslationVector t) {
  return t.e1 * kT1Offset + t.e2 * kT2Offset;
}

TranslationVector translation_coords(const AffinePermutation& f) {
  const Isometry iso = perm_to_iso(f);
  if (iso.m != Mat2::identity()) throw NotATranslation(f);
  // Invert v = e1 (-1,2) + e2 (2,-1); the lattice of offsets has index 3.
  const Int x = iso.v.p, y = iso.v.q;
  return {(x + 2 * y) / 3, (2 * x + y) / 3};
}

AffinePermutation translation_element(TranslationVector t) {
  static const std::array<Int, 3> k1 = shift_of(translation_generator(1));
  static const std::array<Int, 3> k2 = shift_of(translation_generator(2));
  std::array<Int, 3> k{};
  for (int i = 0; i < 3; ++i) k[i] = t.e1 * k1[i] + t.e2 * k2[i];
  return AffinePermutation(-1 + 3 * k[0], 3 * k[1], 1 + 3 * k[2]);
}

GeneratorWord s3_word(FiniteS3 s) {
  using G = Generator;
  switch (s) {
    case FiniteS3::E: return {};
    case FiniteS3::S2: return {G::S2};
    case FiniteS3::S3: return {G::S3};
    case FiniteS3::S2S3: return {G::S2, G::S3};
    case FiniteS3::S3S2: return {G::S3, G::S2};
    case FiniteS3::S2S3S2: return {G::S2, G::S3, G::S2};
  }
  throw std::invalid_argument("bad S3 element");
}

AffinePermutation s3_element(FiniteS3 s) { return from_word(s3_word(s)); }

std::string to_string(FiniteS3 s) {
  return s == FiniteS3::E ? "e" : to_string(s3_word(s));
}

Decomposition decompose(const AffinePermutation& f) {
  for (FiniteS3 sigma : kFiniteS3) {
    const AffinePermutation t = compose(f, inverse(s3_element(sigma)));
    if (is_translation(t)) return {translation_coords(t), sigma};
  }
  throw std::logic_error("no decomposition for " + to_string(f));
}

HexagonId hexagon_of(const AffinePermutation& f) { return {decompose(f).translation}; }

FiniteS3 coset_mod_T(const AffinePermutation& f) { return decompose(f).finite; }

FiniteS3 s3_multiply(FiniteS3 x, FiniteS3 y) {
  const AffinePermutation p = compose(s3_element(x), s3_element(y));
  for (FiniteS3 s : kFiniteS3)
    if (s3_element(s) == p) return s;
  throw std::logic_error("S3 not closed");
}

TranslationVector conjugate_translation(int i, TranslationVector t) {
  const AffinePermutation s = generator(i);
  return translation_coords(compose(compose(s, translation_element(t)), inverse(s)));
}

VertexPoint hexagon_center(const HexagonId& h) {
  return kMajorThird + translation_offset(h.base);
}

std::string to_string(TranslationVector t) {
  return "t1^{" + std::to_string(t.e1) + "} t2^{" + std::to_string(t.e2) + "}";
}

TranslationVector parse_translation(std::string_view text) {
  detail::Scanner s(text);
  TranslationVector t;
  auto exponent = [&] {
    s.expect('^');
    const bool braced = s.consume('{');
    const Int e = s.integer();
    if (braced) s.expect('}');
    return e;
  };
  s.skip_space();
  if (!s.consume("t1")) s.fail("expected 't1'");
  t.e1 = exponent();
  s.skip_space();
  if (!s.consume("t2")) s.fail("expected 't2'");
  t.e2 = exponent();
  s.skip_space();
  s.expect_end();
  return t;
}

}  // namespace tonnetz
