#pragma once

// Translation subgroup, the decomposition f = t * sigma with sigma in the
// finite subgroup generated by s2 and s3, and the hexagon tiling given by
// the left cosets t * <s2, s3>.

#include <array>
#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

#include "tonnetz/affine_permutation.hpp"
#include "tonnetz/lattice.hpp"

namespace tonnetz {

// Exponents of t1^e1 * t2^e2. t3 = (t1 t2)^-1 has no coordinates of its own.
struct TranslationVector {
  Int e1 = 0;
  Int e2 = 0;
  friend TranslationVector operator+(TranslationVector x, TranslationVector y) {
    return {x.e1 + y.e1, x.e2 + y.e2};
  }
  friend TranslationVector operator-(TranslationVector x) { return {-x.e1, -x.e2}; }
  friend auto operator<=>(const TranslationVector&, const TranslationVector&) = default;
};

struct HexagonId {
  TranslationVector base;
  friend auto operator<=>(const HexagonId&, const HexagonId&) = default;
};

enum class FiniteS3 { E, S2, S3, S2S3, S3S2, S2S3S2 };

inline constexpr std::array<FiniteS3, 6> kFiniteS3{FiniteS3::E,    FiniteS3::S2,
                                                   FiniteS3::S3,   FiniteS3::S2S3,
                                                   FiniteS3::S3S2, FiniteS3::S2S3S2};

class NotATranslation : public std::domain_error {
 public:
  explicit NotATranslation(const AffinePermutation& f)
      : std::domain_error(to_string(f) + " is not a translation") {}
};

AffinePermutation translation_generator(int i);

bool is_translation(const AffinePermutation& f);

// Throws NotATranslation.
TranslationVector translation_coords(const AffinePermutation& f);

// t1^e1 * t2^e2 as a window.
AffinePermutation translation_element(TranslationVector t);

// Lattice displacement of the translation t on note vertices.
VertexPoint translation_offset(TranslationVector t);

AffinePermutation s3_element(FiniteS3 s);
GeneratorWord s3_word(FiniteS3 s);
std::string to_string(FiniteS3 s);

struct Decomposition {
  TranslationVector translation;
  FiniteS3 finite;
  friend auto operator<=>(const Decomposition&, const Decomposition&) = default;
};

// Unique (t, sigma) with f = t * sigma.
Decomposition decompose(const AffinePermutation& f);

HexagonId hexagon_of(const AffinePermutation& f);

FiniteS3 coset_mod_T(const AffinePermutation& f);

// Multiplication in <s2, s3>, read off from the windows.
FiniteS3 s3_multiply(FiniteS3 x, FiniteS3 y);

// s_i * t * s_i^-1, in translation coordinates.
TranslationVector conjugate_translation(int i, TranslationVector t);

// Center note of a tiling hexagon: the image of E under its base translation.
VertexPoint hexagon_center(const HexagonId& h);

// "t1^{e1} t2^{e2}"
std::string to_string(TranslationVector t);
TranslationVector parse_translation(std::string_view text);

}  // namespace tonnetz
