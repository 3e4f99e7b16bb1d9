#pragma once

// The affine Coxeter group of type A2 realized as affine permutations of the
// integers. An element f is stored by its window [f(-1), f(0), f(1)]; the
// rest of the map follows from f(n + 3) = f(n) + 3.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tonnetz {

using Int = std::int64_t;

enum class Generator : int { S1 = 1, S2 = 2, S3 = 3 };

inline constexpr std::array<Generator, 3> kGenerators{Generator::S1, Generator::S2,
                                                      Generator::S3};

// Throws std::out_of_range unless 1 <= i <= 3.
Generator generator_from_index(int i);
inline int index_of(Generator g) { return static_cast<int>(g); }

using GeneratorWord = std::vector<Generator>;

class AffinePermutation {
 public:
  // The identity [-1,0,1].
  AffinePermutation() = default;

  // Throws std::invalid_argument if the window does not sum to zero or two
  // entries share a residue mod 3.
  AffinePermutation(Int a, Int b, Int c);

  Int a() const { return w_[0]; }
  Int b() const { return w_[1]; }
  Int c() const { return w_[2]; }
  const std::array<Int, 3>& window() const { return w_; }

  friend auto operator<=>(const AffinePermutation&, const AffinePermutation&) = default;

 private:
  std::array<Int, 3> w_{-1, 0, 1};
};

struct TriangleCoords {
  Int c1 = 0;
  Int c2 = 0;
  Int c3 = 0;
  friend auto operator<=>(const TriangleCoords&, const TriangleCoords&) = default;
};

enum class ElementType { Identity, Reflection, Rotation, Translation, GlideReflection };

std::string to_string(ElementType t);

AffinePermutation identity();
AffinePermutation generator(Generator g);
// Throws std::out_of_range for i outside 1..3.
AffinePermutation generator(int i);

// f(n) by periodic extension of the window.
Int eval(const AffinePermutation& f, Int n);

// (f * g)(n) = f(g(n)); g acts first.
AffinePermutation compose(const AffinePermutation& f, const AffinePermutation& g);
AffinePermutation operator*(const AffinePermutation& f, const AffinePermutation& g);

// f * s_i by the window rule [b,a,c] / [a,c,b] / [c-3,b,a+3].
AffinePermutation right_mult_generator(const AffinePermutation& f, Generator g);
AffinePermutation right_mult_generator(const AffinePermutation& f, int i);

AffinePermutation inverse(const AffinePermutation& f);

// Fold of right_mult_generator over the word, starting at the identity.
AffinePermutation from_word(const GeneratorWord& w);

// Generators s with length(f * s) < length(f), in increasing index order.
std::vector<Generator> right_descents(const AffinePermutation& f);

// Canonical reduced word: repeatedly strips the smallest-index right descent.
GeneratorWord reduce(const AffinePermutation& f);

Int length(const AffinePermutation& f);

// Smallest k in 1..6 with f^k = e, or nullopt when f has infinite order.
std::optional<int> order(const AffinePermutation& f);

ElementType classify(const AffinePermutation& f);

bool is_even(const AffinePermutation& f);

// Axis coordinates of the triangle center belonging to f.
TriangleCoords center_coords(const AffinePermutation& f);

// Inverse of center_coords. Throws std::invalid_argument if the coordinates
// do not name a triangle center.
AffinePermutation triangle_to_perm(const TriangleCoords& t);

// Sum of the positive center coordinates. Reported as-is; it is not always
// the word length (see README).
Int corollary_distance(const AffinePermutation& f);

// Every element of length <= radius, in breadth-first (shortlex) order.
std::vector<AffinePermutation> ball(int radius);

// Text forms: "[a,b,c]" and "s2 s3 s2" (the empty word prints as "e").
std::string to_string(const AffinePermutation& f);
std::string to_string(const GeneratorWord& w);
std::string to_string(const TriangleCoords& t);
AffinePermutation parse_window(std::string_view text);
GeneratorWord parse_word(std::string_view text);

}  // namespace tonnetz

template <>
struct std::hash<tonnetz::AffinePermutation> {
  std::size_t operator()(const tonnetz::AffinePermutation& f) const noexcept {
    // c = -a - b, so two entries determine the element.
    auto h = static_cast<std::uint64_t>(f.a()) * 0x9E3779B97F4A7C15ULL;
    h ^= static_cast<std::uint64_t>(f.b()) + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};
