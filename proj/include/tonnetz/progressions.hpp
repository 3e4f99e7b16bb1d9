#pragma once

// Chord-level operations on the Tonnetz: contextual P/L/R moves, shortest
// move sequences, hexagon cycles, rotation and translation cycles, stripes
// and step-by-step progression analysis.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tonnetz/lattice.hpp"
#include "tonnetz/pitch.hpp"
#include "tonnetz/subgroups.hpp"

namespace tonnetz {

enum class PlrMove { P, L, R };

// Written as a composition of functions: the rightmost letter acts first,
// so "LR" applied to C major is L(R(C)) = F major.
using PlrWord = std::vector<PlrMove>;

// P keeps the fifth, L the minor third, R the major third.
EdgeType edge_of(PlrMove m);

Triangle apply_plr(const PlrWord& word, const Triangle& t);

// Shortest word taking `from` to `to`. Breadth-first with moves tried in the
// order P, L, R, so the result is deterministic.
PlrWord plr_path(const Triangle& from, const Triangle& to);

std::string to_string(const PlrWord& w);
PlrWord parse_plr(std::string_view text);

// Right multiplication of the triangle's group element by a generator.
Triangle right_mult(const Triangle& t, Generator g);
// Left multiplication: apply the group element as an isometry.
Triangle left_mult(const AffinePermutation& g, const Triangle& t);

// The six triangles around vertex x, counterclockwise, starting with the
// major triad directly below x.
std::array<Triangle, 6> triangles_around(VertexPoint x);

struct HexagonCycle {
  VertexPoint common_tone;
  // Major triad directly below the common tone.
  Triangle base;
  // Class of the base element modulo translations: E, S3S2 or S2S3.
  FiniteS3 base_class = FiniteS3::E;
  // Alternating right multiplication by these, first[0] first, walks the
  // hexagon counterclockwise from the base.
  std::array<Generator, 2> generators{Generator::S3, Generator::S2};
  // Counterclockwise, starting at the seed.
  std::vector<Triangle> triangles;
};

// The tile of the hexagon tiling that contains the seed.
HexagonCycle hexagon_cycle(const Triangle& seed);
// The six triangles around one of the seed's vertices. Throws
// std::invalid_argument if `tone` is not a vertex of `seed`.
HexagonCycle vertex_hexagon(const Triangle& seed, VertexPoint tone);

// Positive: left multiplication by s3 s2; Negative: by s2 s3. Both fix E;
// `hexagon` moves the center to the common tone of another tile.
enum class RotationSense { Positive, Negative };
std::vector<Triangle> rotation_cycle(const Triangle& seed, RotationSense sense,
                                     TranslationVector hexagon = {});

// Images of the seed under t1, t2 t1 and t3 t2 t1 (the last is the seed).
std::vector<Triangle> translation_cycle(const Triangle& seed);

enum class StripeKind { Fifths, Hexatonic, Octatonic };
std::string to_string(StripeKind k);
// Throws std::invalid_argument for an unknown name.
StripeKind parse_stripe_kind(std::string_view name);

// 2 * count + 1 triangles of the stripe through the seed, the seed in the
// middle, in spatial order (left to right, SW to NE, NW to SE).
std::vector<Triangle> stripe(const Triangle& seed, StripeKind kind, int count);

struct ProgressionStep {
  Triangle from;
  Triangle to;
  PlrWord path;
  Int distance = 0;
  bool same_tile = false;  // both in one tile of the hexagon tiling
  // Center of a hexagon holding both chords, if any (the tile's center
  // is preferred over other shared notes).
  std::optional<VertexPoint> common_tone;
};

std::vector<ProgressionStep> analyze(const std::vector<Triangle>& chords);

// Comma-separated chord symbols, e.g. "C#m, E, A, D".
std::vector<Triangle> parse_progression(std::string_view text,
                                        std::optional<Int> default_comma = std::nullopt);

// Opening of the Moonlight Sonata as triads: C#m, E (inside C#m7), A, D.
std::vector<std::string> moonlight_fixture();

std::vector<ChordName> names(const std::vector<Triangle>& ts);

}  // namespace tonnetz
