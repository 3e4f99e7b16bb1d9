#pragma once

// Spelled note names on the line of fifths and triad names for lattice
// triangles. The comma level is the major-third coordinate q of a vertex; it
// separates different lattice positions that carry the same spelled name.

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "tonnetz/lattice.hpp"

namespace tonnetz {

struct NoteName {
  Int fifth_index = 0;  // ... -1 = F, 0 = C, 1 = G, ... 6 = F#
  Int comma_level = 0;

  char letter() const;
  // Positive for sharps, negative for flats.
  Int accidentals() const;
  friend auto operator<=>(const NoteName&, const NoteName&) = default;
};

enum class Mode { Major, Minor };

struct ChordName {
  NoteName root;
  Mode mode = Mode::Major;
  friend auto operator<=>(const ChordName&, const ChordName&) = default;
};

NoteName spell_vertex(VertexPoint v);
VertexPoint vertex_of(const NoteName& n);

ChordName name_triangle(const Triangle& t);
Triangle triangle_of(const ChordName& c);

int pitch_class(const NoteName& n);

// Comma level used for a bare note name: the q whose vertex lies closest to
// C in the lattice (ties go to smaller |q|, then smaller q).
Int default_comma_level(Int fifth_index);

struct ParsedChord {
  ChordName name;
  Triangle triangle;
};

// Grammar: Letter [#|b|x]* ["m"|"min"] ["[q=" int "]"]. When the annotation
// is absent the comma level is `default_comma` if given, else
// default_comma_level(). Throws ParseError.
ParsedChord parse_chord(std::string_view text, std::optional<Int> default_comma = std::nullopt);
NoteName parse_note(std::string_view text, std::optional<Int> default_comma = std::nullopt);

// Letter plus accidentals ('#', 'b', 'x' = double sharp), e.g. "F#", "Cx", "Bbb".
std::string spelling(Int fifth_index);
std::string to_string(const NoteName& n, bool with_comma = false);
std::string to_string(const ChordName& c, bool with_comma = false);

}  // namespace tonnetz
