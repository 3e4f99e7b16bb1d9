#include "tonnetz/pitch.hpp"

#include <array>
#include <cstdlib>

#include "text_util.hpp"

namespace tonnetz {

namespace {

constexpr std::string_view kLetters = "FCGDAEB";

Int floor_div(Int n, Int d) {
  Int q = n / d;
  if ((n % d != 0) && ((n < 0) != (d < 0))) --q;
  return q;
}

Int floor_mod(Int n, Int d) { return n - d * floor_div(n, d); }

// Squared lattice length of p fifths + q thirds (the two steps meet at 60 degrees).
Int lattice_norm(Int p, Int q) { return p * p + p * q + q * q; }

}  // namespace

char NoteName::letter() const { return kLetters[floor_mod(fifth_index + 1, 7)]; }

Int NoteName::accidentals() const { return floor_div(fifth_index + 1, 7); }

NoteName spell_vertex(VertexPoint v) { return {v.p + 4 * v.q, v.q}; }

VertexPoint vertex_of(const NoteName& n) {
  return {n.fifth_index - 4 * n.comma_level, n.comma_level};
}

ChordName name_triangle(const Triangle& t) {
  return {spell_vertex(t.root), t.orientation == Orientation::Up ? Mode::Major : Mode::Minor};
}

Triangle triangle_of(const ChordName& c) {
  return {vertex_of(c.root), c.mode == Mode::Major ? Orientation::Up : Orientation::Down};
}

int pitch_class(const NoteName& n) { return static_cast<int>(floor_mod(7 * n.fifth_index, 12)); }

Int default_comma_level(Int k) {
  // |vertex|^2 = k^2 - 7kq + 13q^2 is minimized near q = 7k/26.
  const Int centre = floor_div(7 * k, 26);
  Int best = centre;
  for (Int q = centre - 1; q <= centre + 2; ++q) {
    const Int nq = lattice_norm(k - 4 * q, q), nb = lattice_norm(k - 4 * best, best);
    if (nq < nb || (nq == nb && (std::llabs(q) < std::llabs(best) ||
                                 (std::llabs(q) == std::llabs(best) && q < best))))
      best = q;
  }
  return best;
}

std::string spelling(Int fifth_index) {
  const NoteName n{fifth_index, 0};
  std::string out(1, n.letter());
  Int acc = n.accidentals();
  if (acc < 0) {
    out.append(static_cast<std::size_t>(-acc), 'b');
  } else {
    if (acc % 2) out += '#';
    out.append(static_cast<std::size_t>(acc / 2), 'x');
  }
  return out;
}

std::string to_string(const NoteName& n, bool with_comma) {
  std::string out = spelling(n.fifth_index);
  if (with_comma) out += "[q=" + std::to_string(n.comma_level) + "]";
  return out;
}

std::string to_string(const ChordName& c, bool with_comma) {
  std::string out = spelling(c.root.fifth_index);
  if (c.mode == Mode::Minor) out += 'm';
  if (with_comma) out += "[q=" + std::to_string(c.root.comma_level) + "]";
  return out;
}

namespace {

// Letter and accidentals; leaves the scanner after them.
Int scan_spelling(detail::Scanner& s) {
  const auto idx = kLetters.find(s.peek());
  if (s.at_end() || idx == std::string_view::npos) s.fail("expected note letter A-G");
  s.advance();
  Int acc = 0;
  for (;;) {
    if (s.consume('#') || s.consume("\xE2\x99\xAF")) acc += 1;
    else if (s.consume('x') || s.consume("\xF0\x9D\x84\xAA")) acc += 2;
    else if (s.consume('b') || s.consume("\xE2\x99\xAD")) acc -= 1;
    else break;
  }
  return static_cast<Int>(idx) - 1 + 7 * acc;
}

std::optional<Int> scan_comma(detail::Scanner& s) {
  if (!s.consume('[')) return std::nullopt;
  if (!s.consume("q=")) s.fail("malformed comma annotation, expected '[q=<int>]'");
  const Int q = s.integer();
  s.expect(']');
  return q;
}

}  // namespace

NoteName parse_note(std::string_view text, std::optional<Int> default_comma) {
  detail::Scanner s(text);
  s.skip_space();
  const Int k = scan_spelling(s);
  const auto q = scan_comma(s);
  s.skip_space();
  s.expect_end();
  return {k, q ? *q : default_comma ? *default_comma : default_comma_level(k)};
}

ParsedChord parse_chord(std::string_view text, std::optional<Int> default_comma) {
  detail::Scanner s(text);
  s.skip_space();
  const Int k = scan_spelling(s);
  Mode mode = Mode::Major;
  if (s.consume("min") || s.consume('m')) mode = Mode::Minor;
  const auto q = scan_comma(s);
  s.skip_space();
  s.expect_end();
  ChordName name{{k, q ? *q : default_comma ? *default_comma : default_comma_level(k)}, mode};
  return {name, triangle_of(name)};
}

}  // namespace tonnetz
