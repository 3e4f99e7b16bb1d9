#include "tonnetz/progressions.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>

#include "text_util.hpp"

namespace tonnetz {

EdgeType edge_of(PlrMove m) {
  switch (m) {
    case PlrMove::P: return EdgeType::Fifth;
    case PlrMove::L: return EdgeType::MinorThird;
    case PlrMove::R: return EdgeType::MajorThird;
  }
  throw std::invalid_argument("bad move");
}

Triangle apply_plr(const PlrWord& word, const Triangle& t) {
  Triangle out = t;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = flip(out, edge_of(*it));
  return out;
}

PlrWord plr_path(const Triangle& from, const Triangle& to) {
  if (from == to) return {};
  struct Parent {
    Triangle prev;
    PlrMove move;
  };
  std::unordered_map<Triangle, Parent> parent;
  parent.emplace(from, Parent{from, PlrMove::P});
  std::deque<Triangle> frontier{from};
  while (!frontier.empty()) {
    const Triangle t = frontier.front();
    frontier.pop_front();
    for (PlrMove m : {PlrMove::P, PlrMove::L, PlrMove::R}) {
      const Triangle n = flip(t, edge_of(m));
      if (!parent.emplace(n, Parent{t, m}).second) continue;
      if (n == to) {
        // Moves collected walking back are already in written order.
        PlrWord word;
        for (Triangle cur = to; cur != from;) {
          const Parent& p = parent.at(cur);
          word.push_back(p.move);
          cur = p.prev;
        }
        return word;
      }
      frontier.push_back(n);
    }
  }
  throw std::logic_error("no chord path");
}

std::string to_string(const PlrWord& w) {
  std::string out;
  for (PlrMove m : w) out += m == PlrMove::P ? 'P' : m == PlrMove::L ? 'L' : 'R';
  return out;
}

PlrWord parse_plr(std::string_view text) {
  PlrWord w;
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'P': w.push_back(PlrMove::P); break;
      case 'L': w.push_back(PlrMove::L); break;
      case 'R': w.push_back(PlrMove::R); break;
      case ' ': break;
      default: throw ParseError("expected P, L or R", i);
    }
  }
  return w;
}

Triangle right_mult(const Triangle& t, Generator g) {
  return triangle_of(right_mult_generator(perm_of_triangle(t), g));
}

Triangle left_mult(const AffinePermutation& g, const Triangle& t) {
  return apply(perm_to_iso(g), t);
}

std::array<Triangle, 6> triangles_around(VertexPoint x) {
  using O = Orientation;
  return {Triangle{x - kMajorThird, O::Up},
          Triangle{x, O::Down},
          Triangle{x, O::Up},
          Triangle{x - kFifth + kMajorThird, O::Down},
          Triangle{x - kFifth, O::Up},
          Triangle{x - kFifth, O::Down}};
}

namespace {

std::array<Generator, 2> stabilizer_pair(const Triangle& base, VertexPoint tone) {
  // The two generators whose mirrors pass through the vertex of (*) that the
  // base element carries onto `tone`.
  const Isometry iso = perm_to_iso(perm_of_triangle(base));
  const VertexPoint c{0, 0}, g = kFifth, e = kMajorThird;
  if (apply(iso, e) == tone) return {Generator::S2, Generator::S3};
  if (apply(iso, c) == tone) return {Generator::S1, Generator::S2};
  if (apply(iso, g) == tone) return {Generator::S1, Generator::S3};
  throw std::logic_error("base triangle does not contain its common tone");
}

}  // namespace

HexagonCycle vertex_hexagon(const Triangle& seed, VertexPoint tone) {
  if (!contains(seed, tone))
    throw std::invalid_argument(to_string(tone) + " is not a vertex of " + to_string(seed));
  HexagonCycle h;
  h.common_tone = tone;
  const auto around = triangles_around(tone);
  h.base = around[0];
  h.base_class = coset_mod_T(perm_of_triangle(h.base));
  auto pair = stabilizer_pair(h.base, tone);
  if (right_mult(h.base, pair[0]) != around[1]) std::swap(pair[0], pair[1]);
  h.generators = pair;
  const auto start = std::find(around.begin(), around.end(), seed) - around.begin();
  for (int k = 0; k < 6; ++k) h.triangles.push_back(around[(start + k) % 6]);
  return h;
}

HexagonCycle hexagon_cycle(const Triangle& seed) {
  return vertex_hexagon(seed, hexagon_center(hexagon_of(perm_of_triangle(seed))));
}

std::vector<Triangle> rotation_cycle(const Triangle& seed, RotationSense sense,
                                     TranslationVector hexagon) {
  const AffinePermutation r =
      s3_element(sense == RotationSense::Positive ? FiniteS3::S3S2 : FiniteS3::S2S3);
  const AffinePermutation t = translation_element(hexagon);
  const Isometry rot = perm_to_iso(compose(compose(t, r), inverse(t)));
  std::vector<Triangle> out{seed};
  out.push_back(apply(rot, out.back()));
  out.push_back(apply(rot, out.back()));
  return out;
}

std::vector<Triangle> translation_cycle(const Triangle& seed) {
  const AffinePermutation t1 = translation_generator(1), t2 = translation_generator(2),
                          t3 = translation_generator(3);
  const AffinePermutation t21 = compose(t2, t1);
  return {left_mult(t1, seed), left_mult(t21, seed), left_mult(compose(t3, t21), seed)};
}

std::string to_string(StripeKind k) {
  switch (k) {
    case StripeKind::Fifths: return "fifths";
    case StripeKind::Hexatonic: return "hexatonic";
    case StripeKind::Octatonic: return "octatonic";
  }
  return "?";
}

StripeKind parse_stripe_kind(std::string_view name) {
  if (name == "fifths") return StripeKind::Fifths;
  if (name == "hexatonic") return StripeKind::Hexatonic;
  if (name == "octatonic") return StripeKind::Octatonic;
  throw std::invalid_argument("unknown stripe kind '" + std::string(name) + "'");
}

namespace {

// Neighbour of t inside its stripe, forwards or backwards.
Triangle stripe_step(const Triangle& t, StripeKind kind, bool forward) {
  using O = Orientation;
  const VertexPoint v = t.root;
  const bool up = t.orientation == O::Up;
  switch (kind) {
    case StripeKind::Fifths:  // row between two horizontal lines
      if (forward) return up ? Triangle{v + kMajorThird, O::Down}
                             : Triangle{v + kFifth - kMajorThird, O::Up};
      return up ? Triangle{v - kFifth + kMajorThird, O::Down} : Triangle{v - kMajorThird, O::Up};
    case StripeKind::Hexatonic:  // band of constant p, climbing in q
      if (forward) return up ? Triangle{v + kMajorThird, O::Down} : Triangle{v, O::Up};
      return up ? Triangle{v, O::Down} : Triangle{v - kMajorThird, O::Up};
    case StripeKind::Octatonic:  // band of constant p + q, moving towards +p
      if (forward) return up ? Triangle{v, O::Down} : Triangle{v + kFifth - kMajorThird, O::Up};
      return up ? Triangle{v - kFifth + kMajorThird, O::Down} : Triangle{v, O::Up};
  }
  throw std::invalid_argument("bad stripe kind");
}

}  // namespace

std::vector<Triangle> stripe(const Triangle& seed, StripeKind kind, int count) {
  if (count < 1) throw std::invalid_argument("stripe count must be positive");
  std::deque<Triangle> out{seed};
  for (int k = 0; k < count; ++k) {
    out.push_front(stripe_step(out.front(), kind, false));
    out.push_back(stripe_step(out.back(), kind, true));
  }
  return {out.begin(), out.end()};
}

std::vector<ProgressionStep> analyze(const std::vector<Triangle>& chords) {
  std::vector<ProgressionStep> steps;
  for (std::size_t i = 0; i + 1 < chords.size(); ++i) {
    ProgressionStep s;
    s.from = chords[i];
    s.to = chords[i + 1];
    s.path = plr_path(s.from, s.to);
    s.distance = static_cast<Int>(s.path.size());
    const HexagonId tile = hexagon_of(perm_of_triangle(s.from));
    s.same_tile = tile == hexagon_of(perm_of_triangle(s.to));
    if (s.same_tile) {
      s.common_tone = hexagon_center(tile);
    } else {
      for (const VertexPoint& v : vertices(s.from))
        if (contains(s.to, v)) {
          s.common_tone = v;
          break;
        }
    }
    steps.push_back(s);
  }
  return steps;
}

std::vector<Triangle> parse_progression(std::string_view text, std::optional<Int> default_comma) {
  std::vector<Triangle> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    try {
      out.push_back(parse_chord(text.substr(start, end - start), default_comma).triangle);
    } catch (const ParseError& e) {
      throw ParseError(std::string("chord ") + std::to_string(out.size() + 1) + ": " + e.what(),
                       start + e.position());
    }
    start = end + 1;
  }
  return out;
}

std::vector<std::string> moonlight_fixture() { return {"C#m", "E", "A", "D"}; }

std::vector<ChordName> names(const std::vector<Triangle>& ts) {
  std::vector<ChordName> out;
  out.reserve(ts.size());
  for (const Triangle& t : ts) out.push_back(name_triangle(t));
  return out;
}

}  // namespace tonnetz
