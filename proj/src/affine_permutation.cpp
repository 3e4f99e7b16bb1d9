#include "tonnetz/affine_permutation.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <stdexcept>
#include <unordered_set>

#include "tonnetz/errors.hpp"
#include "text_util.hpp"

namespace tonnetz {

namespace {

Int mod3(Int n) {
  Int r = n % 3;
  return r < 0 ? r + 3 : r;
}

// n = 3q + r with r in {-1, 0, 1}.
std::pair<Int, int> split_window_index(Int n) {
  Int r = mod3(n + 1) - 1;
  return {(n - r) / 3, static_cast<int>(r)};
}

AffinePermutation unchecked(Int a, Int b, Int c) { return AffinePermutation(a, b, c); }

}  // namespace

Generator generator_from_index(int i) {
  if (i < 1 || i > 3) throw std::out_of_range("generator index must be 1, 2 or 3");
  return static_cast<Generator>(i);
}

AffinePermutation::AffinePermutation(Int a, Int b, Int c) : w_{a, b, c} {
  if (a + b + c != 0) throw std::invalid_argument("window entries must sum to 0");
  if (mod3(a) == mod3(b) || mod3(b) == mod3(c) || mod3(a) == mod3(c))
    throw std::invalid_argument("window entries must be pairwise incongruent mod 3");
}

std::string to_string(ElementType t) {
  switch (t) {
    case ElementType::Identity: return "Identity";
    case ElementType::Reflection: return "Reflection";
    case ElementType::Rotation: return "Rotation";
    case ElementType::Translation: return "Translation";
    case ElementType::GlideReflection: return "GlideReflection";
  }
  return "?";
}

AffinePermutation identity() { return {}; }

AffinePermutation generator(Generator g) {
  switch (g) {
    case Generator::S1: return unchecked(0, -1, 1);
    case Generator::S2: return unchecked(-1, 1, 0);
    case Generator::S3: return unchecked(-2, 0, 2);
  }
  throw std::out_of_range("bad generator");
}

AffinePermutation generator(int i) { return generator(generator_from_index(i)); }

Int eval(const AffinePermutation& f, Int n) {
  auto [q, r] = split_window_index(n);
  return f.window()[r + 1] + 3 * q;
}

AffinePermutation compose(const AffinePermutation& f, const AffinePermutation& g) {
  return unchecked(eval(f, g.a()), eval(f, g.b()), eval(f, g.c()));
}

AffinePermutation operator*(const AffinePermutation& f, const AffinePermutation& g) {
  return compose(f, g);
}

AffinePermutation right_mult_generator(const AffinePermutation& f, Generator g) {
  const Int a = f.a(), b = f.b(), c = f.c();
  switch (g) {
    case Generator::S1: return unchecked(b, a, c);
    case Generator::S2: return unchecked(a, c, b);
    case Generator::S3: return unchecked(c - 3, b, a + 3);
  }
  throw std::out_of_range("bad generator");
}

AffinePermutation right_mult_generator(const AffinePermutation& f, int i) {
  return right_mult_generator(f, generator_from_index(i));
}

AffinePermutation inverse(const AffinePermutation& f) {
  // f(-1 + 3q) = a etc.; invert slot by slot: f^{-1}(w) = slot - 3*(w - window value)/3.
  std::array<Int, 3> inv{};
  for (int slot = -1; slot <= 1; ++slot) {
    const Int value = f.window()[slot + 1];
    auto [q, r] = split_window_index(value);
    // f(slot - 3q) = r, so f^{-1}(r) = slot - 3q.
    inv[r + 1] = slot - 3 * q;
  }
  return unchecked(inv[0], inv[1], inv[2]);
}

AffinePermutation from_word(const GeneratorWord& w) {
  AffinePermutation f;
  for (Generator g : w) f = right_mult_generator(f, g);
  return f;
}

std::vector<Generator> right_descents(const AffinePermutation& f) {
  std::vector<Generator> out;
  if (f.a() > f.b()) out.push_back(Generator::S1);
  if (f.b() > f.c()) out.push_back(Generator::S2);
  if (f.c() > f.a() + 3) out.push_back(Generator::S3);
  return out;
}

namespace {

// Smallest-index right descent, if any.
std::optional<Generator> first_descent(const AffinePermutation& f) {
  if (f.a() > f.b()) return Generator::S1;
  if (f.b() > f.c()) return Generator::S2;
  if (f.c() > f.a() + 3) return Generator::S3;
  return std::nullopt;
}

}  // namespace

GeneratorWord reduce(const AffinePermutation& f) {
  GeneratorWord stripped;
  AffinePermutation cur = f;
  while (auto s = first_descent(cur)) {
    stripped.push_back(*s);
    cur = right_mult_generator(cur, *s);
  }
  std::reverse(stripped.begin(), stripped.end());
  return stripped;
}

Int length(const AffinePermutation& f) {
  Int steps = 0;
  AffinePermutation cur = f;
  while (auto s = first_descent(cur)) {
    cur = right_mult_generator(cur, *s);
    ++steps;
  }
  return steps;
}

std::optional<int> order(const AffinePermutation& f) {
  // Finite orders in this group are 1, 2 and 3; 6 leaves room for checking that.
  AffinePermutation power = f;
  for (int k = 1; k <= 6; ++k) {
    if (power == identity()) return k;
    power = compose(power, f);
  }
  return std::nullopt;
}

bool is_even(const AffinePermutation& f) {
  // Position of each residue in the identity window (2, 0, 1).
  auto rank = [](Int v) -> int {
    switch (mod3(v)) {
      case 2: return 0;
      case 0: return 1;
      default: return 2;
    }
  };
  const int x = rank(f.a()), y = rank(f.b()), z = rank(f.c());
  const int inversions = (x > y) + (x > z) + (y > z);
  return inversions % 2 == 0;
}

ElementType classify(const AffinePermutation& f) {
  if (f == identity()) return ElementType::Identity;
  const auto k = order(f);
  if (k == 2) return ElementType::Reflection;
  if (k == 3) return ElementType::Rotation;
  if (!k) return is_even(f) ? ElementType::Translation : ElementType::GlideReflection;
  throw std::logic_error("element of unexpected finite order " + std::to_string(*k));
}

TriangleCoords center_coords(const AffinePermutation& f) {
  std::array<Int, 3> c{};
  for (int i = 1; i <= 3; ++i) {
    const Int target = i % 3;
    if (mod3(f.a()) == target) c[i - 1] = f.a() + 1;
    else if (mod3(f.b()) == target) c[i - 1] = f.b();
    else c[i - 1] = f.c() - 1;
  }
  return {c[0], c[1], c[2]};
}

AffinePermutation triangle_to_perm(const TriangleCoords& t) {
  if (t.c1 + t.c2 + t.c3 != 0) throw std::invalid_argument("coordinates must sum to 0");
  std::array<Int, 3> slots{};
  std::array<bool, 3> used{};
  const std::array<Int, 3> c{t.c1, t.c2, t.c3};
  for (int i = 1; i <= 3; ++i) {
    const Int ci = c[i - 1];
    // Unique e in {ci-1, ci, ci+1} congruent to i; offset -1 -> a, 0 -> b, +1 -> c.
    const Int offset = mod3(i - (ci - 1)) - 1;
    const int slot = static_cast<int>(offset) + 1;
    if (used[slot]) throw std::invalid_argument("not a triangle center: " + to_string(t));
    used[slot] = true;
    slots[slot] = ci + offset;
  }
  return AffinePermutation(slots[0], slots[1], slots[2]);
}

Int corollary_distance(const AffinePermutation& f) {
  const auto t = center_coords(f);
  Int d = 0;
  for (Int v : {t.c1, t.c2, t.c3})
    if (v > 0) d += v;
  return d;
}

std::vector<AffinePermutation> ball(int radius) {
  std::vector<AffinePermutation> out{identity()};
  std::unordered_set<AffinePermutation> seen{identity()};
  std::size_t layer_begin = 0;
  for (int r = 0; r < radius; ++r) {
    const std::size_t layer_end = out.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i)
      for (Generator g : kGenerators) {
        AffinePermutation next = right_mult_generator(out[i], g);
        if (seen.insert(next).second) out.push_back(next);
      }
    layer_begin = layer_end;
  }
  return out;
}

std::string to_string(const AffinePermutation& f) {
  return "[" + std::to_string(f.a()) + "," + std::to_string(f.b()) + "," +
         std::to_string(f.c()) + "]";
}

std::string to_string(const GeneratorWord& w) {
  if (w.empty()) return "e";
  std::string out;
  for (Generator g : w) {
    if (!out.empty()) out += ' ';
    out += 's';
    out += static_cast<char>('0' + index_of(g));
  }
  return out;
}

std::string to_string(const TriangleCoords& t) {
  return "(" + std::to_string(t.c1) + "," + std::to_string(t.c2) + "," + std::to_string(t.c3) +
         ")";
}

AffinePermutation parse_window(std::string_view text) {
  detail::Scanner s(text);
  s.skip_space();
  s.expect('[');
  std::array<Int, 3> w{};
  for (int k = 0; k < 3; ++k) {
    s.skip_space();
    w[k] = s.integer();
    s.skip_space();
    if (k < 2) s.expect(',');
  }
  s.expect(']');
  s.skip_space();
  s.expect_end();
  try {
    return AffinePermutation(w[0], w[1], w[2]);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid window: ") + e.what(), 0);
  }
}

GeneratorWord parse_word(std::string_view text) {
  detail::Scanner s(text);
  GeneratorWord w;
  s.skip_space();
  if (s.peek() == 'e') {
    s.advance();
    s.skip_space();
    s.expect_end();
    return w;
  }
  while (!s.at_end()) {
    s.expect('s');
    const std::size_t pos = s.position();
    const char d = s.peek();
    if (d < '1' || d > '3') throw ParseError("expected generator index 1, 2 or 3", pos);
    s.advance();
    w.push_back(static_cast<Generator>(d - '0'));
    while (!s.at_end() && (std::isspace(static_cast<unsigned char>(s.peek())) || s.peek() == '.'))
      s.advance();
  }
  return w;
}

}  // namespace tonnetz
