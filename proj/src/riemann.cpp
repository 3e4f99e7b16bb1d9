#include "tonnetz/riemann.hpp"

#include <stdexcept>

#include "text_util.hpp"

namespace tonnetz {

namespace {

int floor_mod(Int n, int m) {
  Int r = n % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

}  // namespace

RElement r_identity() { return {}; }
RElement quintschritt() { return {false, 1, 0}; }
RElement terzschritt() { return {false, 0, 1}; }
RElement seitenwechsel() { return {true, 0, 0}; }

RElement r_compose(const RElement& x, const RElement& y) {
  // (t' w^e')(t w^e) = t' phi^e'(t) w^(e'+e), phi(t) = t^-1.
  const Int sign = x.wechsel ? -1 : 1;
  return {x.wechsel != y.wechsel, x.u + sign * y.u, x.v + sign * y.v};
}

RElement r_inverse(const RElement& x) {
  if (x.wechsel) return x;  // every Wechsel is an involution
  return {false, -x.u, -x.v};
}

std::optional<int> r_order(const RElement& x, int cap) {
  RElement p = x;
  for (int k = 1; k <= cap; ++k) {
    if (p == r_identity()) return k;
    p = r_compose(p, x);
  }
  return std::nullopt;
}

PElement p_identity() { return {}; }

PElement p_generator(int i) {
  switch (i) {
    case 1: return {true, 0, 0};
    case 2: return {true, 0, -1};  // pi1 (pi1 pi2) = (pi1 pi2)^-1 pi1
    case 3: return {true, 1, 0};   // (pi3 pi1) pi1
    default: throw std::out_of_range("point reflection index must be 1, 2 or 3");
  }
}

PElement p_compose(const PElement& x, const PElement& y) {
  // A half-turn conjugates every translation to its inverse.
  const Int sign = x.flip ? -1 : 1;
  return {x.flip != y.flip, x.a + sign * y.a, x.b + sign * y.b};
}

PElement p_inverse(const PElement& x) {
  if (x.flip) return x;
  return {false, -x.a, -x.b};
}

PElement p_power(const PElement& x, Int n) {
  if (n < 0) return p_power(p_inverse(x), -n);
  if (x.flip) return n % 2 ? x : p_identity();
  return {false, x.a * n, x.b * n};
}

Isometry p_to_isometry(const PElement& x) {
  // pi3 pi1 shifts by a major third, pi1 pi2 by a minor third downwards
  // (fifth minus third); pi1 is x -> (1,0) - x.
  const VertexPoint shift = x.a * kMajorThird + x.b * (kFifth - kMajorThird);
  Isometry t{Mat2::identity(), shift};
  if (!x.flip) return t;
  const Isometry half_turn{{{-1, 0, 0, -1}}, kFifth};
  return compose_iso(t, half_turn);
}

Triangle p_left_action(const PElement& x, const Triangle& t) { return apply(p_to_isometry(x), t); }

RElement p_to_r(const PElement& x) {
  // Translations: (pi3 pi1)^a (pi1 pi2)^b -> Q^b Z^(a-b). The trailing pi1
  // becomes a leading Wechsel, which inverts the Schritt when moved right.
  const Int u = x.b, v = x.a - x.b;
  if (!x.flip) return {false, u, v};
  return {true, -u, -v};
}

PElement r_to_p(const RElement& r) {
  if (!r.wechsel) return {false, r.v + r.u, r.u};
  return {true, -r.v - r.u, -r.u};
}

bool in_comma_subgroup(const PElement& x) {
  return !x.flip && floor_mod(x.a, 3) == 0 && floor_mod(x.b, 4) == 0;
}

namespace {

PElement pi3pi1() { return p_compose(p_generator(3), p_generator(1)); }
PElement pi1pi2() { return p_compose(p_generator(1), p_generator(2)); }
PElement pi3pi2() { return p_compose(p_generator(3), p_generator(2)); }

}  // namespace

PElement lesser_diesis() { return p_power(pi3pi1(), 3); }
PElement greater_diesis() { return p_power(pi1pi2(), 4); }
PElement syntonic_comma() { return p_compose(p_power(pi3pi2(), 3), pi1pi2()); }
PElement pythagorean_comma() { return p_power(pi3pi2(), 12); }
PElement semitone() { return p_compose(p_inverse(pi1pi2()), pi3pi1()); }

D12Coset project_d12(const PElement& x) {
  return {x.flip, floor_mod(x.a, 3), floor_mod(x.b, 4)};
}

D12Coset d12_compose(const D12Coset& x, const D12Coset& y) {
  const int sign = x.flip ? -1 : 1;
  return {x.flip != y.flip, floor_mod(x.a_mod3 + sign * y.a_mod3, 3),
          floor_mod(x.b_mod4 + sign * y.b_mod4, 4)};
}

D12Coset d12_inverse(const D12Coset& x) {
  if (x.flip) return x;
  return {false, floor_mod(-x.a_mod3, 3), floor_mod(-x.b_mod4, 4)};
}

int d12_order(const D12Coset& x) {
  D12Coset p = x;
  for (int k = 1;; ++k) {
    if (p == D12Coset{}) return k;
    p = d12_compose(p, x);
  }
}

std::string to_string(const RElement& r) {
  std::string out = "Q^" + std::to_string(r.u) + " Z^" + std::to_string(r.v);
  if (r.wechsel) out += " W";
  return out;
}

RElement parse_relement(std::string_view text) {
  detail::Scanner s(text);
  RElement r;
  bool seen_q = false, seen_z = false;
  s.skip_space();
  while (!s.at_end()) {
    const std::size_t pos = s.position();
    if (s.consume('Q')) {
      if (seen_q) throw ParseError("repeated Q", pos);
      s.expect('^');
      r.u = s.integer();
      seen_q = true;
    } else if (s.consume('Z')) {
      if (seen_z) throw ParseError("repeated Z", pos);
      s.expect('^');
      r.v = s.integer();
      seen_z = true;
    } else if (s.consume('W')) {
      if (r.wechsel) throw ParseError("repeated W", pos);
      r.wechsel = true;
    } else {
      s.fail("expected 'Q^n', 'Z^n' or 'W'");
    }
    s.skip_space();
  }
  if (!seen_q && !seen_z && !r.wechsel) s.fail("empty Schritt/Wechsel element");
  return r;
}

std::string to_string(const PElement& x) {
  return "(" + std::to_string(x.a) + "," + std::to_string(x.b) + "," + (x.flip ? "1" : "0") + ")";
}

PElement parse_pelement(std::string_view text) {
  detail::Scanner s(text);
  PElement x;
  s.skip_space();
  s.expect('(');
  s.skip_space();
  x.a = s.integer();
  s.skip_space();
  s.expect(',');
  s.skip_space();
  x.b = s.integer();
  s.skip_space();
  s.expect(',');
  s.skip_space();
  const std::size_t pos = s.position();
  const Int f = s.integer();
  if (f != 0 && f != 1) throw ParseError("flip must be 0 or 1", pos);
  x.flip = f == 1;
  s.skip_space();
  s.expect(')');
  s.skip_space();
  s.expect_end();
  return x;
}

std::string to_string(const D12Coset& c) {
  return "(" + std::to_string(c.a_mod3) + " mod 3," + std::to_string(c.b_mod4) + " mod 4," +
         (c.flip ? "1" : "0") + ")";
}

}  // namespace tonnetz
