#pragma once

// Riemann's Schritt/Wechsel group R, the point reflection group P generated
// by the half-turns about the edge midpoints of C-E-G, the anti-isomorphism
// P -> R, the comma subgroup K and the 24-element quotient P/K.

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "tonnetz/lattice.hpp"

namespace tonnetz {

// Q^u Z^v W^wechsel: Quintschritt exponent u, Terzschritt exponent v,
// followed by the Seitenwechsel when `wechsel` is set.
struct RElement {
  bool wechsel = false;
  Int u = 0;
  Int v = 0;
  friend auto operator<=>(const RElement&, const RElement&) = default;
};

RElement r_identity();
RElement quintschritt();
RElement terzschritt();
RElement seitenwechsel();

// Conjugation by a Wechsel inverts a Schritt, so (t' w)(t w) = t' t^-1.
RElement r_compose(const RElement& x, const RElement& y);
RElement r_inverse(const RElement& x);
// nullopt for infinite order.
std::optional<int> r_order(const RElement& x, int cap = 12);

// (pi3 pi1)^a (pi1 pi2)^b pi1^flip.
struct PElement {
  bool flip = false;
  Int a = 0;
  Int b = 0;
  friend auto operator<=>(const PElement&, const PElement&) = default;
};

PElement p_identity();
// Half-turn about the midpoint of the edge of C-E-G lying on axis i.
PElement p_generator(int i);
PElement p_compose(const PElement& x, const PElement& y);
PElement p_inverse(const PElement& x);
PElement p_power(const PElement& x, Int n);

Isometry p_to_isometry(const PElement& x);
Triangle p_left_action(const PElement& x, const Triangle& t);
// Triad attached to x: the image of C-E-G.
inline Triangle p_triangle(const PElement& x) { return p_left_action(x, kReferenceTriangle); }

// pi3 pi2 -> Quintschritt, pi3 pi1 -> Terzschritt, pi1 -> Seitenwechsel;
// reverses products.
RElement p_to_r(const PElement& x);
PElement r_to_p(const RElement& r);

bool in_comma_subgroup(const PElement& x);

// Named elements of K.
PElement lesser_diesis();      // (pi3 pi1)^3
PElement greater_diesis();     // (pi1 pi2)^4
PElement syntonic_comma();     // (pi3 pi2)^3 pi1 pi2
PElement pythagorean_comma();  // (pi3 pi2)^12
// h = (pi1 pi2)^-1 (pi3 pi1), the semitone.
PElement semitone();

struct D12Coset {
  bool flip = false;
  int a_mod3 = 0;
  int b_mod4 = 0;
  friend auto operator<=>(const D12Coset&, const D12Coset&) = default;
};

D12Coset project_d12(const PElement& x);
D12Coset d12_compose(const D12Coset& x, const D12Coset& y);
D12Coset d12_inverse(const D12Coset& x);
int d12_order(const D12Coset& x);

// "Q^u Z^v" with an optional trailing "W".
std::string to_string(const RElement& r);
RElement parse_relement(std::string_view text);
// "(a,b,flip)" with flip 0 or 1.
std::string to_string(const PElement& x);
PElement parse_pelement(std::string_view text);
std::string to_string(const D12Coset& c);

}  // namespace tonnetz
