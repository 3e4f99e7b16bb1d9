#pragma once

// Independent reference computations for the tests. Nothing here calls into
// the library's algorithms; inputs and outputs are plain integers.

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using I = std::int64_t;
using Window = std::array<I, 3>;

inline I floor_div(I a, I b) {
  I q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// f(n) for the periodic map with f(-1), f(0), f(1) given.
inline I apply(const Window& w, I n) {
  const I k = floor_div(n + 1, 3);  // n = 3k + (slot - 1)
  const I slot = n + 1 - 3 * k;
  return w[slot] + 3 * k;
}

// Composition evaluated point by point on a full period.
inline Window compose(const Window& f, const Window& g) {
  Window out{};
  for (I n = -1; n <= 1; ++n) out[n + 1] = apply(f, apply(g, n));
  return out;
}

inline const Window kIdentity{-1, 0, 1};

inline Window generator(int i) {
  // s_i swaps m and m+1 for every m = i+1 (mod 3).
  Window w = kIdentity;
  for (I n = -1; n <= 1; ++n) {
    const I r = ((n % 3) + 3) % 3;
    if (r == (i + 1) % 3) w[n + 1] = n + 1;
    else if (r == (i + 2) % 3) w[n + 1] = n - 1;
  }
  return w;
}

inline Window from_word(const std::vector<int>& word) {
  Window f = kIdentity;
  for (int i : word) f = compose(f, generator(i));
  return f;
}

// Inversion count for affine permutations of period 3.
inline I shi_length(const Window& w) {
  I total = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      const I d = floor_div(w[j] - w[i], 3);
      total += d < 0 ? -d : d;
    }
  return total;
}

// Triangles as sorted vertex triples in lattice coordinates (p, q).
using Vertex = std::pair<I, I>;
using Tri = std::array<Vertex, 3>;

inline Tri make_tri(Vertex a, Vertex b, Vertex c) {
  Tri t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

// Up triangle at v: v, v+(1,0), v+(0,1). Down: v, v+(1,0), v+(1,-1).
inline Tri up(I p, I q) { return make_tri({p, q}, {p + 1, q}, {p, q + 1}); }
inline Tri down(I p, I q) { return make_tri({p, q}, {p + 1, q}, {p + 1, q - 1}); }

// The three triangles sharing an edge with t: reflect each vertex through
// the opposite edge's midpoint.
inline std::vector<Tri> neighbours(const Tri& t) {
  std::vector<Tri> out;
  for (int k = 0; k < 3; ++k) {
    const Vertex& x = t[k];
    const Vertex& y = t[(k + 1) % 3];
    const Vertex& z = t[(k + 2) % 3];
    out.push_back(make_tri(y, z, {y.first + z.first - x.first, y.second + z.second - x.second}));
  }
  return out;
}

// Gallery distances from `from` out to `radius`.
inline std::map<Tri, int> gallery(const Tri& from, int radius) {
  std::map<Tri, int> dist{{from, 0}};
  std::deque<Tri> queue{from};
  while (!queue.empty()) {
    const Tri t = queue.front();
    queue.pop_front();
    if (dist[t] == radius) continue;
    for (const Tri& n : neighbours(t))
      if (dist.emplace(n, dist[t] + 1).second) queue.push_back(n);
  }
  return dist;
}

inline int distance(const Tri& a, const Tri& b, int cap = 64) {
  auto d = gallery(a, cap);
  auto it = d.find(b);
  return it == d.end() ? -1 : it->second;
}

// Permutation of residues {0,1,2} induced by a window.
inline std::array<int, 3> residue_perm(const Window& w) {
  std::array<int, 3> p{};
  for (I n = -1; n <= 1; ++n) {
    const int from = static_cast<int>(((n % 3) + 3) % 3);
    p[from] = static_cast<int>(((w[n + 1] % 3) + 3) % 3);
  }
  return p;
}

// Spelled note name from a line-of-fifths index (0 = C).
inline std::string spell(I k) {
  static const std::string letters = "FCGDAEB";
  const I shifted = k + 1;
  const I acc = floor_div(shifted, 7);
  std::string out(1, letters[static_cast<std::size_t>(shifted - 7 * acc)]);
  if (acc < 0) out += std::string(static_cast<std::size_t>(-acc), 'b');
  if (acc > 0) {
    if (acc % 2) out += "#";
    out += std::string(static_cast<std::size_t>(acc / 2), 'x');
  }
  return out;
}

// Note at lattice vertex (p, q): p fifths and q major thirds above C.
inline std::string note(I p, I q) { return spell(p + 4 * q); }

}  // namespace oracle
