#pragma once

#include "oracles.hpp"
#include "tonnetz/affine_permutation.hpp"
#include "tonnetz/lattice.hpp"

namespace testing {

inline oracle::Window win(const tonnetz::AffinePermutation& f) { return {f.a(), f.b(), f.c()}; }

inline oracle::Tri tri(const tonnetz::Triangle& t) {
  const auto v = tonnetz::vertices(t);
  return oracle::make_tri({v[0].p, v[0].q}, {v[1].p, v[1].q}, {v[2].p, v[2].q});
}

// Label of the edge opposite vertex (p, q): 1, 2 or 3 by (q - p) mod 3.
inline int vertex_label(const oracle::Vertex& v) {
  const auto r = ((v.second - v.first) % 3 + 3) % 3;
  return r == 0 ? 3 : static_cast<int>(r);
}

// Triangle reached from the reference triangle by crossing edges s_i in word order.
inline oracle::Tri walk(const std::vector<int>& word) {
  oracle::Tri t = oracle::up(0, 0);
  for (int i : word) {
    for (const auto& n : oracle::neighbours(t)) {
      // The neighbour across the s_i edge drops the vertex labelled i.
      bool keeps = true;
      for (const auto& v : t)
        if (vertex_label(v) == i && std::find(n.begin(), n.end(), v) != n.end()) keeps = false;
      if (keeps) {
        t = n;
        break;
      }
    }
  }
  return t;
}

inline std::vector<int> ints(const tonnetz::GeneratorWord& w) {
  std::vector<int> out;
  for (auto g : w) out.push_back(tonnetz::index_of(g));
  return out;
}

// All words over {1,2,3} of exactly the given length.
inline std::vector<std::vector<int>> words(int len) {
  std::vector<std::vector<int>> out{{}};
  for (int k = 0; k < len; ++k) {
    std::vector<std::vector<int>> next;
    for (const auto& w : out)
      for (int i = 1; i <= 3; ++i) {
        auto x = w;
        x.push_back(i);
        next.push_back(x);
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace testing
