#include "tonnetz/verify.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#include "tonnetz/progressions.hpp"
#include "tonnetz/riemann.hpp"
#include "tonnetz/subgroups.hpp"

namespace tonnetz {

namespace {

// A check returns nullopt on success, otherwise a description of the first
// counterexample.
using Failure = std::optional<std::string>;

class Report {
 public:
  explicit Report(std::string suite) : suite_(std::move(suite)) {}

  template <typename F>
  void check(const std::string& name, F&& body) {
    CheckResult r{suite_, name, false, {}};
    try {
      const Failure f = body();
      r.passed = !f;
      r.detail = f ? *f : "ok";
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    results_.push_back(std::move(r));
  }

  // A passing check whose detail carries a summary line.
  void note(const std::string& name, std::string summary) {
    results_.push_back({suite_, name, true, std::move(summary)});
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::string suite_;
  std::vector<CheckResult> results_;
};

std::string str(const AffinePermutation& f) { return to_string(f); }

int capped(int radius, int cap) { return std::max(0, std::min(radius, cap)); }

// Triangles at gallery distance <= radius from (*), by layer.
std::vector<std::size_t> gallery_layer_sizes(int radius) {
  std::unordered_map<Triangle, int> dist{{kReferenceTriangle, 0}};
  std::deque<Triangle> frontier{kReferenceTriangle};
  std::vector<std::size_t> sizes(radius + 1, 0);
  while (!frontier.empty()) {
    const Triangle t = frontier.front();
    frontier.pop_front();
    const int d = dist.at(t);
    ++sizes[d];
    if (d == radius) continue;
    for (EdgeType e : {EdgeType::Fifth, EdgeType::MinorThird, EdgeType::MajorThird}) {
      const Triangle n = flip(t, e);
      if (dist.emplace(n, d + 1).second) frontier.push_back(n);
    }
  }
  return sizes;
}

std::vector<CheckResult> coxeter_suite(int radius) {
  Report rep("coxeter");
  const auto elems = ball(radius);
  const auto small = ball(capped(radius, 4));
  using G = Generator;

  rep.check("generator involutions", [&]() -> Failure {
    for (G g : kGenerators)
      if (from_word({g, g}) != identity()) return "s" + std::to_string(index_of(g)) + "^2 != e";
    return {};
  });
  rep.check("braid relations", [&]() -> Failure {
    for (G x : kGenerators)
      for (G y : kGenerators) {
        if (x == y) continue;
        if (from_word({x, y, x, y, x, y}) != identity())
          return "(s" + std::to_string(index_of(x)) + " s" + std::to_string(index_of(y)) +
                 ")^3 != e";
      }
    return {};
  });
  rep.check("identity and inverse laws", [&]() -> Failure {
    for (const auto& f : elems) {
      if (compose(f, identity()) != f || compose(identity(), f) != f) return str(f);
      if (compose(f, inverse(f)) != identity() || compose(inverse(f), f) != identity())
        return "inverse of " + str(f);
    }
    return {};
  });
  rep.check("associativity", [&]() -> Failure {
    for (const auto& f : small)
      for (const auto& g : small)
        for (const auto& h : small)
          if (compose(compose(f, g), h) != compose(f, compose(g, h)))
            return str(f) + " " + str(g) + " " + str(h);
    return {};
  });
  rep.check("closure of window validity", [&]() -> Failure {
    // The constructor rejects invalid windows, so reaching the end is the check.
    for (const auto& f : small)
      for (const auto& g : small) (void)compose(f, g);
    for (const auto& f : elems) (void)inverse(f);
    return {};
  });
  rep.check("window rule equals composition", [&]() -> Failure {
    for (const auto& f : elems)
      for (G g : kGenerators)
        if (compose(f, generator(g)) != right_mult_generator(f, g))
          return str(f) + " * s" + std::to_string(index_of(g));
    return {};
  });
  rep.check("periodicity and bijectivity", [&]() -> Failure {
    for (const auto& f : elems) {
      std::set<Int> image;
      for (Int n = -30; n <= 30; ++n) {
        if (eval(f, n + 3) != eval(f, n) + 3) return str(f) + " at " + std::to_string(n);
        image.insert(eval(f, n));
      }
      if (image.size() != 61) return str(f) + " not injective";
    }
    return {};
  });
  return rep.take();
}

std::vector<CheckResult> length_suite(int radius) {
  Report rep("length");
  const auto elems = ball(radius);

  rep.check("length equals gallery distance", [&]() -> Failure {
    for (const auto& f : elems)
      if (length(f) != gallery_distance_bfs(kReferenceTriangle, triangle_of(f)))
        return str(f);
    return {};
  });
  rep.check("descent test", [&]() -> Failure {
    for (const auto& f : elems) {
      const auto ds = right_descents(f);
      for (Generator g : kGenerators) {
        const bool listed = std::find(ds.begin(), ds.end(), g) != ds.end();
        const bool shorter = length(right_mult_generator(f, g)) < length(f);
        if (listed != shorter) return str(f) + " s" + std::to_string(index_of(g));
      }
    }
    return {};
  });
  rep.check("reduced word round trip", [&]() -> Failure {
    for (const auto& f : elems) {
      const auto w = reduce(f);
      if (from_word(w) != f || static_cast<Int>(w.size()) != length(f)) return str(f);
    }
    return {};
  });
  rep.check("ball layers match gallery layers", [&]() -> Failure {
    std::vector<std::size_t> by_length(radius + 1, 0);
    for (const auto& f : elems) ++by_length[length(f)];
    const auto gallery = gallery_layer_sizes(radius);
    for (int d = 0; d <= radius; ++d)
      if (by_length[d] != gallery[d]) return "layer " + std::to_string(d);
    return {};
  });
  rep.check("parity", [&]() -> Failure {
    for (const auto& f : elems)
      if (is_even(f) != (length(f) % 2 == 0)) return str(f);
    return {};
  });
  rep.check("order spectrum", [&]() -> Failure {
    for (const auto& f : elems) {
      const auto k = order(f);
      if (k && *k > 3) return str(f) + " has order " + std::to_string(*k);
    }
    return {};
  });
  rep.check("classification partition", [&]() -> Failure {
    for (const auto& f : elems) {
      const auto k = order(f);
      const ElementType t = classify(f);
      const bool ok = (t == ElementType::Identity) == (k == 1) &&
                      (t == ElementType::Reflection) == (k == 2) &&
                      (t == ElementType::Rotation) == (k == 3) &&
                      (t == ElementType::Translation) == (!k && is_even(f)) &&
                      (t == ElementType::Translation) == (is_translation(f) && f != identity());
      if (!ok) return str(f);
    }
    return {};
  });
  rep.check("center coordinates", [&]() -> Failure {
    for (const auto& f : elems) {
      const auto c = center_coords(f);
      if (c.c1 + c.c2 + c.c3 != 0) return str(f) + " does not sum to 0";
      const Int half = (std::abs(c.c1) + std::abs(c.c2) + std::abs(c.c3)) / 2;
      if (corollary_distance(f) != half) return str(f) + " positive sum != half sum";
    }
    return {};
  });
  {
    std::size_t disagree = 0, even_disagree = 0;
    Int worst = 0;
    for (const auto& f : elems) {
      const Int gap = length(f) - corollary_distance(f);
      if (gap != 0) {
        ++disagree;
        if (is_even(f)) ++even_disagree;
      }
      worst = std::max(worst, std::abs(gap));
    }
    rep.note("corollary distance vs length",
             std::to_string(disagree) + " of " + std::to_string(elems.size()) +
                 " elements differ (" + std::to_string(even_disagree) +
                 " even), largest gap " + std::to_string(worst));
  }
  return rep.take();
}

std::vector<CheckResult> triangles_suite(int radius) {
  Report rep("triangles");
  const auto elems = ball(radius);

  rep.check("reduced words give distinct windows", [&]() -> Failure {
    // Every word over {s1,s2,s3} up to the radius, keeping the reduced ones.
    const int r = capped(radius, 7);
    std::vector<GeneratorWord> frontier{{}};
    std::set<AffinePermutation> seen;
    std::size_t reduced = 0;
    for (int len = 0; len <= r; ++len) {
      std::vector<GeneratorWord> next;
      for (const auto& w : frontier) {
        const auto f = from_word(w);
        if (length(f) != len) continue;
        ++reduced;
        seen.insert(f);
        for (Generator g : kGenerators) {
          auto x = w;
          x.push_back(g);
          next.push_back(std::move(x));
        }
      }
      frontier = std::move(next);
    }
    if (seen.size() != ball(r).size()) return "distinct elements != ball size";
    (void)reduced;
    return {};
  });
  rep.check("coordinates determine the element", [&]() -> Failure {
    for (const auto& f : elems)
      if (triangle_to_perm(center_coords(f)) != f) return str(f);
    return {};
  });
  rep.check("triangle_of injective", [&]() -> Failure {
    std::set<Triangle> seen;
    for (const auto& f : elems)
      if (!seen.insert(triangle_of(f)).second) return str(f);
    return {};
  });
  rep.check("geometric coordinates agree", [&]() -> Failure {
    for (const auto& f : elems)
      if (geometric_center_coords(triangle_of(f)) != center_coords(f)) return str(f);
    return {};
  });
  rep.check("triangle to element round trip", [&]() -> Failure {
    for (const auto& f : elems)
      if (perm_of_triangle(triangle_of(f)) != f) return str(f);
    return {};
  });
  return rep.take();
}

std::vector<CheckResult> isometry_suite(int radius) {
  Report rep("isometry");
  const auto elems = ball(radius);
  const auto small = ball(capped(radius, 5));

  rep.check("homomorphism", [&]() -> Failure {
    for (const auto& f : small)
      for (const auto& g : small)
        if (perm_to_iso(compose(f, g)) != compose_iso(perm_to_iso(f), perm_to_iso(g)))
          return str(f) + " " + str(g);
    return {};
  });
  rep.check("generators are involutions fixing their edge", [&]() -> Failure {
    const VertexPoint c{0, 0}, g{1, 0}, e{0, 1};
    const std::array<std::array<VertexPoint, 2>, 3> edges{{{c, g}, {c, e}, {e, g}}};
    for (Generator s : kGenerators) {
      const Isometry iso = generator_isometry(s);
      if (compose_iso(iso, iso) != identity_isometry()) return "s" + std::to_string(index_of(s));
      for (const VertexPoint& v : edges[index_of(s) - 1])
        if (apply(iso, v) != v) return "s" + std::to_string(index_of(s)) + " moves its edge";
    }
    return {};
  });
  rep.check("products of two generators have order 3", [&]() -> Failure {
    for (Generator x : kGenerators)
      for (Generator y : kGenerators) {
        if (x == y) continue;
        const Mat2 m = (generator_isometry(x).m * generator_isometry(y).m);
        if (m == Mat2::identity() || m * m * m != Mat2::identity()) return "matrix order";
      }
    return {};
  });
  rep.check("linear part matches element type", [&]() -> Failure {
    for (const auto& f : elems) {
      const Mat2 m = perm_to_iso(f).m;
      switch (classify(f)) {
        case ElementType::Identity:
        case ElementType::Translation:
          if (m != Mat2::identity()) return str(f);
          break;
        case ElementType::Reflection:
        case ElementType::GlideReflection:
          if (m.det() != -1) return str(f);
          break;
        case ElementType::Rotation:
          if (m.det() != 1 || m == Mat2::identity()) return str(f);
          break;
      }
    }
    return {};
  });
  rep.check("flips", [&]() -> Failure {
    for (const auto& f : elems) {
      const Triangle t = triangle_of(f);
      std::set<Triangle> images;
      for (EdgeType e : {EdgeType::Fifth, EdgeType::MinorThird, EdgeType::MajorThird}) {
        const Triangle n = flip(t, e);
        if (flip(n, e) != t || n.orientation == t.orientation) return to_string(t);
        images.insert(n);
      }
      if (images.size() != 3) return to_string(t);
    }
    return {};
  });
  return rep.take();
}

std::vector<CheckResult> subgroups_suite(int radius) {
  Report rep("subgroups");
  const auto elems = ball(radius);
  const auto small = ball(capped(radius, 4));
  const int box = capped(radius, 3);
  const auto t1 = translation_generator(1), t2 = translation_generator(2),
             t3 = translation_generator(3);

  rep.check("t1 t2 = t3^-1 = t2 t1", [&]() -> Failure {
    if (compose(t1, t2) != inverse(t3) || compose(t2, t1) != inverse(t3)) return "relation";
    return {};
  });
  rep.check("translations commute", [&]() -> Failure {
    for (Int a = -box; a <= box; ++a)
      for (Int b = -box; b <= box; ++b)
        for (Int c = -box; c <= box; ++c)
          for (Int d = -box; d <= box; ++d) {
            const auto x = translation_element({a, b}), y = translation_element({c, d});
            if (compose(x, y) != compose(y, x)) return str(x) + " " + str(y);
          }
    return {};
  });
  rep.check("translation coordinates round trip", [&]() -> Failure {
    for (Int a = -box; a <= box; ++a)
      for (Int b = -box; b <= box; ++b) {
        const TranslationVector v{a, b};
        const auto x = translation_element(v);
        if (translation_coords(x) != v) return to_string(v);
        if (perm_to_iso(x).v != translation_offset(v)) return to_string(v) + " offset";
      }
    return {};
  });
  rep.check("normality", [&]() -> Failure {
    for (int i = 1; i <= 3; ++i)
      for (Int a = -box; a <= box; ++a)
        for (Int b = -box; b <= box; ++b) {
          const auto s = generator(i);
          const auto conj = compose(compose(s, translation_element({a, b})), s);
          if (!is_translation(conj)) return "s" + std::to_string(i);
        }
    if (conjugate_translation(1, {1, 0}) != TranslationVector{-1, 0}) return "s1 t1 s1";
    if (conjugate_translation(2, {1, 0}) != translation_coords(inverse(t3))) return "s2 t1 s2";
    if (conjugate_translation(3, {1, 0}) != translation_coords(inverse(t2))) return "s3 t1 s3";
    return {};
  });
  rep.check("unique decomposition", [&]() -> Failure {
    for (const auto& f : elems) {
      int hits = 0;
      for (FiniteS3 s : kFiniteS3)
        if (is_translation(compose(f, inverse(s3_element(s))))) ++hits;
      const Decomposition d = decompose(f);
      if (hits != 1 || compose(translation_element(d.translation), s3_element(d.finite)) != f)
        return str(f);
    }
    return {};
  });
  rep.check("index 6", [&]() -> Failure {
    std::set<FiniteS3> classes;
    for (FiniteS3 s : kFiniteS3) classes.insert(coset_mod_T(s3_element(s)));
    if (classes.size() != 6) return "cosets collide";
    return {};
  });
  rep.check("quotient is a homomorphism", [&]() -> Failure {
    for (const auto& f : small)
      for (const auto& g : small)
        if (coset_mod_T(compose(f, g)) != s3_multiply(coset_mod_T(f), coset_mod_T(g)))
          return str(f) + " " + str(g);
    return {};
  });
  rep.check("even subgroup is a subgroup", [&]() -> Failure {
    for (const auto& f : small) {
      if (!is_even(f)) continue;
      if (!is_even(inverse(f))) return str(f);
      for (const auto& g : small)
        if (is_even(g) && !is_even(compose(f, g))) return str(f) + " " + str(g);
    }
    return {};
  });
  rep.check("even elements are rotations and translations", [&]() -> Failure {
    for (const auto& f : elems) {
      const ElementType t = classify(f);
      const bool in_n = t == ElementType::Identity || t == ElementType::Rotation ||
                        t == ElementType::Translation;
      if (in_n != is_even(f)) return str(f);
    }
    return {};
  });
  rep.check("semidirect product by s1", [&]() -> Failure {
    const auto s1 = generator(1);
    auto embed = [&](int eps, const AffinePermutation& n) { return eps ? compose(s1, n) : n; };
    auto psi = [&](const AffinePermutation& n) { return compose(compose(s1, n), s1); };
    std::vector<AffinePermutation> evens;
    for (const auto& f : small)
      if (is_even(f)) evens.push_back(f);
    std::set<AffinePermutation> image;
    for (int e = 0; e < 2; ++e)
      for (const auto& n : evens) image.insert(embed(e, n));
    if (image.size() != 2 * evens.size()) return "embedding not injective";
    for (int e1 = 0; e1 < 2; ++e1)
      for (int e2 = 0; e2 < 2; ++e2)
        for (const auto& n1 : evens)
          for (const auto& n2 : evens) {
            // s1^e1 n1 s1^e2 n2 = s1^(e1+e2) psi^e2(n1) n2
            const auto lhs = compose(embed(e1, n1), embed(e2, n2));
            const auto twisted = e2 ? psi(n1) : n1;
            const auto rhs = embed((e1 + e2) % 2, compose(twisted, n2));
            if (lhs != rhs) return str(n1) + " " + str(n2);
          }
    return {};
  });
  return rep.take();
}

std::vector<CheckResult> riemann_suite(int radius) {
  Report rep("riemann");
  const int box = capped(radius, 3);
  std::vector<RElement> rs;
  std::vector<PElement> ps;
  for (int w = 0; w < 2; ++w)
    for (Int u = -box; u <= box; ++u)
      for (Int v = -box; v <= box; ++v) {
        rs.push_back({w == 1, u, v});
        ps.push_back({w == 1, u, v});
      }

  rep.check("Wechsel product law", [&]() -> Failure {
    for (const auto& x : rs)
      for (const auto& y : rs) {
        if (x.wechsel || y.wechsel) continue;
        const RElement lhs = r_compose({true, x.u, x.v}, {true, y.u, y.v});
        if (lhs != RElement{false, x.u - y.u, x.v - y.v}) return to_string(x) + " " + to_string(y);
      }
    return {};
  });
  rep.check("R associativity and inverses", [&]() -> Failure {
    for (const auto& x : rs) {
      if (r_compose(x, r_inverse(x)) != r_identity()) return to_string(x);
      for (const auto& y : rs)
        for (const auto& z : rs)
          if (r_compose(r_compose(x, y), z) != r_compose(x, r_compose(y, z)))
            return to_string(x) + " " + to_string(y) + " " + to_string(z);
    }
    return {};
  });
  rep.check("R has no element of order 3", [&]() -> Failure {
    for (const auto& x : rs) {
      const auto k = r_order(x);
      if (x.wechsel && k != 2) return to_string(x);
      if (!x.wechsel && x != r_identity() && k) return to_string(x);
    }
    if (order(from_word({Generator::S2, Generator::S3})) != 3) return "s2 s3 lacks order 3";
    return {};
  });
  rep.check("P normal form matches the isometries", [&]() -> Failure {
    for (int i = 1; i <= 3; ++i) {
      const Isometry iso = p_to_isometry(p_generator(i));
      if (iso.m != Mat2{{-1, 0, 0, -1}}) return "pi" + std::to_string(i) + " not a half-turn";
      if (compose_iso(iso, iso) != identity_isometry()) return "pi" + std::to_string(i);
    }
    for (const auto& x : ps)
      for (const auto& y : ps)
        if (p_to_isometry(p_compose(x, y)) != compose_iso(p_to_isometry(x), p_to_isometry(y)))
          return to_string(x) + " " + to_string(y);
    return {};
  });
  rep.check("P associativity", [&]() -> Failure {
    for (const auto& x : ps)
      for (const auto& y : ps)
        for (const auto& z : ps)
          if (p_compose(p_compose(x, y), z) != p_compose(x, p_compose(y, z)))
            return to_string(x) + " " + to_string(y) + " " + to_string(z);
    return {};
  });
  rep.check("P to R anti-isomorphism", [&]() -> Failure {
    if (p_to_r(p_compose(p_generator(3), p_generator(2))) != quintschritt()) return "pi3 pi2";
    if (p_to_r(p_compose(p_generator(3), p_generator(1))) != terzschritt()) return "pi3 pi1";
    if (p_to_r(p_generator(1)) != seitenwechsel()) return "pi1";
    std::set<RElement> image;
    for (const auto& x : ps) {
      if (r_to_p(p_to_r(x)) != x) return to_string(x) + " not inverted";
      image.insert(p_to_r(x));
      for (const auto& y : ps)
        if (p_to_r(p_compose(x, y)) != r_compose(p_to_r(y), p_to_r(x)))
          return to_string(x) + " " + to_string(y);
    }
    if (image.size() != ps.size()) return "not injective";
    return {};
  });
  rep.check("right action of P is Riemann's action", [&]() -> Failure {
    const PElement quint = p_compose(p_generator(3), p_generator(2));
    const PElement terz = p_compose(p_generator(3), p_generator(1));
    for (const auto& x : ps) {
      const Triangle t = p_triangle(x);
      if (p_triangle(p_compose(x, quint)) != apply_plr(parse_plr("RL"), t)) return to_string(x);
      if (p_triangle(p_compose(x, terz)) != apply_plr(parse_plr("PL"), t)) return to_string(x);
      if (p_triangle(p_compose(x, p_generator(1))) != apply_plr(parse_plr("P"), t))
        return to_string(x);
    }
    return {};
  });
  rep.check("Schritte move major and minor triads oppositely", [&]() -> Failure {
    const PElement quint = p_compose(p_generator(3), p_generator(2));
    for (const auto& x : ps) {
      const Triangle before = p_triangle(x), after = p_triangle(p_compose(x, quint));
      const VertexPoint step = after.root - before.root;
      const VertexPoint expected = before.orientation == Orientation::Up ? kFifth : -kFifth;
      if (step != expected) return to_string(x);
    }
    return {};
  });
  rep.check("comma subgroup is normal", [&]() -> Failure {
    for (int i = 1; i <= 3; ++i) {
      const PElement pi = p_generator(i);
      for (const PElement& k : {lesser_diesis(), greater_diesis()})
        if (!in_comma_subgroup(p_compose(p_compose(pi, k), p_inverse(pi)))) return to_string(k);
    }
    for (const auto& x : ps)
      for (const PElement& k : {lesser_diesis(), greater_diesis()})
        if (!in_comma_subgroup(p_compose(p_compose(x, k), p_inverse(x)))) return to_string(x);
    return {};
  });
  rep.check("named commas lie in K", [&]() -> Failure {
    for (const PElement& k :
         {lesser_diesis(), greater_diesis(), syntonic_comma(), pythagorean_comma()}) {
      if (!in_comma_subgroup(k)) return to_string(k);
      // K = <(3,0), (0,4)>: express k in those generators.
      const PElement rebuilt =
          p_compose(p_power(lesser_diesis(), k.a / 3), p_power(greater_diesis(), k.b / 4));
      if (rebuilt != k) return to_string(k) + " not generated";
    }
    return {};
  });
  rep.check("quotient P/K is dihedral of order 24", [&]() -> Failure {
    std::set<D12Coset> cosets;
    for (int f = 0; f < 2; ++f)
      for (Int a = -6; a <= 6; ++a)
        for (Int b = -8; b <= 8; ++b) cosets.insert(project_d12({f == 1, a, b}));
    if (cosets.size() != 24) return std::to_string(cosets.size()) + " cosets";
    for (const auto& x : ps)
      for (const auto& y : ps)
        if (project_d12(p_compose(x, y)) != d12_compose(project_d12(x), project_d12(y)))
          return to_string(x) + " " + to_string(y);
    const D12Coset h = project_d12(semitone()), rho = project_d12(p_generator(1));
    if (d12_order(h) != 12) return "h has order " + std::to_string(d12_order(h));
    if (d12_order(rho) != 2) return "rho order";
    if (d12_compose(d12_compose(rho, h), d12_inverse(rho)) != d12_inverse(h)) return "relation";
    std::set<D12Coset> generated{D12Coset{}};
    for (bool grew = true; grew;) {
      grew = false;
      for (const D12Coset& c : std::set<D12Coset>(generated))
        for (const D12Coset& g : {h, rho})
          grew |= generated.insert(d12_compose(c, g)).second;
    }
    if (generated != cosets) return "h and rho do not generate";
    return {};
  });
  return rep.take();
}

std::vector<CheckResult> pitch_suite(int radius) {
  Report rep("pitch");
  const Int box = std::max(radius, 1) + 2;

  rep.check("chord symbols round trip", [&]() -> Failure {
    for (Int p = -box; p <= box; ++p)
      for (Int q = -box; q <= box; ++q)
        for (Orientation o : {Orientation::Up, Orientation::Down}) {
          const Triangle t{{p, q}, o};
          const std::string text = to_string(name_triangle(t), true);
          if (parse_chord(text).triangle != t) return text;
        }
    return {};
  });
  rep.check("spelling is injective", [&]() -> Failure {
    std::set<std::pair<std::string, Int>> seen;
    for (Int p = -box; p <= box; ++p)
      for (Int q = -box; q <= box; ++q) {
        const NoteName n = spell_vertex({p, q});
        if (vertex_of(n) != VertexPoint{p, q}) return to_string(VertexPoint{p, q});
        if (!seen.insert({to_string(n), n.comma_level}).second) return to_string(n, true);
      }
    return {};
  });
  rep.check("Tonnetz labels around C-E-G", [&]() -> Failure {
    const std::vector<std::pair<VertexPoint, std::string>> labels{
        {{0, -1}, "Ab"}, {{-1, 0}, "F"}, {{1, -1}, "Eb"}, {{0, 0}, "C"},
        {{-1, 1}, "A"},  {{2, -1}, "Bb"}, {{1, 0}, "G"},  {{0, 1}, "E"},
        {{-1, 2}, "C#"}, {{2, 0}, "D"},  {{1, 1}, "B"},  {{0, 2}, "G#"}};
    for (const auto& [v, name] : labels)
      if (to_string(spell_vertex(v)) != name) return name;
    return {};
  });
  rep.check("hexagon tiling labels", [&]() -> Failure {
    // Label positions in the tiling diagram: x = 3 e2, y = 2 e1 - e2.
    const std::vector<std::tuple<Int, Int, std::string>> labels{
        {0, 0, "E"},   {0, 2, "E#"},  {0, -2, "Eb"}, {-3, -1, "F"}, {-3, 1, "F#"},
        {3, -1, "D"},  {3, 1, "D#"},  {-6, 0, "G"},  {-6, 2, "G#"}, {-6, -2, "Gb"},
        {6, 0, "C#"},  {6, 2, "Cx"},  {6, -2, "C"}};
    for (const auto& [x, y, name] : labels) {
      const Int e2 = x / 3, e1 = (y + e2) / 2;
      if (to_string(spell_vertex(hexagon_center({{e1, e2}}))) != name) return name;
    }
    return {};
  });
  rep.check("pitch classes", [&]() -> Failure {
    static constexpr int kNatural[7] = {5, 0, 7, 2, 9, 4, 11};  // F C G D A E B
    for (Int k = -21; k <= 21; ++k) {
      const NoteName n{k, 0};
      const auto letter = std::string_view("FCGDAEB").find(n.letter());
      const int expected = static_cast<int>(((kNatural[letter] + n.accidentals()) % 12 + 12) % 12);
      if (pitch_class(n) != expected) return to_string(n);
    }
    return {};
  });
  return rep.take();
}

std::vector<CheckResult> progressions_suite(int radius) {
  Report rep("progressions");
  const auto elems = ball(capped(radius, 6));
  const Triangle c_major = kReferenceTriangle, c_minor{{0, 0}, Orientation::Down};

  rep.check("drift of a major/minor pair", [&]() -> Failure {
    const PlrWord rl = parse_plr("RL");
    const Triangle a = apply_plr(rl, c_major), b = apply_plr(rl, c_minor);
    if (to_string(name_triangle(a)) != "G" || to_string(name_triangle(b)) != "Fm") return "images";
    if (gallery_distance_bfs(c_major, c_minor) != 1) return "start distance";
    if (gallery_distance_bfs(a, b) <= 1) return "no drift";
    return {};
  });
  rep.check("parallel shift of same-mode pairs", [&]() -> Failure {
    std::vector<PlrWord> words{{}};
    for (int len = 1; len <= 3; ++len) {
      std::vector<PlrWord> grown;
      for (const auto& w : words)
        if (static_cast<int>(w.size()) == len - 1)
          for (PlrMove m : {PlrMove::P, PlrMove::L, PlrMove::R}) {
            auto x = w;
            x.push_back(m);
            grown.push_back(x);
          }
      words.insert(words.end(), grown.begin(), grown.end());
    }
    for (const auto& f : elems) {
      const Triangle t = triangle_of(f);
      const Triangle base = t.orientation == Orientation::Up ? c_major : c_minor;
      for (const auto& w : words) {
        const VertexPoint before = t.root - base.root;
        const VertexPoint after = apply_plr(w, t).root - apply_plr(w, base).root;
        if (before != after) return to_string(t) + " " + to_string(w);
      }
    }
    return {};
  });
  rep.check("chord paths are shortest", [&]() -> Failure {
    std::vector<Triangle> ts;
    for (const auto& f : ball(capped(radius, 3))) ts.push_back(triangle_of(f));
    for (const auto& a : ts)
      for (const auto& b : ts) {
        const PlrWord w = plr_path(a, b);
        if (apply_plr(w, a) != b) return to_string(a) + " " + to_string(b);
        if (static_cast<Int>(w.size()) != gallery_distance_bfs(a, b)) return "length";
        if (w.size() != plr_path(b, a).size()) return "asymmetric";
      }
    for (const auto& a : ts)
      for (const auto& b : ts)
        for (std::size_t k = 0; k < ts.size(); k += 5) {
          const auto& c = ts[k];
          if (plr_path(a, c).size() > plr_path(a, b).size() + plr_path(b, c).size())
            return "triangle inequality";
        }
    return {};
  });
  rep.check("hexagon cycles", [&]() -> Failure {
    for (const auto& f : elems) {
      const Triangle seed = triangle_of(f);
      const HexagonCycle h = hexagon_cycle(seed);
      if (h.triangles.size() != 6 || h.triangles.front() != seed) return to_string(seed);
      std::set<Triangle> distinct(h.triangles.begin(), h.triangles.end());
      if (distinct.size() != 6) return to_string(seed) + " repeats";
      for (std::size_t k = 0; k < 6; ++k) {
        const Triangle& x = h.triangles[k];
        const Triangle& y = h.triangles[(k + 1) % 6];
        if (!contains(x, h.common_tone) || gallery_distance_bfs(x, y) != 1)
          return to_string(seed) + " cycle";
      }
      if (h.base_class != FiniteS3::E) return to_string(seed) + " tile base not a translation";
    }
    return {};
  });
  rep.check("hexagons by alternating right multiplication", [&]() -> Failure {
    const std::map<FiniteS3, std::set<Generator>> expected{
        {FiniteS3::E, {Generator::S2, Generator::S3}},
        {FiniteS3::S3S2, {Generator::S1, Generator::S3}},
        {FiniteS3::S2S3, {Generator::S1, Generator::S2}}};
    for (Int p = -2; p <= 2; ++p)
      for (Int q = -2; q <= 2; ++q) {
        const VertexPoint x{p, q};
        const HexagonCycle h = vertex_hexagon(Triangle{x - kMajorThird, Orientation::Up}, x);
        const auto it = expected.find(h.base_class);
        if (it == expected.end()) return to_string(x) + " base class";
        if (it->second != std::set<Generator>{h.generators[0], h.generators[1]})
          return to_string(x) + " generator pair";
        Triangle t = h.base;
        for (int k = 0; k < 6; ++k) {
          if (t != h.triangles[k]) return to_string(x) + " order";
          t = right_mult(t, h.generators[k % 2]);
        }
        if (t != h.base) return to_string(x) + " not closed";
      }
    return {};
  });
  rep.check("rotation and translation cycles", [&]() -> Failure {
    for (const auto& f : elems) {
      const Triangle seed = triangle_of(f);
      for (RotationSense s : {RotationSense::Positive, RotationSense::Negative}) {
        const auto cyc = rotation_cycle(seed, s);
        const Isometry rot = perm_to_iso(
            s3_element(s == RotationSense::Positive ? FiniteS3::S3S2 : FiniteS3::S2S3));
        if (apply(rot, cyc.back()) != seed) return to_string(seed) + " rotation";
        for (const auto& t : cyc)
          if (t.orientation != seed.orientation) return to_string(seed) + " orientation";
      }
      if (translation_cycle(seed).back() != seed) return to_string(seed) + " translation";
    }
    return {};
  });
  rep.check("stripes", [&]() -> Failure {
    for (const auto& f : elems) {
      const Triangle seed = triangle_of(f);
      for (StripeKind k : {StripeKind::Fifths, StripeKind::Hexatonic, StripeKind::Octatonic}) {
        const auto st = stripe(seed, k, 6);
        std::set<int> pcs;
        for (std::size_t i = 0; i < st.size(); ++i) {
          if (i && gallery_distance_bfs(st[i - 1], st[i]) != 1) return to_string(seed) + " gap";
          for (const VertexPoint& v : vertices(st[i])) pcs.insert(pitch_class(spell_vertex(v)));
        }
        if (k == StripeKind::Hexatonic && pcs.size() > 6) return "hexatonic";
        if (k == StripeKind::Octatonic && pcs.size() > 8) return "octatonic";
        if (k == StripeKind::Fifths) {
          std::optional<Int> prev;
          for (const Triangle& t : st) {
            if (t.orientation != Orientation::Up) continue;
            const Int root = spell_vertex(t.root).fifth_index;
            if (prev && root != *prev + 1) return "fifths";
            prev = root;
          }
        }
      }
    }
    return {};
  });
  return rep.take();
}

}  // namespace

const std::vector<VerificationSuite>& verification_suites() {
  static const std::vector<VerificationSuite> suites{
      {"coxeter", "Coxeter relations, group axioms and the window rule", coxeter_suite},
      {"isometry", "lattice isometries, homomorphism and edge flips", isometry_suite},
      {"length", "word length, descents, gallery distance and element types", length_suite},
      {"pitch", "note spelling, chord symbols and diagram labels", pitch_suite},
      {"progressions", "P/L/R moves, paths, hexagons, cycles and stripes", progressions_suite},
      {"riemann", "Schritt/Wechsel group, point reflections, commas and P/K", riemann_suite},
      {"subgroups", "translations, decomposition, quotient and even subgroup", subgroups_suite},
      {"triangles", "one-to-one correspondence of elements and triangles", triangles_suite},
  };
  return suites;
}

std::vector<CheckResult> run_verification(const std::string& suite, int radius) {
  if (radius < 0) throw std::invalid_argument("radius must be non-negative");
  std::vector<CheckResult> out;
  bool found = false;
  for (const auto& s : verification_suites()) {
    if (suite != "all" && suite != s.name) continue;
    found = true;
    auto r = s.run(radius);
    out.insert(out.end(), r.begin(), r.end());
  }
  if (!found) throw std::invalid_argument("unknown verification suite '" + suite + "'");
  return out;
}

}  // namespace tonnetz
