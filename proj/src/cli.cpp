#include "tonnetz/cli.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "tonnetz/errors.hpp"
#include "tonnetz/progressions.hpp"
#include "tonnetz/riemann.hpp"
#include "tonnetz/subgroups.hpp"
#include "tonnetz/svg.hpp"
#include "tonnetz/verify.hpp"

namespace tonnetz {

namespace {

using nlohmann::json;

struct Output {
  bool json_mode = false;
  std::vector<std::string> lines;
  json doc = json::object();

  void field(const std::string& label, const std::string& text, json machine) {
    lines.push_back(label.empty() ? text : label + ": " + text);
    doc[label.empty() ? "result" : label] = std::move(machine);
  }
  void field(const std::string& label, const std::string& text) { field(label, text, text); }

  void flush(std::ostream& out) const {
    if (json_mode) {
      out << doc.dump(2) << "\n";
    } else {
      for (const auto& l : lines) out << l << "\n";
    }
  }
};

std::string join(const std::vector<std::string>& xs, const std::string& sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

json window_json(const AffinePermutation& f) { return json::array({f.a(), f.b(), f.c()}); }

json coords_json(const TriangleCoords& c) { return json::array({c.c1, c.c2, c.c3}); }

std::string chord_text(const Triangle& t) { return to_string(name_triangle(t)); }

std::vector<std::string> chord_texts(const std::vector<Triangle>& ts) {
  std::vector<std::string> out;
  for (const auto& t : ts) out.push_back(chord_text(t));
  return out;
}

class Commands {
 public:
  explicit Commands(std::optional<Int> comma) : comma_(comma) {}

  // '[' starts a window, 's' or a bare 'e' a generator word, anything else a chord.
  AffinePermutation element(const std::string& text) const {
    const auto first = text.find_first_not_of(" \t");
    if (first == std::string::npos) throw ParseError("empty element", 0);
    const char c = text[first];
    if (c == '[') return parse_window(text);
    if (c == 's' || text.substr(first) == "e") return from_word(parse_word(text));
    return perm_of_triangle(chord(text));
  }

  Triangle chord(const std::string& text) const { return parse_chord(text, comma_).triangle; }

  void describe_element(Output& o, const AffinePermutation& f) const {
    o.field("window", to_string(f), window_json(f));
    o.field("word", to_string(reduce(f)));
    const Triangle t = triangle_of(f);
    o.field("triangle", to_string(t));
    o.field("chord", chord_text(t));
  }

  void reduce_cmd(Output& o, const std::string& arg) const {
    const auto f = element(arg);
    const auto w = reduce(f);
    o.field("word", to_string(w));
    o.field("window", to_string(f), window_json(f));
    o.field("length", std::to_string(length(f)), length(f));
  }

  void mult_cmd(Output& o, const std::string& x, const std::string& y) const {
    const auto f = compose(element(x), element(y));
    o.field("window", to_string(f), window_json(f));
    o.field("word", to_string(reduce(f)));
  }

  void classify_cmd(Output& o, const std::string& arg) const {
    const auto f = element(arg);
    const auto k = order(f);
    o.field("window", to_string(f), window_json(f));
    o.field("type", to_string(classify(f)));
    o.field("order", k ? std::to_string(*k) : "infinite", k ? json(*k) : json("infinite"));
    o.field("even", is_even(f) ? "yes" : "no", is_even(f));
    o.field("center", to_string(center_coords(f)), coords_json(center_coords(f)));
    o.field("length", std::to_string(length(f)), length(f));
    o.field("corollary_distance", std::to_string(corollary_distance(f)), corollary_distance(f));
    const Int g = gallery_distance_bfs(kReferenceTriangle, triangle_of(f));
    o.field("gallery_distance", std::to_string(g), g);
    if (is_translation(f)) o.field("translation", to_string(translation_coords(f)));
  }

  void chord_cmd(Output& o, const std::string& arg) const {
    const auto f = element(arg);
    const Triangle t = triangle_of(f);
    o.field("chord", chord_text(t));
    o.field("triangle", to_string(t));
    o.field("window", to_string(f), window_json(f));
  }

  void locate_cmd(Output& o, const std::string& arg) const {
    const Triangle t = chord(arg);
    const auto f = perm_of_triangle(t);
    o.field("chord", to_string(name_triangle(t), true));
    o.field("triangle", to_string(t));
    o.field("window", to_string(f), window_json(f));
    o.field("word", to_string(reduce(f)));
    o.field("center", to_string(center_coords(f)), coords_json(center_coords(f)));
  }

  void path_cmd(Output& o, const std::string& from, const std::string& to) const {
    const Triangle a = chord(from), b = chord(to);
    const PlrWord w = plr_path(a, b);
    const auto g = reduce(compose(inverse(perm_of_triangle(a)), perm_of_triangle(b)));
    o.field("path", w.empty() ? "(empty)" : to_string(w), to_string(w));
    o.field("generators", to_string(g));
    o.field("length", std::to_string(w.size()), w.size());
    std::vector<Triangle> walk{a};
    for (auto it = w.rbegin(); it != w.rend(); ++it) walk.push_back(flip(walk.back(), edge_of(*it)));
    o.field("chords", join(chord_texts(walk)), chord_texts(walk));
  }

  void hexagon_cmd(Output& o, const std::string& arg, const std::string& tone) const {
    const Triangle seed = chord(arg);
    HexagonCycle h;
    if (tone.empty()) {
      h = hexagon_cycle(seed);
    } else {
      const NoteName n = parse_note(tone, comma_);
      const auto vs = vertices(seed);
      const auto it = std::find_if(vs.begin(), vs.end(), [&](VertexPoint v) {
        return spell_vertex(v).fifth_index == n.fifth_index;
      });
      if (it == vs.end()) throw std::invalid_argument(tone + " is not a note of " + arg);
      h = vertex_hexagon(seed, *it);
    }
    o.field("common_tone", to_string(spell_vertex(h.common_tone)));
    o.field("chords", join(chord_texts(h.triangles)), chord_texts(h.triangles));
    o.field("base", chord_text(h.base));
    o.field("base_class", to_string(h.base_class));
    const std::string gens = to_string(GeneratorWord{h.generators[0], h.generators[1]});
    o.field("generators", gens);
  }

  void stripe_cmd(Output& o, const std::string& arg, const std::string& kind, int count) const {
    const auto st = stripe(chord(arg), parse_stripe_kind(kind), count);
    o.field("chords", join(chord_texts(st)), chord_texts(st));
  }

  void analyze_cmd(Output& o, const std::string& text) const {
    const auto steps = analyze(parse_progression(text, comma_));
    json arr = json::array();
    for (const auto& s : steps) {
      std::string line = chord_text(s.from) + " -> " + chord_text(s.to) + ": " +
                         (s.path.empty() ? "(empty)" : to_string(s.path)) + " (" +
                         std::to_string(s.distance) + ")";
      json j{{"from", chord_text(s.from)},
             {"to", chord_text(s.to)},
             {"path", to_string(s.path)},
             {"distance", s.distance},
             {"same_tile", s.same_tile},
             {"common_tone", nullptr}};
      if (s.common_tone) {
        const std::string tone = to_string(spell_vertex(*s.common_tone));
        line += (s.same_tile ? ", same hexagon, common tone " : ", common tone ") + tone;
        j["common_tone"] = tone;
      }
      o.lines.push_back(line);
      arr.push_back(std::move(j));
    }
    o.doc["steps"] = std::move(arr);
  }

  void riemann_mult(Output& o, const std::string& x, const std::string& y) const {
    const RElement r = r_compose(parse_relement(x), parse_relement(y));
    o.field("product", to_string(r));
    const auto k = r_order(r);
    o.field("order", k ? std::to_string(*k) : "infinite", k ? json(*k) : json("infinite"));
  }

  void riemann_quotient(Output& o, const std::string& x) const {
    const PElement p = parse_pelement(x);
    const D12Coset c = project_d12(p);
    o.field("coset", to_string(c));
    o.field("order", std::to_string(d12_order(c)), d12_order(c));
    o.field("riemann", to_string(p_to_r(p)));
  }

  void riemann_comma(Output& o, const std::string& x) const {
    const PElement p = parse_pelement(x);
    o.field("in_comma_subgroup", in_comma_subgroup(p) ? "yes" : "no", in_comma_subgroup(p));
    o.field("riemann", to_string(p_to_r(p)));
    o.field("triangle", to_string(p_triangle(p)));
    o.field("chord", chord_text(p_triangle(p)));
  }

  bool verify_cmd(Output& o, const std::string& suite, int radius, bool list) const {
    if (list) {
      json arr = json::array();
      for (const auto& s : verification_suites()) {
        o.lines.push_back(s.name + "  " + s.description);
        arr.push_back({{"name", s.name}, {"description", s.description}});
      }
      o.doc["suites"] = std::move(arr);
      return true;
    }
    const auto results = run_verification(suite, radius);
    json arr = json::array();
    std::size_t failed = 0;
    for (const auto& r : results) {
      if (!r.passed) ++failed;
      o.lines.push_back(std::string(r.passed ? "PASS" : "FAIL") + "  " + r.suite + " / " + r.name +
                        "  " + r.detail);
      arr.push_back(
          {{"suite", r.suite}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    }
    o.lines.push_back(std::to_string(results.size() - failed) + "/" +
                      std::to_string(results.size()) + " checks passed");
    o.doc["checks"] = std::move(arr);
    o.doc["passed"] = failed == 0;
    return failed == 0;
  }

  void render_cmd(Output& o, const std::string& center, int radius, const std::string& out_path,
                  const std::string& path, const std::string& labels, std::ostream& out) const {
    RenderSpec spec;
    spec.center = chord(center);
    spec.radius = radius;
    spec.labels = parse_label_mode(labels);
    if (!path.empty()) spec.path = parse_plr(path);
    if (out_path == "-") {
      out << render_svg(spec);
      return;
    }
    write_svg(spec, out_path);
    const auto n = rendered_triangles(spec.center, radius).size();
    o.field("wrote", out_path);
    o.field("triangles", std::to_string(n), n);
  }

 private:
  std::optional<Int> comma_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            std::optional<Int> default_comma) {
  CLI::App app{"Tonnetz chords as affine permutations", "tonnetz"};
  app.require_subcommand(1);
  Output o;
  app.add_flag("--json", o.json_mode, "machine-readable output");

  std::string a1, a2, tone, kind, out_path, plr, labels = "notes", suite = "all";
  int count = 0, radius = 2;
  bool list = false;
  std::function<int()> action;
  Commands cmd(default_comma);

  auto sub = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->add_flag("--json", o.json_mode, "machine-readable output");
    return s;
  };

  auto* reduce_s = sub("reduce", "canonical reduced word, window and length");
  reduce_s->add_option("element", a1)->required();
  reduce_s->callback([&] { action = [&] { return cmd.reduce_cmd(o, a1), 0; }; });

  auto* mult_s = sub("mult", "product of two elements");
  mult_s->add_option("x", a1)->required();
  mult_s->add_option("y", a2)->required();
  mult_s->callback([&] { action = [&] { return cmd.mult_cmd(o, a1, a2), 0; }; });

  auto* classify_s = sub("classify", "element type, order and distances");
  classify_s->add_option("element", a1)->required();
  classify_s->callback([&] { action = [&] { return cmd.classify_cmd(o, a1), 0; }; });

  auto* chord_s = sub("chord", "chord of an element's triangle");
  chord_s->add_option("element", a1)->required();
  chord_s->callback([&] { action = [&] { return cmd.chord_cmd(o, a1), 0; }; });

  auto* locate_s = sub("locate", "window and triangle of a chord");
  locate_s->add_option("chord", a1)->required();
  locate_s->callback([&] { action = [&] { return cmd.locate_cmd(o, a1), 0; }; });

  auto* path_s = sub("path", "shortest P/L/R word between two chords");
  path_s->add_option("from", a1)->required();
  path_s->add_option("to", a2)->required();
  path_s->callback([&] { action = [&] { return cmd.path_cmd(o, a1, a2), 0; }; });

  auto* hex_s = sub("hexagon", "six chords sharing a common tone");
  hex_s->add_option("chord", a1)->required();
  hex_s->add_option("--tone", tone, "common tone (a note of the chord)");
  hex_s->callback([&] { action = [&] { return cmd.hexagon_cmd(o, a1, tone), 0; }; });

  auto* stripe_s = sub("stripe", "chords along a lattice stripe");
  stripe_s->add_option("chord", a1)->required();
  stripe_s->add_option("--kind", kind)->required()->check(
      CLI::IsMember({"fifths", "hexatonic", "octatonic"}));
  stripe_s->add_option("--count", count)->required()->check(CLI::PositiveNumber);
  stripe_s->callback([&] { action = [&] { return cmd.stripe_cmd(o, a1, kind, count), 0; }; });

  auto* analyze_s = sub("analyze", "step-by-step analysis of a chord progression");
  analyze_s->add_option("progression", a1, "comma-separated chords")->required();
  analyze_s->callback([&] { action = [&] { return cmd.analyze_cmd(o, a1), 0; }; });

  auto* riemann_s = sub("riemann", "Schritt/Wechsel and point-reflection groups");
  riemann_s->require_subcommand(1);
  auto* rmult = riemann_s->add_subcommand("mult", "product of two Q^u Z^v [W] elements");
  rmult->add_option("x", a1)->required();
  rmult->add_option("y", a2)->required();
  rmult->callback([&] { action = [&] { return cmd.riemann_mult(o, a1, a2), 0; }; });
  auto* rquot = riemann_s->add_subcommand("quotient", "image of (a,b,flip) in P/K");
  rquot->add_option("element", a1)->required();
  rquot->callback([&] { action = [&] { return cmd.riemann_quotient(o, a1), 0; }; });
  auto* rcomma = riemann_s->add_subcommand("comma", "membership of (a,b,flip) in K");
  rcomma->add_option("element", a1)->required();
  rcomma->callback([&] { action = [&] { return cmd.riemann_comma(o, a1), 0; }; });
  for (auto* s : {rmult, rquot, rcomma}) s->add_flag("--json", o.json_mode);

  auto* verify_s = sub("verify", "run invariant suites");
  verify_s->add_option("--suite", suite, "suite name or 'all'");
  verify_s->add_option("--radius", radius)->check(CLI::NonNegativeNumber);
  verify_s->add_flag("--list", list, "list suites");
  verify_s->callback(
      [&] { action = [&] { return cmd.verify_cmd(o, suite, radius, list) ? 0 : 1; }; });

  auto* render_s = sub("render", "write an SVG Tonnetz diagram");
  render_s->add_option("--center", a1)->required();
  render_s->add_option("--radius", radius)->check(CLI::NonNegativeNumber);
  render_s->add_option("--out", out_path, "file name, or - for stdout")->required();
  render_s->add_option("--path", plr, "P/L/R word drawn from the center");
  render_s->add_option("--labels", labels)->check(CLI::IsMember({"notes", "windows", "chords"}));
  render_s->callback([&] {
    action = [&] { return cmd.render_cmd(o, a1, radius, out_path, plr, labels, out), 0; };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    const int code = action();
    o.flush(out);
    return code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace tonnetz
