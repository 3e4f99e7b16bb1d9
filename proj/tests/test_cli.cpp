#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "tonnetz/cli.hpp"
#include "tonnetz/svg.hpp"

using namespace tonnetz;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, std::optional<Int> comma = std::nullopt) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err, comma);
  return {code, out.str(), err.str()};
}

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("reduce") {
  const Run r = run({"reduce", "[-3,2,1]"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("word: s2 s3 s2\n", 0) == 0);
  CHECK(r.out.find("length: 3") != std::string::npos);
  CHECK(run({"reduce", "[\xE2\x88\x92" "3,2,1]"}).out == r.out);
  CHECK(run({"reduce", "s3 s2 s3"}).out == r.out);
}

TEST_CASE("element syntax") {
  CHECK(run({"chord", "s2"}).out.rfind("chord: Am\n", 0) == 0);
  CHECK(run({"chord", "e"}).out.rfind("chord: C\n", 0) == 0);
  CHECK(run({"mult", "s1", "s1"}).out.rfind("window: [-1,0,1]\n", 0) == 0);
  CHECK(run({"mult", "C#m", "s2"}).code == 0);
  CHECK(run({"locate", "C#m"}).out.find("triangle: D(-1,2)") != std::string::npos);
}

TEST_CASE("path") {
  const Run r = run({"path", "C", "G"});
  CHECK(r.code == 0);
  CHECK(r.out.find("length: 2") != std::string::npos);
  CHECK(r.out.find("path: RL") != std::string::npos);
}

TEST_CASE("json output is one object with sorted keys") {
  const Run r = run({"--json", "classify", "s2s3s2"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.is_object());
  CHECK(j["length"] == 3);
  CHECK(j["corollary_distance"] == 2);
  CHECK(j["gallery_distance"] == 3);
  CHECK(j["type"] == "Reflection");
  CHECK(r.out == run({"classify", "--json", "s2s3s2"}).out);
  const auto h = nlohmann::json::parse(run({"hexagon", "C", "--json"}).out);
  CHECK(h["chords"].size() == 6);
  CHECK(h["common_tone"] == "E");
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"reduce"}).code == 2);
  CHECK(run({"stripe", "C", "--kind", "diagonal", "--count", "2"}).code == 2);
  CHECK(run({"stripe", "C", "--kind", "fifths", "--count", "0"}).code == 2);
  const Run bad = run({"reduce", "[1,1,1]"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("error:") == 0);
  CHECK(run({"chord", "H"}).code == 1);
  CHECK(run({"hexagon", "C", "--tone", "D"}).code == 1);
  CHECK(run({"verify", "--suite", "nonsense"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("default comma override") {
  CHECK(run({"locate", "E"}, Int{0}).out.find("triangle: U(4,0)") != std::string::npos);
  CHECK(run({"locate", "E"}).out.find("triangle: U(0,1)") != std::string::npos);
}

TEST_CASE("riemann subcommands") {
  CHECK(run({"riemann", "mult", "W", "Q^1 Z^0"}).out.rfind("product: Q^-1 Z^0 W\n", 0) == 0);
  CHECK(run({"riemann", "quotient", "(1,-1,0)"}).out.find("order: 12") != std::string::npos);
  CHECK(run({"riemann", "comma", "(3,4,0)"}).out.rfind("in_comma_subgroup: yes\n", 0) == 0);
  CHECK(run({"riemann", "comma", "(3,4"}).code == 1);
}

TEST_CASE("verify") {
  const Run r = run({"verify", "--suite", "coxeter", "--radius", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  const Run list = run({"verify", "--list"});
  CHECK(list.out.find("progressions") != std::string::npos);
}

TEST_CASE("render") {
  const Run r = run({"render", "--center", "C", "--radius", "2", "--out", "-"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("<?xml", 0) == 0);
  for (const char* n : {"Ab", "F", "Eb", "C", "A", "Bb", "G", "E", "C#", "D", "B", "G#"})
    CHECK(r.out.find(std::string(">") + n + "</text>") != std::string::npos);
  const Run w = run({"render", "--center", "C", "--radius", "2", "--labels", "windows", "--out", "-"});
  CHECK(w.out.find(">-3,1,2</text>") != std::string::npos);
  const Run zero = run({"render", "--center", "C", "--radius", "0", "--out", "-"});
  CHECK(count(zero.out, "<polygon") == 1);
  const Run p = run({"render", "--center", "C", "--radius", "2", "--path", "RL", "--out", "-"});
  CHECK(count(p.out, "<line") == 2);
  CHECK(run({"render", "--center", "C", "--out", "/nonexistent-dir/x.svg"}).code == 1);
  CHECK(run({"render", "--center", "C", "--labels", "colours", "--out", "-"}).code == 2);
}

TEST_CASE("render is deterministic") {
  RenderSpec spec;
  spec.center = Triangle{{-1, 2}, Orientation::Down};
  spec.radius = 3;
  spec.path = std::vector<PlrMove>{PlrMove::L, PlrMove::R};
  spec.highlights = {{Triangle{{0, 0}, Orientation::Up}, HighlightStyle::Accent}};
  CHECK(render_svg(spec) == render_svg(spec));
  CHECK(rendered_triangles(kReferenceTriangle, 0).size() == 1);
  CHECK_THROWS_AS(rendered_triangles(kReferenceTriangle, -1), std::invalid_argument);
}
