#pragma once

// Deterministic SVG drawings of a patch of the Tonnetz. All layout is done in
// integer hundredths of a pixel; the same spec always yields the same bytes.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tonnetz/lattice.hpp"
#include "tonnetz/progressions.hpp"

namespace tonnetz {

enum class LabelMode { Notes, Windows, Chords };
enum class HighlightStyle { Center, Path, Accent };

struct RenderSpec {
  Triangle center = kReferenceTriangle;
  int radius = 2;  // lattice rings around the center triangle
  std::vector<std::pair<Triangle, HighlightStyle>> highlights;
  std::optional<PlrWord> path;  // drawn from the center triangle
  LabelMode labels = LabelMode::Notes;
};

LabelMode parse_label_mode(std::string_view name);

// Triangles drawn for the spec: every triangle whose corners all lie within
// `radius` lattice steps of a corner of the center triangle.
std::vector<Triangle> rendered_triangles(const Triangle& center, int radius);

// Throws std::invalid_argument for a negative radius.
std::string render_svg(const RenderSpec& spec);

// Throws std::runtime_error if the file cannot be written.
void write_svg(const RenderSpec& spec, const std::string& path);

}  // namespace tonnetz
