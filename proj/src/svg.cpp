#include "tonnetz/svg.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "tonnetz/pitch.hpp"

namespace tonnetz {

namespace {

// Hundredths of a pixel. An edge is 60px; a row is 60 * sqrt(3)/2 = 51.96px.
constexpr Int kColumn = 3000;
constexpr Int kRow = 5196;
constexpr Int kMargin = 3000;

struct Point {
  Int x = 0;
  Int y = 0;
};

Point position(VertexPoint v) { return {(2 * v.p + v.q) * kColumn, -v.q * kRow}; }

Point centroid(const Triangle& t) {
  const ScaledCentroid c = scaled_centroid(t);
  return {c.x3 * kColumn / 3, -c.y3 * (kRow / 3)};
}

std::string fixed2(Int hundredths) {
  std::string out = hundredths < 0 ? "-" : "";
  const Int a = std::llabs(hundredths);
  const Int frac = a % 100;
  out += std::to_string(a / 100) + "." + (frac < 10 ? "0" : "") + std::to_string(frac);
  return out;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

Int hex_distance(VertexPoint a, VertexPoint b) {
  const Int dp = a.p - b.p, dq = a.q - b.q;
  return (std::llabs(dp) + std::llabs(dq) + std::llabs(dp + dq)) / 2;
}

const char* fill_for(const Triangle& t, const std::map<Triangle, HighlightStyle>& marks) {
  if (auto it = marks.find(t); it != marks.end()) {
    switch (it->second) {
      case HighlightStyle::Center: return "#f4c542";
      case HighlightStyle::Path: return "#9fd3a8";
      case HighlightStyle::Accent: return "#e58c8a";
    }
  }
  return t.orientation == Orientation::Up ? "#dde6f2" : "#f2f2f2";
}

std::string window_label(const AffinePermutation& f) {
  return std::to_string(f.a()) + "," + std::to_string(f.b()) + "," + std::to_string(f.c());
}

}  // namespace

LabelMode parse_label_mode(std::string_view name) {
  if (name == "notes") return LabelMode::Notes;
  if (name == "windows") return LabelMode::Windows;
  if (name == "chords") return LabelMode::Chords;
  throw std::invalid_argument("unknown label mode '" + std::string(name) + "'");
}

std::vector<Triangle> rendered_triangles(const Triangle& center, int radius) {
  if (radius < 0) throw std::invalid_argument("radius must be non-negative");
  const auto corners = vertices(center);
  auto near = [&](VertexPoint v) {
    for (const VertexPoint& c : corners)
      if (hex_distance(v, c) <= radius) return true;
    return false;
  };
  std::vector<Triangle> out;
  const Int r = radius + 2;
  for (Int q = center.root.q - r; q <= center.root.q + r; ++q)
    for (Int p = center.root.p - r; p <= center.root.p + r; ++p)
      for (Orientation o : {Orientation::Up, Orientation::Down}) {
        const Triangle t{{p, q}, o};
        const auto vs = vertices(t);
        if (std::all_of(vs.begin(), vs.end(), near)) out.push_back(t);
      }
  // Drawing order: top row first, then left to right.
  std::sort(out.begin(), out.end(), [](const Triangle& a, const Triangle& b) {
    const Point pa = centroid(a), pb = centroid(b);
    return pa.y != pb.y ? pa.y < pb.y : pa.x < pb.x;
  });
  return out;
}

std::string render_svg(const RenderSpec& spec) {
  const std::vector<Triangle> tris = rendered_triangles(spec.center, spec.radius);

  std::map<Triangle, HighlightStyle> marks;
  std::vector<Triangle> walk{spec.center};
  if (spec.path) {
    for (auto it = spec.path->rbegin(); it != spec.path->rend(); ++it)
      walk.push_back(flip(walk.back(), edge_of(*it)));
    for (std::size_t i = 1; i < walk.size(); ++i) marks[walk[i]] = HighlightStyle::Path;
  }
  for (const auto& [t, style] : spec.highlights) marks[t] = style;
  marks[spec.center] = HighlightStyle::Center;

  std::set<VertexPoint> points;
  for (const Triangle& t : tris)
    for (const VertexPoint& v : vertices(t)) points.insert(v);
  for (const Triangle& t : walk)
    for (const VertexPoint& v : vertices(t)) points.insert(v);

  Int min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  bool first = true;
  for (const VertexPoint& v : points) {
    const Point p = position(v);
    if (first) {
      min_x = max_x = p.x;
      min_y = max_y = p.y;
      first = false;
    }
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  const Int width = max_x - min_x + 2 * kMargin, height = max_y - min_y + 2 * kMargin;
  auto X = [&](Int x) { return fixed2(x - min_x + kMargin); };
  auto Y = [&](Int y) { return fixed2(y - min_y + kMargin); };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fixed2(width)
      << "\" height=\"" << fixed2(height) << "\" viewBox=\"0 0 " << fixed2(width) << " "
      << fixed2(height) << "\">\n"
      << "<title>Tonnetz around " << escape(to_string(name_triangle(spec.center)))
      << "</title>\n"
      << "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" "
         "markerWidth=\"6\" markerHeight=\"6\" orient=\"auto\">"
         "<path d=\"M0,0 L10,5 L0,10 z\" fill=\"#2b6a3a\"/></marker></defs>\n";

  svg << "<g id=\"triangles\" stroke=\"#555555\" stroke-width=\"1.00\">\n";
  for (const Triangle& t : tris) {
    svg << "<polygon points=\"";
    const auto vs = vertices(t);
    for (std::size_t i = 0; i < vs.size(); ++i) {
      const Point p = position(vs[i]);
      svg << (i ? " " : "") << X(p.x) << "," << Y(p.y);
    }
    svg << "\" fill=\"" << fill_for(t, marks) << "\" data-triangle=\"" << to_string(t)
        << "\"/>\n";
  }
  svg << "</g>\n";

  if (walk.size() > 1) {
    svg << "<g id=\"path\" fill=\"none\" stroke=\"#2b6a3a\" stroke-width=\"2.50\">\n";
    for (std::size_t i = 1; i < walk.size(); ++i) {
      const Point a = centroid(walk[i - 1]), b = centroid(walk[i]);
      svg << "<line x1=\"" << X(a.x) << "\" y1=\"" << Y(a.y) << "\" x2=\"" << X(b.x)
          << "\" y2=\"" << Y(b.y) << "\" marker-end=\"url(#arrow)\"/>\n";
    }
    svg << "</g>\n";
  }

  svg << "<g id=\"labels\" font-family=\"sans-serif\" text-anchor=\"middle\" "
         "dominant-baseline=\"middle\" fill=\"#111111\">\n";
  switch (spec.labels) {
    case LabelMode::Notes: {
      // Only corners of drawn triangles carry labels.
      std::set<VertexPoint> corners;
      for (const Triangle& t : tris)
        for (const VertexPoint& v : vertices(t)) corners.insert(v);
      for (const VertexPoint& v : corners) {
        const Point p = position(v);
        svg << "<text x=\"" << X(p.x) << "\" y=\"" << Y(p.y) << "\" font-size=\"14.00\">"
            << escape(to_string(spell_vertex(v))) << "</text>\n";
      }
      break;
    }
    case LabelMode::Windows:
    case LabelMode::Chords:
      for (const Triangle& t : tris) {
        const Point p = centroid(t);
        const std::string text = spec.labels == LabelMode::Windows
                                     ? window_label(perm_of_triangle(t))
                                     : to_string(name_triangle(t));
        svg << "<text x=\"" << X(p.x) << "\" y=\"" << Y(p.y) << "\" font-size=\"10.00\">"
            << escape(text) << "</text>\n";
      }
      break;
  }
  svg << "</g>\n</svg>\n";
  return svg.str();
}

void write_svg(const RenderSpec& spec, const std::string& path) {
  const std::string doc = render_svg(spec);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << doc;
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace tonnetz
