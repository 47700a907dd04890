#pragma once

#include <array>
#include <cmath>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "rotamap/error.hpp"
#include "rotamap/knot.hpp"
#include "rotamap/map.hpp"
#include "rotamap/perm.hpp"

namespace rotamap {

struct Vec2 {
  double x = 0, y = 0;
  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
  friend bool operator==(Vec2, Vec2) = default;
};

inline double distance(Vec2 a, Vec2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

struct LayoutConfig {
  double canvas_width = 800;
  double canvas_height = 600;
  double vertex_radius = 4;
  double stub_length = 30;
  double circle_fraction = 1.0 / 3.0;  // placement-circle radius / min canvas side
  double start_angle_degrees = -90;    // first vertex at the top
  double label_offset = 10;
  int precision = 2;
};

namespace detail {

inline constexpr double kDegToRad = 3.14159265358979323846 / 180.0;

// Screen coordinates grow y-downward, so increasing angles turn clockwise
// on screen; "clockwise" everywhere below means exactly that.
inline Vec2 direction(double angle_degrees) {
  return {std::cos(angle_degrees * kDegToRad), std::sin(angle_degrees * kDegToRad)};
}

}  // namespace detail

struct DrawnVertex {
  std::vector<Corner> orbit;  // cyclic corner order, smallest corner first
  Vec2 position;
};

struct Stub {
  std::size_t vertex = 0;
  double angle_degrees = 0;
  Vec2 tip;
};

struct EdgePath {
  Corner a = 0, c = 0;  // the pi-pair this curve unites
  std::size_t vertex_a = 0, vertex_c = 0;
  bool loop = false;
  std::array<Vec2, 4> control;  // cubic: end, inner, inner, end
};

struct CornerLabel {
  Vec2 anchor;
};

/// Geometry ready for SVG emission. Pure value; move_vertex returns an
/// updated copy and leaves everything non-incident bit-identical.
struct Drawing {
  std::vector<DrawnVertex> vertices;
  std::vector<Stub> stubs;          // index = corner - 1
  std::vector<CornerLabel> labels;  // index = corner - 1
  std::vector<EdgePath> paths;      // one per pi-orbit, sorted by a
  LayoutConfig config;
  std::string p_text, q_text;

  std::size_t corner_count() const noexcept { return stubs.size(); }
};

namespace detail {

inline EdgePath make_path(const Drawing& d, Corner a, Corner c, std::size_t va, std::size_t vc,
                          bool loop) {
  const Stub& sa = d.stubs[a - 1];
  const Stub& sc = d.stubs[c - 1];
  const double reach = loop ? 2.5 * d.config.stub_length
                            : std::max(40.0, 0.3 * distance(sa.tip, sc.tip));
  EdgePath p;
  p.a = a;
  p.c = c;
  p.vertex_a = va;
  p.vertex_c = vc;
  p.loop = loop;
  p.control = {sa.tip, sa.tip + reach * direction(sa.angle_degrees),
               sc.tip + reach * direction(sc.angle_degrees), sc.tip};
  return p;
}

}  // namespace detail

/// Places one point per P-orbit on a circle, fans the orbit's corners out as
/// clockwise stubs, and unites each pi-pair of stub tips with a cubic curve.
inline Drawing layout_map(const CombMap& map, const LayoutConfig& config) {
  if (!is_graphical(map))
    fail(errc::not_graphical, "only graphical maps are drawn; offending orbit " +
                                  detail::first_non_pair_orbit(map.edge_rotation()));
  Drawing d;
  d.config = config;
  d.p_text = format_cycles(map.vertex_rotation());
  d.q_text = format_cycles(map.face_rotation());

  const OrbitSet vertex_orbits = orbits_and_passport(map.vertex_rotation());
  const std::size_t n = vertex_orbits.orbits.size();
  const Vec2 center{config.canvas_width / 2, config.canvas_height / 2};
  const double ring = config.circle_fraction * std::min(config.canvas_width, config.canvas_height);

  d.stubs.resize(map.degree());
  d.labels.resize(map.degree());
  std::vector<std::size_t> vertex_of(map.degree());
  for (std::size_t v = 0; v < n; ++v) {
    const double vertex_angle = config.start_angle_degrees + (n ? 360.0 * v / n : 0.0);
    DrawnVertex dv{vertex_orbits.orbits[v], center + ring * detail::direction(vertex_angle)};
    const std::size_t degree = dv.orbit.size();
    for (std::size_t k = 0; k < degree; ++k) {
      const Corner x = dv.orbit[k];
      const double angle = config.start_angle_degrees + 360.0 * k / degree;
      d.stubs[x - 1] = Stub{v, angle, dv.position + config.stub_length * detail::direction(angle)};
      // the corner region sits clockwise-after its stub
      const double label_angle = angle + 180.0 / degree;
      d.labels[x - 1] = CornerLabel{dv.position + (config.stub_length + config.label_offset) *
                                                      detail::direction(label_angle)};
      vertex_of[x - 1] = v;
    }
    d.vertices.push_back(std::move(dv));
  }

  const Perm& pi = map.inner_edge_rotation();
  for (Corner a = 1; a <= map.degree(); ++a) {
    const Corner c = pi.apply(a);
    if (c < a) continue;
    const std::size_t va = vertex_of[a - 1], vc = vertex_of[c - 1];
    d.paths.push_back(detail::make_path(d, a, c, va, vc, va == vc));
  }
  return d;
}

/// Translates one vertex (with its stubs and labels) and reroutes only the
/// incident curves; stub angles stay fixed, so the clockwise corner order at
/// the vertex is untouched.
inline Drawing move_vertex(const Drawing& drawing, std::size_t vertex_index, Vec2 new_position) {
  if (vertex_index >= drawing.vertices.size())
    fail(errc::no_such_vertex, "vertex index " + std::to_string(vertex_index) + " out of range (" +
                                   std::to_string(drawing.vertices.size()) + " vertices)");
  Drawing d = drawing;
  const Vec2 delta = new_position - d.vertices[vertex_index].position;
  d.vertices[vertex_index].position = new_position;
  for (Corner x = 1; x <= d.corner_count(); ++x) {
    if (d.stubs[x - 1].vertex != vertex_index) continue;
    d.stubs[x - 1].tip = d.stubs[x - 1].tip + delta;
    d.labels[x - 1].anchor = d.labels[x - 1].anchor + delta;
  }
  for (EdgePath& p : d.paths)
    if (p.vertex_a == vertex_index || p.vertex_c == vertex_index)
      p = detail::make_path(d, p.a, p.c, p.vertex_a, p.vertex_c, p.loop);
  return d;
}

namespace detail {

inline std::string fmt_number(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", precision, v);
  std::string s(buf);
  // normalize negative zero
  if (s.find_first_not_of("-0.") == std::string::npos && s[0] == '-') s.erase(0, 1);
  return s;
}

}  // namespace detail

/// Deterministic standalone SVG: curves first, then vertex dots, then corner
/// labels. With a knot, C1 labels render green and C2 labels red.
inline std::string render_svg(const Drawing& drawing, const Knot* knot,
                              const LayoutConfig& config) {
  if (knot && knot->degree() != drawing.corner_count())
    fail(errc::degree_mismatch, "knot degree " + std::to_string(knot->degree()) +
                                    " does not match drawing with " +
                                    std::to_string(drawing.corner_count()) + " corners");
  const auto num = [&](double v) { return detail::fmt_number(v, config.precision); };
  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
       num(config.canvas_width) + "\" height=\"" + num(config.canvas_height) + "\" viewBox=\"0 0 " +
       num(config.canvas_width) + " " + num(config.canvas_height) + "\">\n";
  s += "<!-- P = " + drawing.p_text + " Q = " + drawing.q_text + " -->\n";
  for (const EdgePath& p : drawing.paths) {
    s += "<path d=\"M " + num(p.control[0].x) + " " + num(p.control[0].y) + " C " +
         num(p.control[1].x) + " " + num(p.control[1].y) + ", " + num(p.control[2].x) + " " +
         num(p.control[2].y) + ", " + num(p.control[3].x) + " " + num(p.control[3].y) +
         "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  }
  for (const DrawnVertex& v : drawing.vertices) {
    s += "<circle cx=\"" + num(v.position.x) + "\" cy=\"" + num(v.position.y) + "\" r=\"" +
         num(config.vertex_radius) + "\" fill=\"black\"/>\n";
  }
  for (Corner x = 1; x <= drawing.corner_count(); ++x) {
    const char* color = !knot ? "black" : knot->in_c1(x) ? "green" : "red";
    s += "<text x=\"" + num(drawing.labels[x - 1].anchor.x) + "\" y=\"" +
         num(drawing.labels[x - 1].anchor.y) +
         "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\" "
         "dominant-baseline=\"middle\" fill=\"" +
         color + "\">" + std::to_string(x) + "</text>\n";
  }
  s += "</svg>\n";
  return s;
}

}  // namespace rotamap
