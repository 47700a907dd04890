// rotamap: combinatorial maps as permutation pairs on corners.
// Subcommands: info, edges, knot, random, draw, check.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rotamap/check.hpp"
#include "rotamap/draw.hpp"
#include "rotamap/knot.hpp"
#include "rotamap/map.hpp"
#include "rotamap/mapfile.hpp"
#include "rotamap/perm.hpp"

namespace {

using namespace rotamap;

int exit_code_for(errc code) {
  switch (code) {
    case errc::parse:
    case errc::not_bijection:
    case errc::label_range:
    case errc::degree_mismatch:
    case errc::odd_degree:
      return 2;
    case errc::not_graphical:
      return 3;
    case errc::orient_length:
      return 4;
    case errc::no_such_vertex:
      return 5;
    default:
      return 1;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::parse, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(errc::parse, "cannot write " + path);
  out << content;
}

struct LoadedMap {
  MapDocument doc;
  CombMap map;
};

LoadedMap load_map(const std::string& path) {
  MapDocument doc = parse_map_file(read_file(path));
  CombMap map = resolve_map(doc);
  return LoadedMap{std::move(doc), std::move(map)};
}

template <typename T>
std::string bracketed(const std::vector<T>& values) {
  std::string s = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(values[i]);
  }
  return s + "]";
}

std::string braced(const std::vector<Corner>& values) {
  std::string s = "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(values[i]);
  }
  return s + "}";
}

std::string orbit_text(const std::vector<Corner>& orbit) {
  std::string s = "(";
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(orbit[i]);
  }
  return s + ")";
}

std::vector<bool> parse_orient_bits(const std::string& bits) {
  std::vector<bool> out;
  for (char c : bits) {
    if (c != '0' && c != '1')
      fail(errc::orient_length, std::string("orientation bits must be 0 or 1, got '") + c + "'");
    out.push_back(c == '1');
  }
  return out;
}

int cmd_info(const std::string& path, const std::string& out_format) {
  const LoadedMap loaded = load_map(path);
  const CombMap& map = loaded.map;
  const MapCensus c = census(map);
  const bool graphical = is_graphical(map);

  if (out_format == "json") {
    nlohmann::ordered_json j;
    if (loaded.doc.name) j["name"] = *loaded.doc.name;
    j["degree"] = map.degree();
    j["graphical"] = graphical;
    j["normalized"] = is_normalized(map);
    j["P"] = format_cycles(map.vertex_rotation());
    j["Q"] = format_cycles(map.face_rotation());
    j["pi"] = format_cycles(map.inner_edge_rotation());
    j["rho"] = format_cycles(map.edge_rotation());
    j["census"] = {{"vertices", c.vertices},
                   {"edges", c.edges},
                   {"faces", c.faces},
                   {"components", c.component_count},
                   {"chi", c.chi},
                   {"genus", c.genus}};
    j["passports"] = {{"P", passport(map.vertex_rotation())},
                      {"Q", passport(map.face_rotation())},
                      {"pi", passport(map.inner_edge_rotation())},
                      {"rho", passport(map.edge_rotation())}};
    if (!graphical) {
      nlohmann::ordered_json hs = nlohmann::ordered_json::array();
      for (const auto& h : hyperedges(map)) hs.push_back(h);
      j["hyperedges"] = hs;
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  if (loaded.doc.name) std::cout << "name: " << *loaded.doc.name << "\n";
  std::cout << "degree: " << map.degree() << "\n";
  std::cout << "class: " << (graphical ? "graphical map" : "partial map") << "\n";
  std::cout << "normalized: " << (is_normalized(map) ? "yes" : "no") << "\n";
  std::cout << "vertices: " << c.vertices << "\n";
  if (graphical)
    std::cout << "edges: " << c.edges << "\n";
  else
    std::cout << "hyperedges: " << bracketed(passport(map.edge_rotation())) << "\n";
  std::cout << "faces: " << c.faces << "\n";
  std::cout << "components: " << c.component_count << "\n";
  std::cout << "chi: " << c.chi << "\n";
  std::cout << "genus: " << c.genus << "\n";
  std::cout << "passport P: " << bracketed(passport(map.vertex_rotation())) << "\n";
  std::cout << "passport Q: " << bracketed(passport(map.face_rotation())) << "\n";
  std::cout << "passport pi: " << bracketed(passport(map.inner_edge_rotation())) << "\n";
  std::cout << "passport rho: " << bracketed(passport(map.edge_rotation())) << "\n";
  return 0;
}

int cmd_edges(const std::string& path) {
  const LoadedMap loaded = load_map(path);
  for (const MapEdge& e : edges(loaded.map)) {
    std::cout << "⟨" << e.a << "," << e.b << "," << e.c << "," << e.d << "⟩"
              << "  v1=" << orbit_text(e.vertex1) << "  v2=" << orbit_text(e.vertex2) << "  "
              << to_string(e.kind) << "  " << to_string(e.degeneracy) << "\n";
  }
  return 0;
}

int cmd_knot(const std::string& path, const std::optional<std::string>& orient) {
  const LoadedMap loaded = load_map(path);
  const CombMap& map = loaded.map;
  Knot knot = zigzag_knot(map);
  if (orient) knot = reorient_knot(knot, parse_orient_bits(*orient));

  const KnotAnalysis a = analyze_knot(map, knot);

  std::cout << "mu: " << format_cycles(knot.mu()) << "\n";
  std::cout << "C1: " << braced(knot.c1_set()) << "\n";
  std::cout << "C2: " << braced(knot.c2_set()) << "\n";
  std::cout << "orbits: " << knot.orbit_count() << "\n";
  std::cout << "pi1: " << format_cycles(a.pi1) << "\n";
  std::cout << "pi2: " << format_cycles(a.pi2) << "\n";
  std::cout << "gamma1: " << format_cycles(a.gamma1) << "\n";
  std::cout << "gamma2: " << format_cycles(a.gamma2) << "\n";
  std::cout << "alpha: " << format_cycles(a.alpha) << "\n";
  std::cout << "delta: " << format_cycles(a.delta) << "\n";
  std::cout << "epsilon: " << format_cycles(a.epsilon) << "\n";
  std::cout << "epsilon^2: " << format_cycles(a.epsilon_squared) << "\n";
  std::cout << "A: " << format_cycles(a.symmetric_form) << "\n";
  std::cout << "epsilon^2 == A exactly: " << (a.exact_match ? "yes" : "no") << "\n";
  if (is_normalized(map))
    std::cout << "partially normalized: " << (is_partially_normalized(map, knot) ? "yes" : "no")
              << "\n";
  else
    std::cout << "partially normalized: n/a (map not normalized)\n";

  bool all = a.passport_match;
  for (const KnotCheck& c : a.identities.checks) {
    std::cout << "check " << c.name << ": " << (c.passed ? "pass" : "FAIL " + c.witness) << "\n";
    all = all && c.passed;
  }
  std::cout << "check structuring-passport: " << (a.passport_match ? "pass" : "FAIL") << "\n";
  std::cout << "result: " << (all ? "all identities pass" : "identity failures") << "\n";
  return all ? 0 : 1;
}

int cmd_random(std::size_t k, std::uint64_t seed, const std::optional<std::string>& out_path) {
  const CombMap map = random_map(k, seed);
  MapDocument doc;
  doc.degree = map.degree();
  doc.p_text = format_cycles(map.vertex_rotation());
  doc.q_text = "normalized";
  const std::string text = emit_map_file(doc);
  if (out_path)
    write_file(*out_path, text);
  else
    std::cout << text;
  return 0;
}

struct MoveSpec {
  std::size_t vertex = 0;
  Vec2 to;
};

MoveSpec parse_move_spec(const std::string& spec) {
  MoveSpec m;
  char trailing = 0;
  const int got =
      std::sscanf(spec.c_str(), "%zu:%lf,%lf%c", &m.vertex, &m.to.x, &m.to.y, &trailing);
  if (got != 3) fail(errc::no_such_vertex, "bad --move spec \"" + spec + "\" (want V:X,Y)");
  return m;
}

int cmd_draw(const std::string& path, const std::string& out_path, bool with_knot,
             const std::optional<std::string>& orient, const std::vector<std::string>& moves,
             const LayoutConfig& config) {
  const LoadedMap loaded = load_map(path);
  const CombMap& map = loaded.map;

  Drawing drawing = layout_map(map, config);
  for (const std::string& spec : moves) {
    const MoveSpec m = parse_move_spec(spec);
    drawing = move_vertex(drawing, m.vertex, m.to);
  }
  std::optional<Knot> knot;
  if (with_knot) {
    knot = zigzag_knot(map);
    if (orient) knot = reorient_knot(*knot, parse_orient_bits(*orient));
  }
  write_file(out_path, render_svg(drawing, knot ? &*knot : nullptr, config));
  return 0;
}

int cmd_check(std::size_t trials, std::size_t max_k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::size_t failures = 0;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const std::size_t k = 1 + detail::bounded_u64(rng, max_k);
    const CombMap map = random_map(k, rng());
    const auto fails = check_all(map, rng());
    if (!fails.empty()) {
      ++failures;
      if (failures == 1) {
        std::cout << "trial " << trial << " failed: " << fails.front().check << " "
                  << fails.front().detail << "\n";
        MapDocument doc;
        doc.degree = map.degree();
        doc.p_text = format_cycles(map.vertex_rotation());
        doc.q_text = "normalized";
        std::cout << emit_map_file(doc);
      }
    }
  }
  std::cout << "trials=" << trials << " failures=" << failures << "\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"combinatorial maps as permutation pairs on corners"};
  app.require_subcommand(1);

  std::string file, out_format = "text", out_path, orient_bits;
  std::vector<std::string> moves;
  std::size_t random_k = 0, trials = 200, max_k = 25;
  std::uint64_t seed = 1;
  bool with_knot = false;
  LayoutConfig config;

  CLI::App* info = app.add_subcommand("info", "census, classification, passports");
  info->add_option("file", file, "map file")->required();
  info->add_option("--out-format", out_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* edges_cmd = app.add_subcommand("edges", "edge quartets of a graphical map");
  edges_cmd->add_option("file", file, "map file")->required();

  CLI::App* knot_cmd = app.add_subcommand("knot", "zig-zag knot report");
  knot_cmd->add_option("file", file, "map file")->required();
  CLI::Option* knot_orient =
      knot_cmd->add_option("--orient", orient_bits, "orientation bit per knot orbit");

  CLI::App* random_cmd = app.add_subcommand("random", "emit a seeded random map file");
  random_cmd->add_option("k", random_k, "edge count")->required();
  random_cmd->add_option("--seed", seed, "64-bit seed");
  CLI::Option* random_out_opt = random_cmd->add_option("--out", out_path, "output file");

  CLI::App* draw_cmd = app.add_subcommand("draw", "render a graphical map to SVG");
  draw_cmd->add_option("file", file, "map file")->required();
  draw_cmd->add_option("--out,-o", out_path, "output SVG file")->required();
  CLI::Option* knot_flag =
      draw_cmd->add_flag("--knot", with_knot, "color corner labels by the canonical knot");
  CLI::Option* draw_orient =
      draw_cmd->add_option("--orient", orient_bits, "orientation bits for --knot");
  draw_orient->needs(knot_flag);
  draw_cmd->add_option("--move", moves, "relocate a vertex, V:X,Y (repeatable)")
      ->type_size(1)
      ->allow_extra_args(false);
  draw_cmd->add_option("--width", config.canvas_width, "canvas width");
  draw_cmd->add_option("--height", config.canvas_height, "canvas height");
  draw_cmd->add_option("--vertex-radius", config.vertex_radius, "vertex dot radius");
  draw_cmd->add_option("--stub-length", config.stub_length, "edge-end stub length");
  draw_cmd->add_option("--circle-fraction", config.circle_fraction, "placement circle fraction");
  draw_cmd->add_option("--start-angle", config.start_angle_degrees, "first vertex angle");
  draw_cmd->add_option("--label-offset", config.label_offset, "corner label offset");
  draw_cmd->add_option("--precision", config.precision, "coordinate decimal places");

  CLI::App* check_cmd = app.add_subcommand("check", "run the invariant suite on random maps");
  check_cmd->add_option("--trials", trials, "number of random maps");
  check_cmd->add_option("--max-k", max_k, "largest edge count");
  check_cmd->add_option("--seed", seed, "64-bit seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*info) return cmd_info(file, out_format);
    if (*edges_cmd) return cmd_edges(file);
    if (*knot_cmd)
      return cmd_knot(file, *knot_orient ? std::optional(orient_bits) : std::nullopt);
    if (*random_cmd)
      return cmd_random(random_k, seed,
                        *random_out_opt ? std::optional(out_path) : std::nullopt);
    if (*draw_cmd)
      return cmd_draw(file, out_path, with_knot,
                      *draw_orient ? std::optional(orient_bits) : std::nullopt, moves, config);
    if (*check_cmd) return cmd_check(trials, max_k, seed);
  } catch (const rotamap::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
