#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "rotamap/error.hpp"
#include "rotamap/map.hpp"
#include "rotamap/perm.hpp"

namespace rotamap {

/// A parsed map file. Line-oriented UTF-8:
///   # comment
///   name <string>      (optional)
///   degree <integer>   (optional)
///   P <cycles|id>
///   Q <cycles|id|normalized>
/// "Q normalized" means Q = P*pi with pi the standard involution.
struct MapDocument {
  std::optional<std::string> name;
  std::optional<std::size_t> degree;
  std::string p_text;
  std::string q_text;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace detail

inline MapDocument parse_map_file(std::string_view text) {
  MapDocument doc;
  bool have_p = false, have_q = false;
  std::size_t pos = 0;
  int line_no = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    line = detail::trim(line);
    if (line.empty() || line.front() == '#') continue;

    const std::size_t sp = line.find_first_of(" \t");
    const std::string_view key = line.substr(0, sp);
    const std::string_view value =
        sp == std::string_view::npos ? std::string_view{} : detail::trim(line.substr(sp + 1));
    const auto where = " on line " + std::to_string(line_no);

    if (key == "name") {
      if (doc.name) fail(errc::parse, "duplicate name" + where);
      if (value.empty()) fail(errc::parse, "name needs a value" + where);
      doc.name = std::string(value);
    } else if (key == "degree") {
      if (doc.degree) fail(errc::parse, "duplicate degree" + where);
      if (value.empty() || value.find_first_not_of("0123456789") != std::string_view::npos)
        fail(errc::parse, "degree needs a non-negative integer" + where);
      if (value.size() > 8) fail(errc::parse, "degree out of supported range" + where);
      doc.degree = std::stoul(std::string(value));
    } else if (key == "P") {
      if (have_p) fail(errc::parse, "duplicate P" + where);
      if (value.empty()) fail(errc::parse, "P needs a value" + where);
      doc.p_text = std::string(value);
      have_p = true;
    } else if (key == "Q") {
      if (have_q) fail(errc::parse, "duplicate Q" + where);
      if (value.empty()) fail(errc::parse, "Q needs a value" + where);
      doc.q_text = std::string(value);
      have_q = true;
    } else {
      fail(errc::parse, "unknown key \"" + std::string(key) + "\"" + where);
    }
  }
  if (!have_p) fail(errc::parse, "missing P line");
  if (!have_q) fail(errc::parse, "missing Q line");
  return doc;
}

/// Builds the map: a declared degree wins (labels must fit under it);
/// otherwise the degree is the largest label mentioned by either rotation.
inline CombMap resolve_map(const MapDocument& doc) {
  if (doc.q_text == "normalized") {
    const Perm p = parse_cycles(doc.p_text, doc.degree);
    return CombMap::from_vertex_rotation(p);
  }
  if (doc.degree)
    return CombMap(parse_cycles(doc.p_text, doc.degree), parse_cycles(doc.q_text, doc.degree));
  const Perm p = parse_cycles(doc.p_text);
  const Perm q = parse_cycles(doc.q_text);
  const std::size_t m = std::max(p.degree(), q.degree());
  return CombMap(extend_to(p, m), extend_to(q, m));
}

/// Canonical emission: name (when present), explicit degree, canonical cycle
/// text. Emitting a re-parse of the output reproduces it byte for byte.
inline std::string emit_map_file(const MapDocument& doc) {
  const CombMap map = resolve_map(doc);
  std::string out;
  if (doc.name) out += "name " + *doc.name + "\n";
  out += "degree " + std::to_string(map.degree()) + "\n";
  out += "P " + format_cycles(map.vertex_rotation()) + "\n";
  if (doc.q_text == "normalized")
    out += "Q normalized\n";
  else
    out += "Q " + format_cycles(map.face_rotation()) + "\n";
  return out;
}

}  // namespace rotamap
