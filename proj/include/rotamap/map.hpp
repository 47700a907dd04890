#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "rotamap/error.hpp"
#include "rotamap/perm.hpp"

namespace rotamap {

/// A combinatorial map: a pair (P, Q) of equal-degree permutations on the
/// corner set 1..m. P is the vertex rotation, Q the face rotation. The two
/// edge rotations pi = Q^-1*P and rho = P*Q^-1 are cached at construction;
/// values are immutable afterwards.
class CombMap {
public:
  CombMap(Perm vertex_rotation, Perm face_rotation)
      : P_(std::move(vertex_rotation)), Q_(std::move(face_rotation)) {
    if (P_.degree() != Q_.degree())
      fail(errc::degree_mismatch, "vertex rotation has degree " + std::to_string(P_.degree()) +
                                      ", face rotation degree " + std::to_string(Q_.degree()));
    const Perm qinv = Q_.inverse();
    pi_ = qinv * P_;
    rho_ = P_ * qinv;
  }

  /// Normalized map determined by P alone: pi is fixed to (1 2)(3 4)... and
  /// Q = P*pi. Requires even degree.
  static CombMap from_vertex_rotation(Perm vertex_rotation) {
    if (vertex_rotation.degree() % 2 != 0)
      fail(errc::odd_degree, "normalized maps need even degree, got " +
                                 std::to_string(vertex_rotation.degree()));
    Perm q = vertex_rotation * standard_involution(vertex_rotation.degree());
    return CombMap(std::move(vertex_rotation), std::move(q));
  }

  std::size_t degree() const noexcept { return P_.degree(); }
  const Perm& vertex_rotation() const noexcept { return P_; }
  const Perm& face_rotation() const noexcept { return Q_; }
  const Perm& inner_edge_rotation() const noexcept { return pi_; }
  const Perm& edge_rotation() const noexcept { return rho_; }

  friend bool operator==(const CombMap& a, const CombMap& b) {
    return a.P_ == b.P_ && a.Q_ == b.Q_;
  }

private:
  Perm P_, Q_, pi_, rho_;
};

/// Graphical maps are exactly those whose edge rotation pairs corners up;
/// anything else is a partial map (a hypergraph).
inline bool is_graphical(const CombMap& map) {
  return map.edge_rotation().is_fpf_involution();
}

inline bool is_normalized(const CombMap& map) {
  if (map.degree() % 2 != 0) return false;
  return map.inner_edge_rotation() == standard_involution(map.degree());
}

enum class EdgeKind { link, loop };

enum class EdgeDegeneracy { regular, isolated_edge, isolated_loop, hanging_edge, hanging_loop };

inline const char* to_string(EdgeKind k) { return k == EdgeKind::loop ? "loop" : "link"; }

inline const char* to_string(EdgeDegeneracy d) {
  switch (d) {
    case EdgeDegeneracy::regular:       return "regular";
    case EdgeDegeneracy::isolated_edge: return "isolated-edge";
    case EdgeDegeneracy::isolated_loop: return "isolated-loop";
    case EdgeDegeneracy::hanging_edge:  return "hanging-edge";
    case EdgeDegeneracy::hanging_loop:  return "hanging-loop";
  }
  return "?";
}

/// The quartet <a,b,c,d> of an edge: (a,c) is a pi-orbit, (b,d) a rho-orbit,
/// b = a^(P^-1) and d = c^(P^-1), with a the smaller corner of its pi-orbit.
struct MapEdge {
  Corner a, b, c, d;
  std::vector<Corner> vertex1;  // P-orbit containing a and b
  std::vector<Corner> vertex2;  // P-orbit containing c and d
  EdgeKind kind;
  EdgeDegeneracy degeneracy;
};

namespace detail {

// Quartet coincidences name the degenerate shapes: a==b / c==d mark a
// degree-1 endpoint, b==c / d==a mark loop ends adjacent in the rotation.
inline EdgeDegeneracy classify_degeneracy(Corner a, Corner b, Corner c, Corner d) {
  const bool end1 = (a == b), end2 = (c == d);
  const bool adj1 = (b == c), adj2 = (d == a);
  if (end1 && end2) return EdgeDegeneracy::isolated_edge;
  if (end1 || end2) return EdgeDegeneracy::hanging_edge;
  if (adj1 && adj2) return EdgeDegeneracy::isolated_loop;
  if (adj1 || adj2) return EdgeDegeneracy::hanging_loop;
  return EdgeDegeneracy::regular;
}

inline std::string first_non_pair_orbit(const Perm& rho) {
  for (const auto& orbit : orbits_and_passport(rho).orbits) {
    if (orbit.size() == 2) continue;
    std::string s = "(";
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      if (k) s += ' ';
      s += std::to_string(orbit[k]);
    }
    return s + ")";
  }
  return "(?)";
}

}  // namespace detail

/// One MapEdge per pi-orbit, sorted by the smaller corner a.
inline std::vector<MapEdge> edges(const CombMap& map) {
  if (!is_graphical(map))
    fail(errc::not_graphical,
         "edge rotation has a non-pair orbit " + detail::first_non_pair_orbit(map.edge_rotation()));
  const Perm& pi = map.inner_edge_rotation();
  const Perm pinv = map.vertex_rotation().inverse();

  const OrbitSet vertex_orbits = orbits_and_passport(map.vertex_rotation());
  std::vector<std::size_t> vertex_of(map.degree());
  for (std::size_t v = 0; v < vertex_orbits.orbits.size(); ++v)
    for (Corner x : vertex_orbits.orbits[v]) vertex_of[x - 1] = v;

  std::vector<MapEdge> out;
  for (Corner a = 1; a <= map.degree(); ++a) {
    const Corner c = pi.apply(a);
    if (c < a) continue;
    MapEdge e;
    e.a = a;
    e.b = pinv.apply(a);
    e.c = c;
    e.d = pinv.apply(c);
    e.vertex1 = vertex_orbits.orbits[vertex_of[a - 1]];
    e.vertex2 = vertex_orbits.orbits[vertex_of[c - 1]];
    e.kind = vertex_of[a - 1] == vertex_of[c - 1] ? EdgeKind::loop : EdgeKind::link;
    e.degeneracy = detail::classify_degeneracy(e.a, e.b, e.c, e.d);
    out.push_back(std::move(e));
  }
  return out;
}

/// Orbits of the edge rotation in canonical order; for graphical maps all
/// have length 2, for partial maps they are the hyperedges.
inline std::vector<std::vector<Corner>> hyperedges(const CombMap& map) {
  return orbits_and_passport(map.edge_rotation()).orbits;
}

/// Partition of 1..m into connected components (closure under P and rho, and
/// hence under Q and pi as well), ordered by smallest corner.
inline std::vector<std::vector<Corner>> components(const CombMap& map) {
  const std::size_t m = map.degree();
  std::vector<Corner> parent(m + 1);
  std::iota(parent.begin(), parent.end(), Corner{0});
  const auto find = [&](Corner x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  const auto unite = [&](Corner a, Corner b) { parent[find(a)] = find(b); };
  for (Corner x = 1; x <= m; ++x) {
    unite(x, map.vertex_rotation().apply(x));
    unite(x, map.edge_rotation().apply(x));
  }
  std::vector<std::vector<Corner>> groups;
  std::vector<std::size_t> index_of(m + 1, SIZE_MAX);
  for (Corner x = 1; x <= m; ++x) {
    const Corner root = find(x);
    if (index_of[root] == SIZE_MAX) {
      index_of[root] = groups.size();
      groups.emplace_back();
    }
    groups[index_of[root]].push_back(x);
  }
  return groups;
}

struct ComponentCensus {
  std::vector<Corner> corners;
  long chi = 0;
  long genus = 0;
};

/// Orbit counts and the Euler figures: chi = z(P) + z(rho) + z(Q) - m, and
/// chi = 2c - 2*genus over the connected components.
struct MapCensus {
  std::size_t vertices = 0;    // z(P)
  std::size_t edges = 0;       // z(rho)
  std::size_t faces = 0;       // z(Q)
  std::size_t component_count = 0;
  long chi = 0;
  long genus = 0;
  std::vector<ComponentCensus> per_component;
};

inline MapCensus census(const CombMap& map) {
  const std::size_t m = map.degree();
  MapCensus out;
  const OrbitSet ov = orbits_and_passport(map.vertex_rotation());
  const OrbitSet oe = orbits_and_passport(map.edge_rotation());
  const OrbitSet of = orbits_and_passport(map.face_rotation());
  out.vertices = ov.orbits.size();
  out.edges = oe.orbits.size();
  out.faces = of.orbits.size();
  out.chi = static_cast<long>(out.vertices + out.edges + out.faces) - static_cast<long>(m);

  const auto comps = components(map);
  out.component_count = comps.size();
  std::vector<std::size_t> comp_of(m + 1, 0);
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (Corner x : comps[i]) comp_of[x] = i;

  std::vector<long> orbit_counts(comps.size(), 0);
  for (const OrbitSet* os : {&ov, &oe, &of})
    for (const auto& orbit : os->orbits) ++orbit_counts[comp_of[orbit.front()]];

  for (std::size_t i = 0; i < comps.size(); ++i) {
    ComponentCensus cc;
    cc.corners = comps[i];
    cc.chi = orbit_counts[i] - static_cast<long>(comps[i].size());
    if ((2 - cc.chi) % 2 != 0)
      throw std::logic_error("component Euler characteristic has wrong parity");
    cc.genus = (2 - cc.chi) / 2;
    out.per_component.push_back(std::move(cc));
  }
  out.genus = (2 * static_cast<long>(out.component_count) - out.chi) / 2;
  return out;
}

/// The map with vertex and face rotations exchanged. An involution; its edge
/// rotation is rho^-1, so graphical maps stay graphical.
inline CombMap dual(const CombMap& map) {
  return CombMap(map.face_rotation(), map.vertex_rotation());
}

struct NormalizeResult {
  CombMap map;
  Perm relabeling;
};

/// Relabels corners so that pi becomes the standard involution: pi-orbits
/// enumerated by smallest member, the j-th orbit {u,v} (u<v) sent to
/// {2j-1, 2j}. Deterministic, and the identity on already-normalized maps.
inline NormalizeResult normalize(const CombMap& map) {
  if (!is_graphical(map))
    fail(errc::not_graphical, "only graphical maps normalize; offending orbit " +
                                  detail::first_non_pair_orbit(map.edge_rotation()));
  const Perm& pi = map.inner_edge_rotation();
  std::vector<Corner> img(map.degree());
  Corner next = 1;
  for (Corner u = 1; u <= map.degree(); ++u) {
    const Corner v = pi.apply(u);
    if (v < u) continue;
    img[u - 1] = next++;
    img[v - 1] = next++;
  }
  Perm t = Perm::from_images(std::move(img));
  return NormalizeResult{
      CombMap(map.vertex_rotation().conjugated_by(t), map.face_rotation().conjugated_by(t)),
      std::move(t)};
}

/// Seeded random normalized map with k edges (degree 2k).
inline CombMap random_map(std::size_t k, std::uint64_t seed) {
  return CombMap::from_vertex_rotation(random_perm(2 * k, seed));
}

}  // namespace rotamap
