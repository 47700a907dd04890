#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rotamap/knot.hpp"
#include "rotamap/map.hpp"
#include "rotamap/perm.hpp"

namespace rotamap {

struct CheckFailure {
  std::string check;
  std::string detail;
};

namespace detail {

inline void expect(std::vector<CheckFailure>& out, bool ok, const char* check,
                   const std::string& detail = "") {
  if (!ok) out.push_back(CheckFailure{check, detail});
}

}  // namespace detail

/// Structural laws every CombMap obeys, plus the graphical-only edge laws.
inline std::vector<CheckFailure> check_map_invariants(const CombMap& map) {
  std::vector<CheckFailure> fails;
  const auto ok = [&](bool b, const char* name, const std::string& d = "") {
    detail::expect(fails, b, name, d);
  };
  const Perm& P = map.vertex_rotation();
  const Perm& Q = map.face_rotation();
  const Perm& pi = map.inner_edge_rotation();
  const Perm& rho = map.edge_rotation();
  const std::size_t m = map.degree();

  ok((Q.inverse() * P * pi.inverse()).is_identity(), "constellation-identity");
  ok(rho == pi.conjugated_by(Q.inverse()), "edge-rotations-conjugate");
  ok(passport(pi) == passport(rho), "edge-rotation-passports");
  ok(pi.is_fpf_involution() == rho.is_fpf_involution(), "graphical-symmetry");
  ok(parse_cycles(format_cycles(P), m) == P, "text-round-trip-P");
  ok(parse_cycles(format_cycles(Q), m) == Q, "text-round-trip-Q");

  // permutation laws exercised on the map's own rotations
  ok((P * Q) * pi == P * (Q * pi), "compose-associative");
  ok((P * P.inverse()).is_identity() && (Q.inverse() * Q).is_identity(), "inverse-law");
  ok(passport(P.conjugated_by(Q)) == passport(P), "conjugation-passport");
  {
    std::vector<Corner> all;
    for (const auto& orbit : orbits_and_passport(P).orbits)
      all.insert(all.end(), orbit.begin(), orbit.end());
    std::sort(all.begin(), all.end());
    ok(all == Perm::identity(m).images(), "orbits-partition");
  }

  const MapCensus c = census(map);
  ok(c.chi == static_cast<long>(c.vertices + c.edges + c.faces) - static_cast<long>(m),
     "euler-count");
  ok(c.chi == 2 * static_cast<long>(c.component_count) - 2 * c.genus, "euler-genus");
  ok(c.genus >= 0, "genus-nonnegative");
  long genus_sum = 0;
  for (const auto& pc : c.per_component) {
    genus_sum += pc.genus;
    ok(pc.genus >= 0, "component-genus-nonnegative");
    ok(pc.chi == 2 - 2 * pc.genus, "component-euler");
  }
  ok(genus_sum == c.genus, "component-genus-sum");

  const CombMap d = dual(map);
  ok(dual(d) == map, "dual-involution");
  const MapCensus cd = census(d);
  ok(cd.vertices == c.faces && cd.faces == c.vertices && cd.edges == c.edges &&
         cd.component_count == c.component_count && cd.chi == c.chi && cd.genus == c.genus,
     "dual-census");
  ok(d.edge_rotation() == rho.inverse(), "dual-edge-rotation");

  if (is_graphical(map)) {
    ok(m % 2 == 0, "graphical-even-degree");
    std::vector<Corner> ac, bd;
    for (const MapEdge& e : edges(map)) {
      ok(pi.apply(e.a) == e.c && pi.apply(e.c) == e.a, "edge-pi-pair");
      ok(rho.apply(e.b) == e.d && rho.apply(e.d) == e.b, "edge-rho-pair");
      ok((e.kind == EdgeKind::loop) == (e.vertex1 == e.vertex2), "edge-kind");
      ac.push_back(e.a);
      ac.push_back(e.c);
      bd.push_back(e.b);
      bd.push_back(e.d);
    }
    std::sort(ac.begin(), ac.end());
    std::sort(bd.begin(), bd.end());
    const auto everything = Perm::identity(m).images();
    ok(ac == everything, "edge-cover-ac");
    ok(bd == everything, "edge-cover-bd");

    const NormalizeResult n = normalize(map);
    ok(is_normalized(n.map), "normalize-standardizes-pi");
    ok(passport(n.map.vertex_rotation()) == passport(P), "normalize-passport-P");
    ok(passport(n.map.face_rotation()) == passport(Q), "normalize-passport-Q");
    ok(passport(n.map.edge_rotation()) == passport(rho), "normalize-passport-rho");
    const MapCensus cn = census(n.map);
    ok(cn.chi == c.chi && cn.genus == c.genus && cn.vertices == c.vertices, "normalize-census");
    if (is_normalized(map)) ok(n.relabeling.is_identity(), "normalize-stable");
  }
  return fails;
}

/// The zig-zag laws for one knot value of a graphical map.
inline std::vector<CheckFailure> check_knot_invariants(const CombMap& map, const Knot& knot) {
  std::vector<CheckFailure> fails;
  const auto ok = [&](bool b, const char* name, const std::string& d = "") {
    detail::expect(fails, b, name, d);
  };
  const std::size_t m = map.degree();
  const Perm& pi = map.inner_edge_rotation();
  const Perm& rho = map.edge_rotation();

  ok(knot.c1_set().size() == m / 2, "color-classes-balanced");
  std::size_t covered = 0;
  for (std::size_t i = 0; i < knot.orbit_count(); ++i) {
    const auto orbit = knot.orbit(i);
    ok(orbit.size() % 2 == 0, "orbit-even-length");
    for (std::size_t j = 0; j < orbit.size(); ++j)
      ok(knot.in_c1(orbit[j]) == (j % 2 == 0), "orbit-alternates");
    covered += orbit.size();
  }
  ok(covered == m, "orbits-cover");
  for (Corner x = 1; x <= m; ++x) {
    if (knot.in_c1(x)) ok(!knot.in_c1(pi.apply(x)), "pi-maps-c1-to-c2");
    else ok(knot.in_c1(rho.apply(x)), "rho-maps-c2-to-c1");
  }

  const EdgeSplit split = classify_edges(map, knot);
  ok(split.pi1 * split.pi2 == pi, "pi-splits");
  for (Corner x = 1; x <= m; ++x)
    ok(split.pi1.apply(x) == x || split.pi2.apply(x) == x, "pi-split-disjoint");
  for (const MapEdge& e : edges(map)) {
    const bool cut = knot.in_c1(e.a) == knot.in_c1(e.b);
    const bool cyc = knot.in_c1(e.a) == knot.in_c1(e.d);
    ok(cut != cyc, "classification-exclusive");
  }

  const GammaPair g = gammas(map, knot);
  ok(g.gamma1 * g.gamma2 * split.pi2 == map.vertex_rotation(), "gamma-factorization");
  for (Corner x = 1; x <= m; ++x) {
    if (knot.in_c1(x)) ok(g.gamma2.apply(x) == x, "gamma2-support");
    else ok(g.gamma1.apply(x) == x, "gamma1-support");
  }

  const KnotIdentityReport report = knot_identities(map, knot);
  for (const KnotCheck& ch : report.checks) ok(ch.passed, ch.name.c_str(), ch.witness);

  const Perm alpha = knotting(map, knot);
  ok(knot.mu() * alpha == map.vertex_rotation(), "knotting-factor");
  ok(alpha.conjugated_by(pi) == alpha, "knotting-self-conjugate");

  const EdgeStructuring es = edge_structuring(map, knot);
  ok(es.passport_match, "structuring-passport");
  ok(es.delta.is_fpf_involution(), "delta-involution");

  const NormalizedKnot nk = normalize_knot(map, knot);
  ok(is_partially_normalized(nk.map, nk.knot), "normalized-knot-partial");
  bool odds = true;
  for (Corner x = 1; x <= m; ++x)
    if (nk.knot.in_c1(x) != (x % 2 == 1)) odds = false;
  ok(odds, "normalized-knot-c1-odd");
  ok(passport(nk.knot.mu()) == passport(knot.mu()), "normalized-knot-mu-passport");
  ok(passport(knotting(nk.map, nk.knot)) == passport(alpha), "normalized-knot-alpha-passport");
  ok(passport(edge_structuring(nk.map, nk.knot).epsilon) == passport(es.epsilon),
     "normalized-knot-epsilon-passport");
  const MapCensus before = census(map), after = census(nk.map);
  ok(before.chi == after.chi && before.genus == after.genus && before.vertices == after.vertices &&
         before.edges == after.edges && before.faces == after.faces,
     "normalized-knot-census");

  return fails;
}

/// Everything at once for one seeded trial: map laws, the canonical knot, a
/// random reorientation, a double flip, and (for small orbit counts) the
/// exhaustive 2^k distinctness of colored knots.
inline std::vector<CheckFailure> check_all(const CombMap& map, std::uint64_t seed) {
  std::vector<CheckFailure> fails = check_map_invariants(map);
  if (!is_graphical(map)) return fails;

  const Knot canonical = zigzag_knot(map);
  for (auto&& f : check_knot_invariants(map, canonical)) fails.push_back(std::move(f));

  std::mt19937_64 rng(seed);
  std::vector<bool> flips(canonical.orbit_count());
  for (auto&& b : flips) b = rng() & 1;
  const Knot flipped = reorient_knot(canonical, flips);
  for (auto&& f : check_knot_invariants(map, flipped)) fails.push_back(std::move(f));

  detail::expect(fails, reorient_knot(canonical, std::vector<bool>(canonical.orbit_count())) ==
                            canonical,
                 "reorient-zero-identity");
  detail::expect(fails, reorient_knot(flipped, flips) == canonical, "reorient-double-flip");

  if (canonical.orbit_count() <= 10) {
    const std::size_t k = canonical.orbit_count();
    std::set<std::pair<std::vector<Corner>, std::vector<char>>> seen;
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
      std::vector<bool> bits(k);
      for (std::size_t i = 0; i < k; ++i) bits[i] = (mask >> i) & 1;
      const Knot kn = reorient_knot(canonical, bits);
      std::vector<char> colors(map.degree());
      for (Corner x = 1; x <= map.degree(); ++x) colors[x - 1] = kn.in_c1(x) ? 1 : 0;
      seen.insert({kn.mu().images(), std::move(colors)});
    }
    detail::expect(fails, seen.size() == (std::size_t{1} << k), "orientations-distinct",
                   std::to_string(seen.size()) + " distinct of " +
                       std::to_string(std::size_t{1} << k));
  }
  return fails;
}

}  // namespace rotamap
