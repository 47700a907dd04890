#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rotamap/error.hpp"
#include "rotamap/map.hpp"
#include "rotamap/perm.hpp"

namespace rotamap {

class Knot;
struct NormalizedKnot;
Knot zigzag_knot(const CombMap& map);
Knot reorient_knot(const Knot& knot, const std::vector<bool>& flips);
NormalizedKnot normalize_knot(const CombMap& map, const Knot& knot);

/// A fixed value of the zig-zag knot: the permutation mu together with the
/// bicoloring C1/C2 it came from and one start corner per orbit recording the
/// orientation choice. mu applies pi on C1 and rho on C2; every orbit has
/// even length and alternates colors.
class Knot {
public:
  const Perm& mu() const noexcept { return mu_; }
  std::size_t degree() const noexcept { return mu_.degree(); }
  bool in_c1(Corner x) const { return c1_[x - 1] != 0; }
  std::size_t orbit_count() const noexcept { return starts_.size(); }
  const std::vector<Corner>& orbit_starts() const noexcept { return starts_; }
  std::vector<Corner> orbit(std::size_t i) const { return orbit_of(mu_, starts_[i]); }

  std::vector<Corner> c1_set() const {
    std::vector<Corner> out;
    for (Corner x = 1; x <= degree(); ++x)
      if (in_c1(x)) out.push_back(x);
    return out;
  }
  std::vector<Corner> c2_set() const {
    std::vector<Corner> out;
    for (Corner x = 1; x <= degree(); ++x)
      if (!in_c1(x)) out.push_back(x);
    return out;
  }

  /// Colored-knot identity: the (mu, C1) pair. Orbit starts are orientation
  /// bookkeeping, not part of the value.
  friend bool operator==(const Knot& a, const Knot& b) {
    return a.mu_ == b.mu_ && a.c1_ == b.c1_;
  }

private:
  Perm mu_;
  std::vector<char> c1_;
  std::vector<Corner> starts_;

  friend Knot zigzag_knot(const CombMap&);
  friend Knot reorient_knot(const Knot&, const std::vector<bool>&);
  friend NormalizedKnot normalize_knot(const CombMap&, const Knot&);
};

/// Canonical knot of a graphical map: each walk starts at the smallest
/// uncovered corner, which joins C1 and steps by pi first, then rho, until
/// the walk closes.
inline Knot zigzag_knot(const CombMap& map) {
  if (!is_graphical(map))
    fail(errc::not_graphical, "zig-zag walks need a graphical map; offending orbit " +
                                  detail::first_non_pair_orbit(map.edge_rotation()));
  const Perm& pi = map.inner_edge_rotation();
  const Perm& rho = map.edge_rotation();
  const std::size_t m = map.degree();

  std::vector<Corner> img(m, 0);
  std::vector<char> c1(m, 0);
  std::vector<char> covered(m, 0);
  std::vector<Corner> starts;
  for (Corner s = 1; s <= m; ++s) {
    if (covered[s - 1]) continue;
    starts.push_back(s);
    Corner x = s;
    bool green = true;
    do {
      covered[x - 1] = 1;
      c1[x - 1] = green ? 1 : 0;
      const Corner y = green ? pi.apply(x) : rho.apply(x);
      img[x - 1] = y;
      green = !green;
      x = y;
    } while (x != s);
  }
  Knot k;
  k.mu_ = Perm::from_images(std::move(img));
  k.c1_ = std::move(c1);
  k.starts_ = std::move(starts);
  return k;
}

/// Re-walks the flipped orbits in the reverse direction: the orbit's former
/// second corner becomes its C1 start, mu inverts on the orbit and the
/// colors swap. One flip bit per orbit, in orbit-start order.
inline Knot reorient_knot(const Knot& knot, const std::vector<bool>& flips) {
  if (flips.size() != knot.orbit_count())
    fail(errc::orient_length, "expected " + std::to_string(knot.orbit_count()) +
                                  " orientation bits, got " + std::to_string(flips.size()));
  std::vector<Corner> img(knot.mu().images());
  std::vector<char> c1(knot.degree());
  for (Corner x = 1; x <= knot.degree(); ++x) c1[x - 1] = knot.in_c1(x) ? 1 : 0;
  std::vector<Corner> starts = knot.orbit_starts();

  for (std::size_t i = 0; i < flips.size(); ++i) {
    if (!flips[i]) continue;
    const std::vector<Corner> orbit = knot.orbit(i);
    starts[i] = orbit[1];
    for (std::size_t j = 0; j < orbit.size(); ++j) {
      img[orbit[j] - 1] = orbit[(j + orbit.size() - 1) % orbit.size()];
      c1[orbit[j] - 1] ^= 1;
    }
  }
  Knot k;
  k.mu_ = Perm::from_images(std::move(img));
  k.c1_ = std::move(c1);
  k.starts_ = std::move(starts);
  return k;
}

namespace detail {

// A knot belongs to a map iff it follows the piecewise law mu = {C1: pi; C2: rho}.
inline void require_knot_of(const CombMap& map, const Knot& knot) {
  if (knot.degree() != map.degree())
    fail(errc::knot_mismatch, "knot degree " + std::to_string(knot.degree()) +
                                  " does not match map degree " + std::to_string(map.degree()));
  const Perm& pi = map.inner_edge_rotation();
  const Perm& rho = map.edge_rotation();
  for (Corner x = 1; x <= map.degree(); ++x) {
    const Corner want = knot.in_c1(x) ? pi.apply(x) : rho.apply(x);
    if (knot.mu().apply(x) != want)
      fail(errc::knot_mismatch,
           "knot does not follow {C1: pi; C2: rho} at corner " + std::to_string(x));
  }
}

}  // namespace detail

struct EdgeSplit {
  Perm pi1;  // cut edges: quartets with color(a) = color(b)
  Perm pi2;  // cycle edges: quartets with color(a) = color(d)
};

/// Splits pi into pi1*pi2 by the knot's coloring. For each quartet exactly
/// one of the two patterns holds, since a,c and b,d always straddle colors.
inline EdgeSplit classify_edges(const CombMap& map, const Knot& knot) {
  detail::require_knot_of(map, knot);
  std::vector<Corner> img1(map.degree());
  std::vector<Corner> img2(map.degree());
  for (std::size_t i = 0; i < map.degree(); ++i) img1[i] = img2[i] = static_cast<Corner>(i + 1);
  for (const MapEdge& e : edges(map)) {
    const bool cut = knot.in_c1(e.a) == knot.in_c1(e.b);
    const bool cyc = knot.in_c1(e.a) == knot.in_c1(e.d);
    if (cut == cyc) throw std::logic_error("edge classification must be exclusive");
    auto& img = cut ? img1 : img2;
    img[e.a - 1] = e.c;
    img[e.c - 1] = e.a;
  }
  return EdgeSplit{Perm::from_images(std::move(img1)), Perm::from_images(std::move(img2))};
}

struct GammaPair {
  Perm gamma1;  // restriction of P*pi2 to C1
  Perm gamma2;  // restriction of P*pi2 to C2
};

/// Factorization P = gamma1*gamma2*pi2. P*pi2 must preserve the coloring;
/// that precondition is checked, and a violation reports the witness corner.
inline GammaPair gammas(const CombMap& map, const Knot& knot) {
  const EdgeSplit split = classify_edges(map, knot);
  const Perm moved = map.vertex_rotation() * split.pi2;
  std::vector<Corner> img1(map.degree());
  std::vector<Corner> img2(map.degree());
  for (std::size_t i = 0; i < map.degree(); ++i) img1[i] = img2[i] = static_cast<Corner>(i + 1);
  for (Corner x = 1; x <= map.degree(); ++x) {
    const Corner y = moved.apply(x);
    if (knot.in_c1(x) != knot.in_c1(y))
      fail(errc::factorization,
           "P*pi2 moves corner " + std::to_string(x) + " across colors to " + std::to_string(y));
    (knot.in_c1(x) ? img1 : img2)[x - 1] = y;
  }
  return GammaPair{Perm::from_images(std::move(img1)), Perm::from_images(std::move(img2))};
}

struct KnotCheck {
  std::string name;
  bool passed = false;
  std::string witness;  // empty when passed
};

struct KnotIdentityReport {
  std::vector<KnotCheck> checks;
  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

/// Evaluates the knot identities and reports pass/fail with witnesses:
///   knot-formula    mu = gamma2 * pi * gamma1^-1
///   color-swap      x -> x^(P*pi1) always changes color
///   color-preserve  x -> x^(P*pi2) always preserves color
///   piecewise-c2    gamma2*pi*gamma1^-1 agrees with mu on C2
///   piecewise-c1    gamma1^-1*rho*gamma2 agrees with mu on C1
inline KnotIdentityReport knot_identities(const CombMap& map, const Knot& knot) {
  const EdgeSplit split = classify_edges(map, knot);
  const GammaPair g = gammas(map, knot);
  const Perm& pi = map.inner_edge_rotation();
  const Perm& rho = map.edge_rotation();
  const std::size_t m = map.degree();

  KnotIdentityReport report;
  const auto add = [&](std::string name, bool ok, std::string witness) {
    report.checks.push_back(KnotCheck{std::move(name), ok, ok ? "" : std::move(witness)});
  };

  const Perm composite = g.gamma2 * pi * g.gamma1.inverse();
  add("knot-formula", composite == knot.mu(),
      "gamma2*pi*gamma1^-1 = " + format_cycles(composite) + " but mu = " +
          format_cycles(knot.mu()));

  const Perm swap = map.vertex_rotation() * split.pi1;
  Corner bad = 0;
  for (Corner x = 1; x <= m && !bad; ++x)
    if (knot.in_c1(x) == knot.in_c1(swap.apply(x))) bad = x;
  add("color-swap", bad == 0, "P*pi1 keeps the color of corner " + std::to_string(bad));

  const Perm keep = map.vertex_rotation() * split.pi2;
  bad = 0;
  for (Corner x = 1; x <= m && !bad; ++x)
    if (knot.in_c1(x) != knot.in_c1(keep.apply(x))) bad = x;
  add("color-preserve", bad == 0, "P*pi2 changes the color of corner " + std::to_string(bad));

  bad = 0;
  for (Corner x = 1; x <= m && !bad; ++x)
    if (!knot.in_c1(x) && composite.apply(x) != knot.mu().apply(x)) bad = x;
  add("piecewise-c2", bad == 0,
      "gamma2*pi*gamma1^-1 disagrees with mu at corner " + std::to_string(bad));

  const Perm piece1 = g.gamma1.inverse() * rho * g.gamma2;
  bad = 0;
  for (Corner x = 1; x <= m && !bad; ++x)
    if (knot.in_c1(x) && piece1.apply(x) != knot.mu().apply(x)) bad = x;
  add("piecewise-c1", bad == 0,
      "gamma1^-1*rho*gamma2 disagrees with mu at corner " + std::to_string(bad));

  return report;
}

/// The knotting alpha with P = mu * alpha; self-conjugate under pi.
inline Perm knotting(const CombMap& map, const Knot& knot) {
  detail::require_knot_of(map, knot);
  Perm alpha = knot.mu().inverse() * map.vertex_rotation();
  if (alpha.conjugated_by(map.inner_edge_rotation()) != alpha)
    throw std::logic_error("knotting lost self-conjugacy under pi");
  return alpha;
}

/// delta = pi^gamma1, epsilon = {C1: pi; C2: delta}, A = alpha*pi1.
/// passport_match realizes the claim epsilon^2 ~ A as conjugacy in the
/// symmetric group; exact equality is reported separately.
struct EdgeStructuring {
  Perm delta;
  Perm epsilon;
  Perm symmetric_form;  // A
  Perm epsilon_squared;
  bool passport_match = false;
  bool exact_match = false;
};

inline EdgeStructuring edge_structuring(const CombMap& map, const Knot& knot) {
  const EdgeSplit split = classify_edges(map, knot);
  const GammaPair g = gammas(map, knot);
  const Perm alpha = knotting(map, knot);

  EdgeStructuring out;
  out.delta = map.inner_edge_rotation().conjugated_by(g.gamma1);
  if (!out.delta.is_fpf_involution())
    throw std::logic_error("delta must stay a fixed-point-free involution");
  std::vector<Corner> img(map.degree());
  for (Corner x = 1; x <= map.degree(); ++x)
    img[x - 1] = knot.in_c1(x) ? map.inner_edge_rotation().apply(x) : out.delta.apply(x);
  out.epsilon = Perm::from_images(std::move(img));
  out.symmetric_form = alpha * split.pi1;
  out.epsilon_squared = out.epsilon * out.epsilon;
  out.passport_match = passport(out.epsilon_squared) == passport(out.symmetric_form);
  out.exact_match = out.epsilon_squared == out.symmetric_form;
  return out;
}

/// Everything the knot machinery derives from one (map, knot) pair.
struct KnotAnalysis {
  Perm pi1, pi2;
  Perm gamma1, gamma2;
  Perm alpha;
  Perm delta;
  Perm epsilon;
  Perm epsilon_squared;
  Perm symmetric_form;  // A = alpha*pi1
  bool passport_match = false;
  bool exact_match = false;
  KnotIdentityReport identities;
};

inline KnotAnalysis analyze_knot(const CombMap& map, const Knot& knot) {
  const EdgeSplit split = classify_edges(map, knot);
  const GammaPair g = gammas(map, knot);
  const EdgeStructuring es = edge_structuring(map, knot);
  KnotAnalysis out;
  out.pi1 = split.pi1;
  out.pi2 = split.pi2;
  out.gamma1 = g.gamma1;
  out.gamma2 = g.gamma2;
  out.alpha = knotting(map, knot);
  out.delta = es.delta;
  out.epsilon = es.epsilon;
  out.epsilon_squared = es.epsilon_squared;
  out.symmetric_form = es.symmetric_form;
  out.passport_match = es.passport_match;
  out.exact_match = es.exact_match;
  out.identities = knot_identities(map, knot);
  return out;
}

/// On a normalized map, true iff C1 is exactly the odd corners or exactly
/// the even corners; every edge then appears in the knot in the same order.
inline bool is_partially_normalized(const CombMap& map, const Knot& knot) {
  detail::require_knot_of(map, knot);
  if (!is_normalized(map))
    fail(errc::not_normalized, "partial normalization is defined on normalized maps");
  bool all_odd = true, all_even = true;
  for (Corner x = 1; x <= map.degree(); ++x) {
    if (knot.in_c1(x) != (x % 2 == 1)) all_odd = false;
    if (knot.in_c1(x) != (x % 2 == 0)) all_even = false;
  }
  return all_odd || all_even;
}

struct NormalizedKnot {
  CombMap map;
  Knot knot;
  Perm relabeling;
};

/// Relabels corners along the knot: orbits are walked in recorded order and
/// corners numbered sequentially, so each visited C1 corner takes the next
/// odd label and its pi-partner the following even one. The result is a
/// normalized map whose transported knot has C1 = odd corners.
inline NormalizedKnot normalize_knot(const CombMap& map, const Knot& knot) {
  if (!is_graphical(map))
    fail(errc::not_graphical, "knot normalization needs a graphical map");
  detail::require_knot_of(map, knot);

  std::vector<Corner> img(map.degree(), 0);
  Corner next = 1;
  for (std::size_t i = 0; i < knot.orbit_count(); ++i)
    for (Corner x : knot.orbit(i)) img[x - 1] = next++;
  Perm t = Perm::from_images(std::move(img));

  CombMap relabeled(map.vertex_rotation().conjugated_by(t),
                    map.face_rotation().conjugated_by(t));
  Knot k;
  k.mu_ = knot.mu().conjugated_by(t);
  k.c1_.assign(map.degree(), 0);
  for (Corner x = 1; x <= map.degree(); ++x)
    if (knot.in_c1(x)) k.c1_[t.apply(x) - 1] = 1;
  for (Corner s : knot.orbit_starts()) k.starts_.push_back(t.apply(s));
  return NormalizedKnot{std::move(relabeled), std::move(k), std::move(t)};
}

/// Exploratory probe of the partial map (P, mu): compares its hyperedges
/// (orbits of P*mu^-1) against the faces of the original map.
struct FacesPartialReport {
  CombMap partial;  // (P, mu)
  std::vector<std::vector<Corner>> partial_hyperedges;
  std::vector<std::vector<Corner>> original_faces;
  std::vector<std::size_t> hyperedge_passport;
  std::vector<std::size_t> face_passport;
  bool edge_rotation_is_face_rotation = false;  // P*mu^-1 == Q
};

inline FacesPartialReport faces_partial_map(const CombMap& map, const Knot& knot) {
  detail::require_knot_of(map, knot);
  CombMap partial(map.vertex_rotation(), knot.mu());
  FacesPartialReport out{std::move(partial), {}, {}, {}, {}, false};
  out.partial_hyperedges = hyperedges(out.partial);
  out.original_faces = orbits_and_passport(map.face_rotation()).orbits;
  out.hyperedge_passport = passport(out.partial.edge_rotation());
  out.face_passport = passport(map.face_rotation());
  out.edge_rotation_is_face_rotation = out.partial.edge_rotation() == map.face_rotation();
  return out;
}

}  // namespace rotamap
