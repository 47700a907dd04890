#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rotamap/error.hpp"

namespace rotamap {

/// Corner label. Corners are numbered 1..m; 0 is never a valid corner.
using Corner = std::uint32_t;

/// A bijection of {1..m}. Corners are acted on the right (x^p) and products
/// read left to right: x^(p*q) = (x^p)^q.
class Perm {
public:
  Perm() = default;

  static Perm identity(std::size_t m) {
    Perm p;
    p.img_.resize(m);
    std::iota(p.img_.begin(), p.img_.end(), Corner{1});
    return p;
  }

  /// images[i] is the image of corner i+1; rejects non-bijections.
  static Perm from_images(std::vector<Corner> images) {
    std::vector<bool> seen(images.size(), false);
    for (Corner y : images) {
      if (y < 1 || y > images.size() || seen[y - 1])
        fail(errc::not_bijection,
             "image table is not a bijection of {1.." + std::to_string(images.size()) + "}");
      seen[y - 1] = true;
    }
    Perm p;
    p.img_ = std::move(images);
    return p;
  }

  std::size_t degree() const noexcept { return img_.size(); }
  const std::vector<Corner>& images() const noexcept { return img_; }

  /// x^p for a corner in 1..degree().
  Corner apply(Corner x) const { return img_[x - 1]; }

  bool is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i)
      if (img_[i] != i + 1) return false;
    return true;
  }

  /// True iff every orbit has length exactly 2 (fixed points disqualify).
  bool is_fpf_involution() const {
    for (Corner x = 1; x <= img_.size(); ++x) {
      const Corner y = apply(x);
      if (y == x || apply(y) != x) return false;
    }
    return true;
  }

  Perm inverse() const {
    Perm r;
    r.img_.resize(img_.size());
    for (Corner x = 1; x <= img_.size(); ++x) r.img_[apply(x) - 1] = x;
    return r;
  }

  /// Left-to-right product: apply *this first, then q.
  Perm operator*(const Perm& q) const {
    if (degree() != q.degree())
      fail(errc::degree_mismatch, "cannot compose degree " + std::to_string(degree()) +
                                      " with degree " + std::to_string(q.degree()));
    Perm r;
    r.img_.resize(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) r.img_[i] = q.img_[img_[i] - 1];
    return r;
  }

  /// t^-1 * (*this) * t; relabels every cycle element x by x^t.
  Perm conjugated_by(const Perm& t) const {
    if (degree() != t.degree())
      fail(errc::degree_mismatch, "conjugation needs equal degrees");
    Perm r;
    r.img_.resize(img_.size());
    for (Corner x = 1; x <= img_.size(); ++x) r.img_[t.apply(x) - 1] = t.apply(apply(x));
    return r;
  }

  friend bool operator==(const Perm&, const Perm&) = default;

private:
  std::vector<Corner> img_;
};

/// Cycle decomposition in canonical form: each orbit starts at its smallest
/// label, orbits sorted by smallest label, fixed points included. The
/// passport lists orbit lengths in descending order.
struct OrbitSet {
  std::vector<std::vector<Corner>> orbits;
  std::vector<std::size_t> passport;
};

inline OrbitSet orbits_and_passport(const Perm& p) {
  OrbitSet out;
  std::vector<bool> seen(p.degree(), false);
  for (Corner x = 1; x <= p.degree(); ++x) {
    if (seen[x - 1]) continue;
    std::vector<Corner> orbit;
    Corner y = x;
    do {
      seen[y - 1] = true;
      orbit.push_back(y);
      y = p.apply(y);
    } while (y != x);
    out.orbits.push_back(std::move(orbit));
  }
  for (const auto& orbit : out.orbits) out.passport.push_back(orbit.size());
  std::sort(out.passport.begin(), out.passport.end(), std::greater<>());
  return out;
}

inline std::vector<std::size_t> passport(const Perm& p) {
  return orbits_and_passport(p).passport;
}

/// Orbit of x under p, starting at x.
inline std::vector<Corner> orbit_of(const Perm& p, Corner x) {
  std::vector<Corner> orbit;
  Corner y = x;
  do {
    orbit.push_back(y);
    y = p.apply(y);
  } while (y != x);
  return orbit;
}

/// (1 2)(3 4)...(m-1 m); the fixed inner edge rotation of normalized maps.
inline Perm standard_involution(std::size_t m) {
  if (m % 2 != 0)
    fail(errc::odd_degree, "standard involution needs even degree, got " + std::to_string(m));
  std::vector<Corner> img(m);
  for (std::size_t j = 0; j + 1 < m; j += 2) {
    img[j] = static_cast<Corner>(j + 2);
    img[j + 1] = static_cast<Corner>(j + 1);
  }
  return Perm::from_images(std::move(img));
}

namespace detail {

// Uniform draw from [0, n) by rejection; avoids std::uniform_int_distribution,
// whose output is not pinned across standard libraries.
inline std::uint64_t bounded_u64(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % n;
  }
}

}  // namespace detail

/// Seeded uniform permutation; back-to-front Fisher-Yates driven by
/// mt19937_64 so the same (m, seed) always yields the same table.
inline Perm random_perm(std::size_t m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Corner> img(m);
  std::iota(img.begin(), img.end(), Corner{1});
  for (std::size_t i = m; i-- > 1;) {
    const std::size_t j = static_cast<std::size_t>(detail::bounded_u64(rng, i + 1));
    std::swap(img[i], img[j]);
  }
  return Perm::from_images(std::move(img));
}

namespace detail {

inline constexpr Corner kMaxLabel = 50'000'000;

}  // namespace detail

/// Parses cycle notation:
///   perm  := "id" | cycle+
///   cycle := "(" label (sep label)* ")"
///   sep   := one or more spaces or a comma (optionally space-padded)
/// Labels absent from the text are fixed points. Degree is declared_degree
/// when given, else the largest label mentioned (0 for bare "id").
inline Perm parse_cycles(std::string_view text,
                         std::optional<std::size_t> declared_degree = std::nullopt) {
  std::size_t i = 0;
  const auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\r' ||
                               text[i] == '\n'))
      ++i;
  };

  std::vector<std::vector<Corner>> cycles;
  Corner max_label = 0;

  skip_ws();
  if (i + 2 <= text.size() && text.compare(i, 2, "id") == 0) {
    i += 2;
    skip_ws();
    if (i != text.size()) fail(errc::parse, "trailing text after \"id\"");
  } else {
    if (i == text.size()) fail(errc::parse, "empty permutation text");
    while (i < text.size()) {
      if (text[i] != '(') fail(errc::parse, std::string("expected '(', got '") + text[i] + "'");
      ++i;
      std::vector<Corner> cycle;
      bool closed = false;
      while (i < text.size()) {
        // a separator run may contain at most one comma
        int commas = 0;
        while (i < text.size() && (text[i] == ' ' || text[i] == ',')) {
          if (text[i] == ',' && ++commas > 1) fail(errc::parse, "doubled comma in cycle");
          ++i;
        }
        if (i < text.size() && text[i] == ')') {
          if (commas > 0) fail(errc::parse, "separator before ')'");
          ++i;
          closed = true;
          break;
        }
        if (i >= text.size()) break;
        if (text[i] < '0' || text[i] > '9')
          fail(errc::parse, std::string("unexpected character '") + text[i] + "' in cycle");
        std::uint64_t v = 0;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
          v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
          if (v > detail::kMaxLabel) fail(errc::parse, "label out of supported range");
          ++i;
        }
        if (v < 1) fail(errc::parse, "labels start at 1");
        cycle.push_back(static_cast<Corner>(v));
        max_label = std::max(max_label, static_cast<Corner>(v));
      }
      if (!closed) fail(errc::parse, "unclosed cycle");
      if (cycle.empty()) fail(errc::parse, "empty cycle");
      cycles.push_back(std::move(cycle));
      skip_ws();
    }
  }

  std::size_t m = declared_degree.value_or(max_label);
  if (declared_degree && max_label > *declared_degree)
    fail(errc::label_range, "label " + std::to_string(max_label) + " exceeds declared degree " +
                                std::to_string(*declared_degree));

  std::vector<Corner> img(m);
  std::iota(img.begin(), img.end(), Corner{1});
  std::vector<bool> seen(m, false);
  for (const auto& cycle : cycles) {
    for (Corner x : cycle) {
      if (seen[x - 1]) fail(errc::not_bijection, "label " + std::to_string(x) + " repeated");
      seen[x - 1] = true;
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      img[cycle[k] - 1] = cycle[(k + 1) % cycle.size()];
  }
  return Perm::from_images(std::move(img));
}

/// Canonical cycle text: orbits of length >= 2 in canonical order, labels
/// space-separated, fixed points omitted, identity rendered "id".
inline std::string format_cycles(const Perm& p) {
  std::string out;
  for (const auto& orbit : orbits_and_passport(p).orbits) {
    if (orbit.size() < 2) continue;
    out += '(';
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      if (k) out += ' ';
      out += std::to_string(orbit[k]);
    }
    out += ')';
  }
  return out.empty() ? "id" : out;
}

/// Same permutation on a larger ground set; new labels are fixed points.
inline Perm extend_to(const Perm& p, std::size_t m) {
  if (m < p.degree()) fail(errc::degree_mismatch, "cannot shrink a permutation");
  std::vector<Corner> img(p.images());
  img.resize(m);
  for (std::size_t i = p.degree(); i < m; ++i) img[i] = static_cast<Corner>(i + 1);
  return Perm::from_images(std::move(img));
}

}  // namespace rotamap
