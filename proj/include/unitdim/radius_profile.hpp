#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "unitdim/geometry.hpp"

namespace unitdim {

inline constexpr double kMembershipTol = 1e-9;
inline const double kHalfSqrt2 = std::numbers::sqrt2 / 2.0;

// One piece of a radius set inside (0,1). A point is lo == hi with both ends
// closed. An unspecified piece records that some radius in (0,1) works
// without saying which.
struct RadiusPiece {
  double lo = 0.0;
  double hi = 1.0;
  bool lo_closed = false;
  bool hi_closed = false;
  bool unspecified = false;
  std::string rule;

  static RadiusPiece open(double lo, double hi, std::string rule) {
    return {lo, hi, false, false, false, std::move(rule)};
  }
  static RadiusPiece point(double r, std::string rule) {
    return {r, r, true, true, false, std::move(rule)};
  }
  static RadiusPiece somewhere(std::string rule) {
    return {0.0, 1.0, false, false, true, std::move(rule)};
  }

  bool is_point() const { return !unspecified && lo == hi; }
};

// Radii at which a graph embeds on a sphere of dimension sphere_dim. When
// complete is false only membership claims are trustworthy; absence of a
// radius proves nothing.
struct RadiusProfile {
  int sphere_dim = 0;
  std::vector<RadiusPiece> pieces;
  bool complete = false;

  bool empty() const { return pieces.empty(); }
  bool has_unspecified() const {
    return std::any_of(pieces.begin(), pieces.end(), [](auto& p) { return p.unspecified; });
  }

  // Does the profile cover every radius in (0,1)?
  bool covers_unit_interval() const {
    return std::any_of(pieces.begin(), pieces.end(), [](const RadiusPiece& p) {
      return !p.unspecified && p.lo <= 0.0 && p.hi >= 1.0;
    });
  }

  bool contains(double r) const {
    for (const auto& p : pieces) {
      if (p.unspecified) continue;
      if (p.is_point()) {
        if (std::abs(r - p.lo) <= kMembershipTol) return true;
        continue;
      }
      const bool above = p.lo_closed ? r >= p.lo - kMembershipTol : r > p.lo + kMembershipTol;
      const bool below = p.hi_closed ? r <= p.hi + kMembershipTol : r < p.hi - kMembershipTol;
      if (above && below) return true;
    }
    return false;
  }

  // Infimum of the known radii; nullopt if an unspecified piece hides it.
  std::optional<double> infimum() const {
    if (pieces.empty() || has_unspecified()) return std::nullopt;
    double m = 1.0;
    for (const auto& p : pieces) m = std::min(m, p.lo);
    return m;
  }

  // Some radius strictly below x, as a witness; nullopt if none is known.
  std::optional<double> radius_below(double x) const {
    for (const auto& p : pieces) {
      if (p.unspecified) continue;
      if (p.is_point()) {
        if (p.lo < x - kMembershipTol) return p.lo;
      } else if (p.lo < x - kMembershipTol) {
        return std::min(p.hi, x) * 0.5 + p.lo * 0.5;
      }
    }
    return std::nullopt;
  }

  std::string describe() const;
};

inline std::string format_radius(double r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", r);
  return buf;
}

inline std::string RadiusProfile::describe() const {
  std::string s = "S^[" + std::to_string(sphere_dim) + "] {";
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto& p = pieces[i];
    if (i) s += " U ";
    if (p.unspecified) s += "unspecified";
    else if (p.is_point()) s += format_radius(p.lo);
    else
      s += std::string(p.lo_closed ? "[" : "(") + format_radius(p.lo) + ", " + format_radius(p.hi) +
           (p.hi_closed ? "]" : ")");
  }
  return s + (complete ? "}" : "} (partial)");
}

enum class Feasibility { feasible, infeasible, ambiguous };

struct OrthogonalWitness {
  Feasibility verdict = Feasibility::ambiguous;
  double r1 = 0.0;  // meaningful when feasible and both radii are known
  double r2 = 0.0;
  bool radii_known = false;
};

namespace detail {

// Squared radii of a piece as an interval in (0,1).
struct SqInterval {
  double lo, hi;
  bool lo_closed, hi_closed;
};

inline SqInterval squared(const RadiusPiece& p) {
  return {p.lo * p.lo, p.hi * p.hi, p.lo_closed, p.hi_closed};
}

// Is there s in a with 1 - s in b? Endpoints within tolerance are treated as
// equal, so an open endpoint touching anything excludes the touch point.
inline std::optional<double> orthogonal_square(const SqInterval& a, const SqInterval& b) {
  // 1 - b as an interval in s.
  const SqInterval nb{1.0 - b.hi, 1.0 - b.lo, b.hi_closed, b.lo_closed};
  double lo = a.lo, hi = a.hi;
  bool lo_closed = a.lo_closed, hi_closed = a.hi_closed;
  if (nb.lo > lo + kMembershipTol) {
    lo = nb.lo;
    lo_closed = nb.lo_closed;
  } else if (std::abs(nb.lo - lo) <= kMembershipTol) {
    lo = std::max(lo, nb.lo);
    lo_closed = lo_closed && nb.lo_closed;
  }
  if (nb.hi < hi - kMembershipTol) {
    hi = nb.hi;
    hi_closed = nb.hi_closed;
  } else if (std::abs(nb.hi - hi) <= kMembershipTol) {
    hi = std::min(hi, nb.hi);
    hi_closed = hi_closed && nb.hi_closed;
  }
  if (hi - lo > kMembershipTol) return 0.5 * (lo + hi);
  if (std::abs(hi - lo) <= kMembershipTol && lo_closed && hi_closed) return 0.5 * (lo + hi);
  return std::nullopt;
}

}  // namespace detail

// Decides whether r1 in a, r2 in b exist with r1^2 + r2^2 = 1.
inline OrthogonalWitness orthogonal_radii(const RadiusProfile& a, const RadiusProfile& b) {
  OrthogonalWitness out;
  bool unresolved = false;
  for (const auto& pa : a.pieces)
    for (const auto& pb : b.pieces) {
      if (pa.unspecified || pb.unspecified) {
        const RadiusPiece& known = pa.unspecified ? pb : pa;
        // Any radius r in (0,1) has partner sqrt(1 - r^2) in (0,1).
        if (!known.unspecified && known.lo <= 0.0 && known.hi >= 1.0) {
          out.verdict = Feasibility::feasible;
          out.radii_known = false;
          return out;
        }
        unresolved = true;
        continue;
      }
      if (auto s = detail::orthogonal_square(detail::squared(pa), detail::squared(pb))) {
        out.verdict = Feasibility::feasible;
        out.r1 = std::sqrt(*s);
        out.r2 = std::sqrt(1.0 - *s);
        out.radii_known = true;
        return out;
      }
    }
  if (unresolved || !a.complete || !b.complete) out.verdict = Feasibility::ambiguous;
  else out.verdict = Feasibility::infeasible;
  return out;
}

// Image of a profile under the cone map, restricted to radii whose image
// stays below 1. Membership-only: the result is never complete.
inline RadiusProfile cone_profile(const RadiusProfile& p, const std::string& rule) {
  RadiusProfile out;
  out.sphere_dim = p.sphere_dim + 1;
  const double cap = std::sqrt(3.0) / 2.0;  // R(cap) = 1
  for (const auto& piece : p.pieces) {
    if (piece.unspecified) continue;
    if (piece.lo >= cap - kMembershipTol) continue;
    if (piece.is_point()) {
      out.pieces.push_back(RadiusPiece::point(cone_radius(piece.lo), rule));
      continue;
    }
    RadiusPiece img;
    img.rule = rule;
    img.lo = piece.lo <= 0.0 ? 0.5 : cone_radius(piece.lo);
    img.lo_closed = piece.lo > 0.0 && piece.lo_closed;
    if (piece.hi >= cap) {
      img.hi = 1.0;
      img.hi_closed = false;
    } else {
      img.hi = cone_radius(piece.hi);
      img.hi_closed = piece.hi_closed;
    }
    out.pieces.push_back(img);
  }
  return out;
}

}  // namespace unitdim
