#pragma once

#include <cmath>
#include <numbers>
#include <numeric>
#include <optional>
#include <string>

#include <Eigen/Dense>

#include "unitdim/error.hpp"

namespace unitdim {

inline constexpr double kTangentTol = 1e-12;
inline constexpr double kDerivedTol = 1e-9;

// An n-dimensional sphere in the "1-sphere = 2 points" convention: it lives in
// the sphere_dim-dimensional affine subspace center + span(carrier).
struct SphereSpec {
  int ambient_dim = 0;
  int sphere_dim = 0;
  Eigen::VectorXd center;
  double radius = 0.0;
  Eigen::MatrixXd carrier;  // ambient_dim x sphere_dim, orthonormal columns

  static SphereSpec standard(int ambient, int sphere_dim, double radius) {
    if (sphere_dim < 1 || sphere_dim > ambient)
      throw ParameterError("sphere_dim must satisfy 1 <= sphere_dim <= ambient_dim");
    SphereSpec s;
    s.ambient_dim = ambient;
    s.sphere_dim = sphere_dim;
    s.center = Eigen::VectorXd::Zero(ambient);
    s.radius = radius;
    s.carrier = Eigen::MatrixXd::Identity(ambient, sphere_dim);
    return s;
  }

  bool contains(const Eigen::VectorXd& p, double tol = kDerivedTol) const {
    const Eigen::VectorXd rel = p - center;
    const Eigen::VectorXd in_plane = carrier * (carrier.transpose() * rel);
    return (rel - in_plane).norm() <= tol && std::abs(rel.norm() - radius) <= tol;
  }
};

struct IntersectionResult {
  enum class Kind { empty, point, sphere };
  Kind kind = Kind::empty;
  Eigen::VectorXd point;           // kind == point
  std::optional<SphereSpec> sphere;  // kind == sphere
};

namespace detail {
inline void check_sphere(const SphereSpec& s) {
  if (!(s.radius > 0) || s.sphere_dim < 1 || s.sphere_dim > s.ambient_dim ||
      s.center.size() != s.ambient_dim || s.carrier.rows() != s.ambient_dim ||
      s.carrier.cols() != s.sphere_dim)
    throw ParameterError("malformed SphereSpec");
  const Eigen::MatrixXd gram = s.carrier.transpose() * s.carrier;
  if (!gram.isApprox(Eigen::MatrixXd::Identity(s.sphere_dim, s.sphere_dim), 1e-9))
    throw ParameterError("SphereSpec carrier is not orthonormal");
}

// Orthonormal basis of span(basis)^perp inside R^ambient.
inline Eigen::MatrixXd orthogonal_complement(const Eigen::MatrixXd& basis, int ambient) {
  if (basis.cols() == 0) return Eigen::MatrixXd::Identity(ambient, ambient);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(basis);
  const Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(ambient, ambient);
  return q.rightCols(ambient - basis.cols());
}
}  // namespace detail

// Intersection of two co-dimensional spheres sharing a carrier subspace. In
// coordinates with the first center at the origin and the second at d*e_1,
// the common points satisfy x_1 = A = (r^2 - q^2 + d^2) / (2d) and
// x_2^2 + ... + x_n^2 = r^2 - A^2.
inline IntersectionResult intersect_spheres(const SphereSpec& s1, const SphereSpec& s2) {
  detail::check_sphere(s1);
  detail::check_sphere(s2);
  if (s1.ambient_dim != s2.ambient_dim || s1.sphere_dim != s2.sphere_dim)
    throw PreconditionError("spheres must have equal ambient and sphere dimensions");
  const Eigen::MatrixXd cross = s1.carrier.transpose() * s2.carrier;
  if (std::abs(std::abs(cross.determinant()) - 1.0) > 1e-9)
    throw PreconditionError("spheres must lie in the same carrier subspace");
  const Eigen::VectorXd delta = s2.center - s1.center;
  const Eigen::VectorXd delta_in = s1.carrier * (s1.carrier.transpose() * delta);
  if ((delta - delta_in).norm() > 1e-9)
    throw PreconditionError("spheres must lie in the same carrier subspace");
  const double d = delta.norm();
  if (d <= kTangentTol) throw DegenerateInputError("spheres have coincident centers");

  const double r = s1.radius;
  const double q = s2.radius;
  const double A = (r * r - q * q + d * d) / (2 * d);
  const double R = r * r - A * A;
  const Eigen::VectorXd axis = delta / d;
  IntersectionResult out;
  if (std::abs(R) < kTangentTol || (s1.sphere_dim == 1 && std::abs(R) < kDerivedTol)) {
    out.kind = IntersectionResult::Kind::point;
    out.point = s1.center + A * axis;
    return out;
  }
  // A 1-sphere has no room for a lower-dimensional intersection.
  if (R < 0 || s1.sphere_dim == 1) return out;

  SphereSpec s;
  s.ambient_dim = s1.ambient_dim;
  s.sphere_dim = s1.sphere_dim - 1;
  s.center = s1.center + A * axis;
  s.radius = std::sqrt(R);
  // Carrier: the part of s1's carrier orthogonal to the line of centers.
  const Eigen::VectorXd axis_local = s1.carrier.transpose() * axis;
  const Eigen::MatrixXd local = detail::orthogonal_complement(axis_local, s1.sphere_dim);
  s.carrier = s1.carrier * local;
  out.kind = IntersectionResult::Kind::sphere;
  out.sphere = std::move(s);
  return out;
}

// Points at distance d from every point of s, inside R^ambient: a sphere with
// the same center in the orthogonal complement of s's carrier.
inline SphereSpec equidistant_sphere(const SphereSpec& s, double d, int ambient) {
  detail::check_sphere(s);
  if (ambient < s.ambient_dim || ambient <= s.sphere_dim)
    throw ParameterError("ambient must be at least the sphere's ambient dimension and exceed "
                         "its sphere dimension");
  if (!(d > s.radius))
    throw DomainError("equidistant locus is empty unless d > radius");
  SphereSpec out;
  out.ambient_dim = ambient;
  out.sphere_dim = ambient - s.sphere_dim;
  out.center = Eigen::VectorXd::Zero(ambient);
  out.center.head(s.ambient_dim) = s.center;
  Eigen::MatrixXd padded = Eigen::MatrixXd::Zero(ambient, s.sphere_dim);
  padded.topRows(s.ambient_dim) = s.carrier;
  out.carrier = detail::orthogonal_complement(padded, ambient);
  out.radius = std::sqrt(d * d - s.radius * s.radius);
  return out;
}

// R(r) = 1 / (2 sqrt(1 - r^2)).
inline double cone_radius(double r) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("cone_radius requires 0 < r < 1");
  return 1.0 / (2.0 * std::sqrt(1.0 - r * r));
}

struct IterateResult {
  bool diverged = false;
  int steps = 0;  // n when converged, else the first step whose value reached 1
  double value = 0.0;
};

inline IterateResult iterate_cone_radius(double r, int n) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("iterate_cone_radius requires 0 < r < 1");
  if (n < 0) throw ParameterError("iterate_cone_radius requires n >= 0");
  IterateResult out{false, 0, r};
  for (int i = 1; i <= n; ++i) {
    out.value = cone_radius(out.value);
    out.steps = i;
    if (out.value >= 1.0) {
      out.diverged = true;
      return out;
    }
  }
  return out;
}

// Circumradius of the unit simplex K_n, as R^{n-2}(1/2).
inline double simplex_radius(int n) {
  if (n < 2) throw ParameterError("simplex_radius requires n >= 2");
  return iterate_cone_radius(0.5, n - 2).value;
}

// Circumradius of the regular star polygon {n/m} with unit sides, or nullopt
// when gcd(n, m) != 1 and the polygon is degenerate.
inline std::optional<double> star_polygon_radius(int n, int m) {
  if (n < 3) throw DomainError("star_polygon_radius requires n >= 3");
  if (m < 1 || 2 * m >= n) throw DomainError("star_polygon_radius requires 1 <= m < n/2");
  if (std::gcd(n, m) != 1) return std::nullopt;
  return 1.0 / (2.0 * std::sin(m * std::numbers::pi / n));
}

// Circumradius of the convex regular n-gon with unit sides.
inline double convex_polygon_radius(int n) { return *star_polygon_radius(n, 1); }

enum class PolygonClass { lt_1, eq_1, gt_1, degenerate };

inline const char* to_string(PolygonClass c) {
  switch (c) {
    case PolygonClass::lt_1: return "<1";
    case PolygonClass::eq_1: return "=1";
    case PolygonClass::gt_1: return ">1";
    case PolygonClass::degenerate: return "degenerate";
  }
  return "?";
}

inline PolygonClass classify_polygon_radius(int n, int m) {
  const auto r = star_polygon_radius(n, m);
  if (!r) return PolygonClass::degenerate;
  if (std::abs(*r - 1.0) < kTangentTol) return PolygonClass::eq_1;
  return *r < 1.0 ? PolygonClass::lt_1 : PolygonClass::gt_1;
}

}  // namespace unitdim
