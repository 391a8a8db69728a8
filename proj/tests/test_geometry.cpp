#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "unitdim/geometry.hpp"
#include "unitdim/radius_profile.hpp"

using namespace unitdim;

namespace {

constexpr double kSqrt3Over2 = 0.8660254037844386;
constexpr double kInvSqrt3 = 0.5773502691896258;
constexpr double kSqrt3Over8 = 0.6123724356957945;
constexpr double kConeAt09 = 1.1470786693528088;
constexpr double kPentagonRadius = 0.8506508083520399;

// Random orthonormal carrier of the given dimension inside R^ambient.
Eigen::MatrixXd random_carrier(int ambient, int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Eigen::MatrixXd m(ambient, dim);
  for (int i = 0; i < ambient; ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = g(rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(m);
  return qr.householderQ() * Eigen::MatrixXd::Identity(ambient, dim);
}

SphereSpec make_sphere(const Eigen::VectorXd& c, double r, const Eigen::MatrixXd& carrier) {
  SphereSpec s;
  s.ambient_dim = static_cast<int>(c.size());
  s.sphere_dim = static_cast<int>(carrier.cols());
  s.center = c;
  s.radius = r;
  s.carrier = carrier;
  return s;
}

Eigen::VectorXd sample_on(const SphereSpec& s, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Eigen::VectorXd y(s.sphere_dim);
  for (int i = 0; i < s.sphere_dim; ++i) y(i) = g(rng);
  y.normalize();
  return s.center + s.radius * (s.carrier * y);
}

}  // namespace

TEST(IntersectSpheres, WorkedExamples) {
  const auto a = SphereSpec::standard(3, 3, 1.0);
  auto b = a;
  b.center(0) = 1.0;
  const auto r = intersect_spheres(a, b);
  ASSERT_EQ(r.kind, IntersectionResult::Kind::sphere);
  EXPECT_NEAR(r.sphere->radius, kSqrt3Over2, 1e-12);
  EXPECT_EQ(r.sphere->sphere_dim, 2);

  b.center(0) = 2.0;
  const auto t = intersect_spheres(a, b);
  ASSERT_EQ(t.kind, IntersectionResult::Kind::point);
  EXPECT_NEAR(t.point(0), 1.0, 1e-12);

  b.center(0) = 3.0;
  EXPECT_EQ(intersect_spheres(a, b).kind, IntersectionResult::Kind::empty);
}

TEST(IntersectSpheres, RejectsBadInput) {
  const auto a = SphereSpec::standard(3, 3, 1.0);
  EXPECT_THROW(intersect_spheres(a, a), DegenerateInputError);
  EXPECT_THROW(intersect_spheres(a, SphereSpec::standard(3, 2, 1.0)), PreconditionError);
  auto off = SphereSpec::standard(3, 2, 1.0);
  auto shifted = off;
  shifted.center(2) = 0.5;  // parallel plane, not the same carrier subspace
  EXPECT_THROW(intersect_spheres(off, shifted), PreconditionError);
}

// 1000 random pairs: output radius at most min(r, q); strictly below r when
// r = q or d = q; every sampled output point is on both inputs.
TEST(IntersectSpheres, PropertySuite) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(0.05, 1.0);
  std::uniform_int_distribution<int> dims(2, 5);
  int spheres = 0;
  for (int t = 0; t < 1000; ++t) {
    const int n = dims(rng);
    const int ambient = n + static_cast<int>(rng() % 3);
    const Eigen::MatrixXd carrier = random_carrier(ambient, n, rng);
    const Eigen::VectorXd c1 = Eigen::VectorXd::Random(ambient);
    Eigen::VectorXd dir = carrier * Eigen::VectorXd::Random(n);
    dir.normalize();
    const double r = u(rng);
    double q = u(rng);
    double d = u(rng) * 1.5;
    const int variant = t % 3;
    if (variant == 1) q = r;
    if (variant == 2) d = q;
    const auto s1 = make_sphere(c1, r, carrier);
    const auto s2 = make_sphere(c1 + d * dir, q, carrier);
    const auto res = intersect_spheres(s1, s2);
    if (res.kind != IntersectionResult::Kind::sphere) continue;
    ++spheres;
    const double R = res.sphere->radius;
    EXPECT_LE(R, std::min(r, q) + 1e-12);
    if (variant == 1) EXPECT_LT(R, r);
    if (variant == 2) EXPECT_LT(R, r);
    EXPECT_EQ(res.sphere->sphere_dim, n - 1);
    for (int k = 0; k < 100; ++k) {
      const Eigen::VectorXd p = sample_on(*res.sphere, rng);
      ASSERT_NEAR((p - s1.center).norm(), r, 1e-8);
      ASSERT_NEAR((p - s2.center).norm(), q, 1e-8);
    }
  }
  EXPECT_GT(spheres, 300);
}

TEST(EquidistantSphere, Examples) {
  const auto s = SphereSpec::standard(2, 2, 0.5);
  const auto e = equidistant_sphere(s, 1.0, 3);
  EXPECT_NEAR(e.radius, kSqrt3Over2, 1e-12);
  EXPECT_EQ(e.sphere_dim, 1);
  std::mt19937_64 rng(5);
  for (int k = 0; k < 20; ++k) {
    const Eigen::VectorXd a = sample_on(e, rng);
    Eigen::VectorXd b = Eigen::VectorXd::Zero(3);
    b.head(2) = sample_on(s, rng);
    EXPECT_NEAR((a - b).norm(), 1.0, 1e-12);
  }
  const auto self_dual = equidistant_sphere(SphereSpec::standard(3, 2, kHalfSqrt2), 1.0, 4);
  EXPECT_NEAR(self_dual.radius, kHalfSqrt2, 1e-12);
  EXPECT_LT(equidistant_sphere(SphereSpec::standard(2, 2, 1.0 - 1e-9), 1.0, 3).radius, 1e-4);
  EXPECT_THROW(equidistant_sphere(s, 0.5, 3), DomainError);
}

TEST(ConeRadius, Values) {
  EXPECT_NEAR(cone_radius(0.5), kInvSqrt3, 1e-12);
  EXPECT_NEAR(cone_radius(kHalfSqrt2), kHalfSqrt2, 1e-12);
  EXPECT_NEAR(cone_radius(0.9), kConeAt09, 1e-12);
  EXPECT_NEAR(iterate_cone_radius(0.5, 2).value, kSqrt3Over8, 1e-12);
  EXPECT_EQ(iterate_cone_radius(0.3, 0).value, 0.3);
  EXPECT_THROW(cone_radius(0.0), DomainError);
  EXPECT_THROW(cone_radius(1.0), DomainError);
  // Oracle: circumradius of the unit equilateral triangle from coordinates.
  const Eigen::Vector2d a(0, 0), b(1, 0), c(0.5, std::sqrt(3.0) / 2);
  const Eigen::Vector2d center = (a + b + c) / 3.0;
  EXPECT_NEAR((a - center).norm(), cone_radius(0.5), 1e-12);
}

TEST(ConeRadius, FixedPointAndOrdering) {
  EXPECT_LT(std::abs(cone_radius(kHalfSqrt2) - kHalfSqrt2), 1e-12);
  double prev_gap = -1;
  for (int i = 1; i < 10000; ++i) {
    const double r = i / 10000.0;
    const double R = cone_radius(r);
    if (r < kHalfSqrt2 - 1e-9) {
      EXPECT_LT(r, R);
      EXPECT_LT(R, kHalfSqrt2);
    } else if (r > kHalfSqrt2 + 1e-9) {
      const double gap = R - r;
      EXPECT_GT(gap, 0);
      if (prev_gap >= 0) EXPECT_GT(gap, prev_gap);
      prev_gap = gap;
    }
  }
}

TEST(ConeRadius, IteratesAreMonotone) {
  for (int i = 1; i < 100; ++i)
    for (int j = i + 1; j < 100; ++j) {
      const double r1 = i / 100.0, r2 = j / 100.0;
      for (int n = 1; n <= 4; ++n) {
        const auto prev = iterate_cone_radius(r2, n - 1);
        if (prev.diverged || prev.value >= 1.0) break;
        const auto a = iterate_cone_radius(r1, n), b = iterate_cone_radius(r2, n);
        if (b.diverged) continue;
        ASSERT_FALSE(a.diverged);
        EXPECT_LT(a.value, b.value);
      }
    }
}

TEST(ConeRadius, DivergenceWithinBound) {
  for (int i = 1; i <= 100; ++i) {
    const double r = kHalfSqrt2 + (1.0 - kHalfSqrt2) * i / 101.0;
    const int bound = static_cast<int>(std::ceil((1 - r) / (cone_radius(r) - r)));
    const auto it = iterate_cone_radius(r, bound);
    EXPECT_TRUE(it.diverged) << r;
    EXPECT_LE(it.steps, bound);
  }
  EXPECT_TRUE(iterate_cone_radius(0.8, 100).diverged);
}

TEST(SimplexRadius, ClosedForm) {
  for (int n = 2; n <= 50; ++n) {
    EXPECT_NEAR(simplex_radius(n), std::sqrt((n - 1.0) / (2.0 * n)), 1e-12);
    EXPECT_LT(simplex_radius(n), kHalfSqrt2);
  }
  EXPECT_NEAR(simplex_radius(2), 0.5, 1e-15);
  EXPECT_NEAR(simplex_radius(3), kInvSqrt3, 1e-12);
}

TEST(StarPolygon, Radii) {
  EXPECT_NEAR(*star_polygon_radius(6, 1), 1.0, 1e-12);
  EXPECT_NEAR(*star_polygon_radius(5, 1), kPentagonRadius, 1e-12);
  EXPECT_FALSE(star_polygon_radius(6, 2).has_value());
  for (int n = 3; n <= 100; ++n)
    EXPECT_NEAR(*star_polygon_radius(n, 1), 1.0 / (2 * std::sin(std::numbers::pi / n)), 1e-12);
  EXPECT_THROW(star_polygon_radius(6, 3), DomainError);
  EXPECT_THROW(star_polygon_radius(2, 1), DomainError);
}

// Oracle: unit-sided star polygon vertices placed by turning, then measured.
TEST(StarPolygon, MatchesCoordinates) {
  for (int n = 5; n <= 12; ++n)
    for (int m = 1; 2 * m < n; ++m) {
      const auto r = star_polygon_radius(n, m);
      if (!r) continue;
      const double a = 2 * std::numbers::pi * m / n;
      const Eigen::Vector2d p0(*r, 0), p1(*r * std::cos(a), *r * std::sin(a));
      EXPECT_NEAR((p1 - p0).norm(), 1.0, 1e-12);
    }
}

TEST(StarPolygon, Classification) {
  EXPECT_EQ(classify_polygon_radius(7, 2), PolygonClass::lt_1);
  EXPECT_EQ(classify_polygon_radius(6, 1), PolygonClass::eq_1);
  EXPECT_EQ(classify_polygon_radius(7, 1), PolygonClass::gt_1);
  EXPECT_EQ(classify_polygon_radius(6, 2), PolygonClass::degenerate);
  EXPECT_EQ(classify_polygon_radius(12, 2), PolygonClass::degenerate);
}

TEST(RadiusProfile, Membership) {
  RadiusProfile p{2, {RadiusPiece::open(0.5, 1.0, "t"), RadiusPiece::point(0.3, "t")}, true};
  EXPECT_TRUE(p.contains(0.3));
  EXPECT_TRUE(p.contains(0.7));
  EXPECT_FALSE(p.contains(0.5));
  EXPECT_FALSE(p.contains(0.4));
  EXPECT_EQ(*p.infimum(), 0.3);
  EXPECT_NE(p.describe().find("0.3"), std::string::npos);
}

TEST(RadiusProfile, OrthogonalRadii) {
  const RadiusProfile any{2, {RadiusPiece::open(0.0, 1.0, "t")}, true};
  EXPECT_EQ(orthogonal_radii(any, any).verdict, Feasibility::feasible);

  // sqrt(2)/2 pairs with itself.
  const RadiusProfile half{2, {RadiusPiece::point(kHalfSqrt2, "t")}, true};
  const auto w = orthogonal_radii(half, half);
  ASSERT_EQ(w.verdict, Feasibility::feasible);
  EXPECT_NEAR(w.r1 * w.r1 + w.r2 * w.r2, 1.0, 1e-12);

  // Two simplex radii below sqrt(2)/2 never pair.
  const RadiusProfile k4{3, {RadiusPiece::point(simplex_radius(4), "t")}, true};
  EXPECT_EQ(orthogonal_radii(k4, k4).verdict, Feasibility::infeasible);

  // Open endpoints touching exactly: (0.6,1) and (0,0.8) need r1 > 0.6, r2 < 0.8.
  const RadiusProfile a{2, {RadiusPiece::open(0.6, 1.0, "t")}, true};
  const RadiusProfile b{2, {RadiusPiece::open(0.0, 0.8, "t")}, true};
  EXPECT_EQ(orthogonal_radii(a, b).verdict, Feasibility::feasible);
  const RadiusProfile c{2, {RadiusPiece::open(0.0, 0.6, "t")}, true};
  const RadiusProfile d{2, {RadiusPiece::open(0.8, 1.0, "t")}, true};
  EXPECT_EQ(orthogonal_radii(c, RadiusProfile{2, {RadiusPiece::open(0.0, 0.8, "t")}, true}).verdict,
            Feasibility::infeasible);
  EXPECT_EQ(orthogonal_radii(c, d).verdict, Feasibility::feasible);

  // Incomplete profiles never prove infeasibility.
  RadiusProfile partial = k4;
  partial.complete = false;
  EXPECT_EQ(orthogonal_radii(partial, k4).verdict, Feasibility::ambiguous);
}

// Oracle: dense sampling of squared radii.
TEST(RadiusProfile, OrthogonalRadiiAgainstSampling) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.01, 0.99);
  for (int t = 0; t < 300; ++t) {
    double a0 = u(rng), a1 = u(rng), b0 = u(rng), b1 = u(rng);
    if (a0 > a1) std::swap(a0, a1);
    if (b0 > b1) std::swap(b0, b1);
    const RadiusProfile a{2, {RadiusPiece{a0, a1, true, true, false, "t"}}, true};
    const RadiusProfile b{2, {RadiusPiece{b0, b1, true, true, false, "t"}}, true};
    bool sampled = false;
    for (int k = 0; k <= 20000 && !sampled; ++k) {
      const double r1 = a0 + (a1 - a0) * k / 20000.0;
      const double r2 = std::sqrt(std::max(0.0, 1 - r1 * r1));
      sampled = r2 >= b0 - 1e-12 && r2 <= b1 + 1e-12;
    }
    const auto verdict = orthogonal_radii(a, b).verdict;
    const double lo = a0 * a0 + b0 * b0, hi = a1 * a1 + b1 * b1;
    if (lo < 1 - 1e-6 && hi > 1 + 1e-6) EXPECT_EQ(verdict, Feasibility::feasible);
    if (lo > 1 + 1e-6 || hi < 1 - 1e-6) EXPECT_EQ(verdict, Feasibility::infeasible);
    if (verdict == Feasibility::feasible) EXPECT_TRUE(sampled);
  }
}

TEST(RadiusProfile, ConeImage) {
  const RadiusProfile p{2, {RadiusPiece::open(0.5, 1.0, "t")}, true};
  const auto img = cone_profile(p, "cone");
  EXPECT_EQ(img.sphere_dim, 3);
  EXPECT_FALSE(img.complete);
  ASSERT_EQ(img.pieces.size(), 1u);
  EXPECT_NEAR(img.pieces[0].lo, kInvSqrt3, 1e-12);
  EXPECT_EQ(img.pieces[0].hi, 1.0);
  const RadiusProfile big{2, {RadiusPiece::point(0.9, "t")}, true};
  EXPECT_TRUE(cone_profile(big, "cone").empty());
}
