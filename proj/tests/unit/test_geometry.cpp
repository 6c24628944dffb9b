#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "interpen/error.hpp"
#include "interpen/geometry.hpp"
#include "interpen/lewy.hpp"
#include "interpen/rkc.hpp"
#include "oracles.hpp"

namespace interpen {
namespace {

std::vector<Vec2> regular(int n, double r = 1.0, Vec2 c = {0.0, 0.0}) {
  std::vector<Vec2> v;
  for (int i = 0; i < n; ++i) {
    const double t = 2.0 * std::numbers::pi * i / n;
    v.push_back({c.x + r * std::cos(t), c.y + r * std::sin(t)});
  }
  return v;
}

std::vector<Vec2> subdivided_square() {
  return {{0, 0}, {0.5, 0}, {1, 0}, {1, 0.5}, {1, 1}, {0.5, 1}, {0, 1}, {0, 0.5}};
}

std::vector<Vec2> figure_eight(int n) {
  std::vector<Vec2> v;
  for (int i = 0; i < n; ++i) {
    const double t = 2.0 * std::numbers::pi * (i + 0.5) / n;
    v.push_back({std::sin(t), std::sin(t) * std::cos(t)});
  }
  return v;
}

std::vector<Vec2> star(int spikes) {
  std::vector<Vec2> v;
  for (int i = 0; i < 2 * spikes; ++i) {
    const double t = std::numbers::pi * i / spikes;
    const double r = i % 2 ? 0.4 : 1.0;
    v.push_back({r * std::cos(t), r * std::sin(t)});
  }
  return v;
}

std::vector<Vec2> random_polygon(std::mt19937_64& rng, int kind) {
  std::uniform_int_distribution<int> count(8, 256);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const int n = count(rng);
  std::vector<double> angles(n);
  for (double& a : angles) a = 2.0 * std::numbers::pi * u(rng);
  std::vector<Vec2> v;
  switch (kind) {
    case 0: {  // star-shaped: simple, usually not convex
      std::sort(angles.begin(), angles.end());
      for (double a : angles) {
        const double r = 0.5 + u(rng);
        v.push_back({r * std::cos(a), r * std::sin(a)});
      }
      break;
    }
    case 1: {  // points on an ellipse in angular order: convex
      std::sort(angles.begin(), angles.end());
      for (double a : angles) v.push_back({2.0 * std::cos(a), std::sin(a)});
      break;
    }
    default: {  // unordered: almost always self-intersecting
      for (double a : angles) v.push_back({std::cos(a) * u(rng), std::sin(a) * u(rng)});
      break;
    }
  }
  return v;
}

TEST(ClosedPolyline, Validation) {
  EXPECT_THROW(ClosedPolyline(regular(7)), Error);
  auto dup = regular(12);
  dup[3] = dup[4];
  EXPECT_THROW(ClosedPolyline{dup}, Error);
  auto bad = regular(12);
  bad[0].x = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(ClosedPolyline{bad}, Error);
}

TEST(Simplicity, Examples) {
  EXPECT_TRUE(is_simple_closed(ClosedPolyline(regular(64))));
  EXPECT_FALSE(is_simple_closed(ClosedPolyline(figure_eight(64))));
  EXPECT_TRUE(is_simple_closed(ClosedPolyline(star(6))));
  EXPECT_TRUE(is_simple_closed(ClosedPolyline(subdivided_square())));
}

TEST(Simplicity, DoublingBackIsNotSimple) {
  std::vector<Vec2> v = {{0, 0}, {1, 0}, {2, 0}, {3, 0}, {2.5, 0}, {2, 1}, {1, 1}, {0, 1}};
  EXPECT_FALSE(is_simple_closed(ClosedPolyline(v)));
}

TEST(Convexity, Examples) {
  EXPECT_TRUE(is_convex(ClosedPolyline(subdivided_square())));
  EXPECT_TRUE(is_convex(ClosedPolyline(regular(64))));
  EXPECT_FALSE(is_convex(ClosedPolyline(star(5))));
  // A convex-looking curve traversed twice turns 4 pi.
  std::vector<Vec2> twice;
  for (int i = 0; i < 17; ++i) {
    const double t = 4.0 * std::numbers::pi * i / 17;
    twice.push_back({std::cos(t), std::sin(t)});
  }
  EXPECT_FALSE(is_convex(ClosedPolyline(twice)));
}

TEST(Convexity, OrientationIndependent) {
  auto v = regular(32);
  std::reverse(v.begin(), v.end());
  EXPECT_TRUE(is_convex(ClosedPolyline(v)));
}

TEST(GeometryOracles, AgreeWithBruteForceOnRandomPolygons) {
  std::mt19937_64 rng(101);
  int simple = 0;
  int convex = 0;
  for (int i = 0; i < 120; ++i) {
    const auto v = random_polygon(rng, i % 3);
    const ClosedPolyline poly(v);
    const bool s = is_simple_closed(poly);
    EXPECT_EQ(s, oracle::brute_force_simple(v)) << "polygon " << i;
    const bool c = is_convex(poly);
    EXPECT_EQ(c, oracle::hull_convex(v)) << "polygon " << i;
    simple += s;
    convex += c;
  }
  EXPECT_GT(simple, 50);
  EXPECT_GT(convex, 30);
  EXPECT_LT(simple, 120);
}

TEST(Winding, Examples) {
  const ClosedPolyline circle(regular(256));
  EXPECT_EQ(winding_number(circle, {0.0, 0.0}), 1);
  EXPECT_EQ(winding_number(circle, {2.0, 0.0}), 0);
  EXPECT_THROW((void)winding_number(circle, circle[5]), Error);
}

TEST(Winding, CyclicRotationAndReversal) {
  std::mt19937_64 rng(103);
  for (int i = 0; i < 20; ++i) {
    auto v = random_polygon(rng, 0);
    const Vec2 p{0.05, -0.03};
    const int w = winding_number(ClosedPolyline(v), p);
    std::rotate(v.begin(), v.begin() + static_cast<long>(v.size() / 3), v.end());
    EXPECT_EQ(winding_number(ClosedPolyline(v), p), w);
    std::reverse(v.begin(), v.end());
    EXPECT_EQ(winding_number(ClosedPolyline(v), p), -w);
  }
}

TEST(Grids, PolarAndLattice) {
  const Disk d({1.0, 2.0}, 0.5);
  const auto g = polar_grid(d, 20);
  EXPECT_EQ(g.size(), 400u);
  for (Vec2 p : g) EXPECT_TRUE(d.contains(p, 1e-12));
  for (Vec2 p : lattice_in_disk(d, 30)) EXPECT_TRUE(d.contains(p, 1e-12));
  EXPECT_THROW(Disk({0, 0}, -1.0), Error);
}

TEST(Injectivity, IdentityAndAffineMaps) {
  const Disk d({0.0, 0.0}, 1.0);
  EXPECT_TRUE(grid_injectivity(PlanarPolyMap::identity(), d, 100).injective);
  std::mt19937_64 rng(107);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int i = 0; i < 5; ++i) {
    const double a = u(rng), b = u(rng), c = u(rng), e = u(rng);
    if (std::abs(a * e - b * c) < 0.05) continue;
    const PlanarPolyMap m{BivariatePoly::from_terms({{1, 0, a}, {0, 1, b}, {0, 0, 1.0}}),
                          BivariatePoly::from_terms({{1, 0, c}, {0, 1, e}})};
    EXPECT_TRUE(grid_injectivity(m, d, 80).injective);
  }
}

TEST(Injectivity, ManySmallCandidatesRejectedForSqueezingMap) {
  // (x^3 + x y^2, y) squeezes the x direction near the origin; the map is injective.
  const BivariatePoly x = BivariatePoly::x();
  const BivariatePoly y = BivariatePoly::y();
  const PlanarPolyMap m{x * (x * x + y * y), y};
  const auto v = grid_injectivity(m, Disk({0.0, 0.0}, 0.5), 120);
  EXPECT_TRUE(v.injective);
}

TEST(Injectivity, FoldingMapCollides) {
  const BivariatePoly x = BivariatePoly::x();
  const BivariatePoly y = BivariatePoly::y();
  const PlanarPolyMap fold{x * x, y};
  const auto v = grid_injectivity(fold, Disk({0.0, 0.0}, 1.0), 60);
  ASSERT_FALSE(v.injective);
  ASSERT_TRUE(v.collision.has_value());
  EXPECT_GT(v.collision->domain_distance, 0.1);
  const Vec2 a = evaluate(fold, v.collision->p);
  const Vec2 b = evaluate(fold, v.collision->q);
  EXPECT_LT(distance(a, b), 1e-9);
}

TEST(Injectivity, RejectsTooCoarseGrid) {
  EXPECT_THROW((void)grid_injectivity(PlanarPolyMap::identity(), Disk({0, 0}, 1.0), 8), Error);
}

TEST(SignField, IdentityAllPositive) {
  const auto s = jacobian_sign_field(PlanarPolyMap::identity(), Disk({0, 0}, 1.0), 50);
  EXPECT_EQ(s.positive, 2500);
  EXPECT_EQ(s.negative, 0);
  EXPECT_EQ(s.near_zero, 0);
}

TEST(CircleImage, IdentityReproducesCircle) {
  const auto pts = circle_image(as_planar_map(PlanarPolyMap::identity()), {1.0, 0.0}, 2.0, 16);
  ASSERT_EQ(pts.size(), 16u);
  EXPECT_NEAR(pts[0].x, 3.0, 1e-15);
  EXPECT_NEAR(pts[4].y, 2.0, 1e-15);
}

TEST(PlanarMap, FiniteDifferenceJacobian) {
  PlanarMap m{[](Vec2 p) { return Vec2{p.x * p.x, p.x * p.y}; }, nullptr};
  const Mat2 j = m.derivative({1.0, 2.0}, 1e-6);
  EXPECT_NEAR(j.a11, 2.0, 1e-8);
  EXPECT_NEAR(j.a12, 0.0, 1e-8);
  EXPECT_NEAR(j.a21, 2.0, 1e-8);
  EXPECT_NEAR(j.a22, 1.0, 1e-8);
}

}  // namespace
}  // namespace interpen
