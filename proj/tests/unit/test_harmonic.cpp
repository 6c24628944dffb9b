#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "interpen/error.hpp"
#include "interpen/harmonic.hpp"
#include "interpen/predicates.hpp"

namespace interpen {
namespace {

const std::vector<Vec2> kQuad = {{1.0, 0.0}, {0.2, 0.9}, {-1.0, 0.3}, {-0.3, -0.8}};

std::vector<Vec2> disk_points(int n, double rmax, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Vec2> out;
  for (int i = 0; i < n; ++i) {
    const double r = rmax * std::sqrt(u(rng));
    const double t = 2.0 * std::numbers::pi * u(rng);
    out.push_back({r * std::cos(t), r * std::sin(t)});
  }
  return out;
}

TEST(Poisson, ConstantBoundary) {
  const BoundaryMap b([](double) { return Vec2{2.5, -1.0}; }, 512);
  for (Vec2 p : disk_points(20, 0.95, 1)) {
    const Vec2 v = poisson_extend(b, p, 512);
    EXPECT_NEAR(v.x, 2.5, 1e-12);
    EXPECT_NEAR(v.y, -1.0, 1e-12);
  }
}

TEST(Poisson, IdentityReproduced) {
  const auto b = BoundaryMap::identity(4096);
  for (Vec2 p : disk_points(50, 0.9, 2)) {
    const Vec2 v = poisson_extend(b, p, 4096);
    EXPECT_NEAR(v.x, p.x, 1e-6);
    EXPECT_NEAR(v.y, p.y, 1e-6);
  }
}

TEST(Poisson, MeanValueProperty) {
  const auto b = BoundaryMap::polygon(kQuad, 4096);
  Vec2 mean{0.0, 0.0};
  for (Vec2 s : b.table(4096)) mean = mean + (1.0 / 4096.0) * s;
  const Vec2 v = poisson_extend(b, {0.0, 0.0}, 4096);
  EXPECT_NEAR(v.x, mean.x, 1e-8);
  EXPECT_NEAR(v.y, mean.y, 1e-8);
}

TEST(Poisson, HarmonicPolynomialsReproduced) {
  const BoundaryMap b(
      [](double t) {
        const double c = std::cos(t);
        const double s = std::sin(t);
        return Vec2{c * c - s * s, 2.0 * c * s};
      },
      4096);
  for (Vec2 p : disk_points(50, 0.9, 3)) {
    const Vec2 v = poisson_extend(b, p, 4096);
    EXPECT_NEAR(v.x, p.x * p.x - p.y * p.y, 1e-6);
    EXPECT_NEAR(v.y, 2.0 * p.x * p.y, 1e-6);
  }
}

TEST(Poisson, MaximumPrincipleForConvexTarget) {
  const auto b = BoundaryMap::polygon(kQuad, 2048);
  for (Vec2 p : disk_points(200, 0.98, 4)) {
    const Vec2 v = poisson_extend(b, p, 2048);
    for (std::size_t i = 0; i < kQuad.size(); ++i) {
      EXPECT_EQ(orient2d(kQuad[i], kQuad[(i + 1) % kQuad.size()], v), 1);
    }
  }
}

TEST(Poisson, Preconditions) {
  const auto b = BoundaryMap::identity(512);
  EXPECT_THROW((void)poisson_extend(b, {0.9995, 0.0}, 512), Error);
  EXPECT_THROW((void)poisson_extend(b, {0.0, 0.0}, 128), Error);
  EXPECT_THROW((void)BoundaryMap::polygon({{0, 0}, {1, 0}}, 64), Error);
}

TEST(Poisson, ExtensionMatchesPointwise) {
  const auto b = BoundaryMap::polygon(kQuad, 1024);
  const PlanarMap h = harmonic_extension(b, 1024);
  for (Vec2 p : disk_points(20, 0.95, 5)) {
    const Vec2 a = h(p);
    const Vec2 c = poisson_extend(b, p, 1024);
    EXPECT_NEAR(a.x, c.x, 1e-13);
    EXPECT_NEAR(a.y, c.y, 1e-13);
  }
}

TEST(RkcDemo, ConvexQuadrilateralIsInjective) {
  const auto r = rkc_demo(BoundaryMap::polygon(kQuad, 1024), 200);
  EXPECT_TRUE(r.boundary_convex);
  EXPECT_TRUE(r.verdict.injective);
}

TEST(RkcDemo, IdentityBoundaryIsInjective) {
  EXPECT_TRUE(rkc_demo(BoundaryMap::identity(1024), 100).verdict.injective);
}

TEST(RkcDemo, NonConvexBoundaryRejected) {
  const std::vector<Vec2> dart = {{1.0, 0.0}, {-1.0, 1.0}, {-0.2, 0.0}, {-1.0, -1.0}};
  try {
    (void)rkc_demo(BoundaryMap::polygon(dart, 1024), 50);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonConvexBoundary);
  }
}

}  // namespace
}  // namespace interpen
