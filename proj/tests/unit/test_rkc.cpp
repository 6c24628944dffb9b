#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "interpen/error.hpp"
#include "interpen/rkc.hpp"
#include "oracles.hpp"

namespace interpen {
namespace {

const double kFigureK = 2.0 * (1.0 + std::sqrt(10.0));

class RkcLame : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    bundle_ = new RkcBundle(build_rkc_counterexample(lame(1.0, 1.0), kFigureK));
  }
  static void TearDownTestSuite() {
    delete bundle_;
    bundle_ = nullptr;
  }
  static const RkcBundle& bundle() { return *bundle_; }

 private:
  static inline RkcBundle* bundle_ = nullptr;
};

TEST_F(RkcLame, AllCertificatesPass) {
  const auto& c = bundle().certificates;
  EXPECT_TRUE(c.boundary_simple);
  EXPECT_TRUE(c.boundary_convex);
  EXPECT_TRUE(c.strip.violated);
  EXPECT_TRUE(c.strip.boundary_in_strip);
  EXPECT_TRUE(c.jacobian_center_zero);
  EXPECT_LE(c.jacobian_formula_error, 1e-12);
  EXPECT_GT(c.jacobian_signs.positive, 0);
  EXPECT_GT(c.jacobian_signs.negative, 0);
  ASSERT_TRUE(c.fold_pair.has_value());
  EXPECT_TRUE(c.all_pass());
}

TEST_F(RkcLame, StripCenterImageIsMinusOne) {
  const auto s = strip_certificate(bundle());
  EXPECT_NEAR(s.w1, -1.0, 1e-12);
  EXPECT_NEAR(s.bound, 0.5 * (1.0 - std::sqrt(5.0)), 1e-15);
  EXPECT_NEAR(s.boundary_w1_min, 0.5 * (1.0 - std::sqrt(5.0)), 1e-12);
  EXPECT_NEAR(s.boundary_w1_max, 0.5 * (1.0 + std::sqrt(5.0)), 1e-12);
}

TEST_F(RkcLame, TranslatedMapLeavesStripUnviolated) {
  RkcBundle moved = bundle();
  const Vec2 shift = rotation(moved.solution.theta) * Vec2{1.5, 0.0};
  moved.map.u1 += BivariatePoly::constant(shift.x);
  moved.map.u2 += BivariatePoly::constant(shift.y);
  EXPECT_FALSE(strip_certificate(moved).violated);
}

TEST_F(RkcLame, BoundaryIdentityOnDiskBoundary) {
  const Disk d = bundle().disk;
  for (int i = 0; i < 64; ++i) {
    const double t = 2.0 * std::numbers::pi * i / 64;
    const double x = d.center.x + d.radius * std::cos(t);
    const double y = d.center.y + d.radius * std::sin(t);
    EXPECT_NEAR(x, -1.0 + x * x + y * y, 1e-14);
  }
}

TEST_F(RkcLame, BoundarySamplesAreMapValuesOnBoundary) {
  const Disk d = bundle().disk;
  const auto& b = bundle().boundary_samples;
  ASSERT_EQ(b.size(), 4096u);
  for (std::size_t i = 0; i < b.size(); i += 97) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(i) / 4096.0;
    const Vec2 p{d.center.x + d.radius * std::cos(t), d.radius * std::sin(t)};
    EXPECT_LT(distance(evaluate(bundle().map, p), b[i]), 1e-12 * (1.0 + kFigureK));
  }
}

TEST_F(RkcLame, ResidualVanishes) {
  EXPECT_LE(relative_residual(bundle().system, bundle().map), kResidualTolerance);
}

TEST_F(RkcLame, JacobianSignTriple) {
  const auto& s = bundle().solution;
  const auto conic = nodal_conic(s.a, s.b, s.c, bundle().k);
  EXPECT_EQ(conic.kind, NodalConic::Kind::Hyperbola);
  EXPECT_GT(conic({1.0, 0.0}), 0.0);
  EXPECT_EQ(conic({0.0, 0.0}), 0.0);
  EXPECT_LT(conic({-1.0, 0.0}), 0.0);
}

TEST_F(RkcLame, NodalBranchLiesOnConicInsideDisk) {
  const auto& s = bundle().solution;
  const auto conic = nodal_conic(s.a, s.b, s.c, bundle().k);
  const auto branch = conic.branch_through_origin(bundle().disk, 200);
  ASSERT_GT(branch.size(), 20u);
  for (Vec2 p : branch) {
    EXPECT_NEAR(conic(p), 0.0, 1e-12 * (1.0 + bundle().k));
    EXPECT_TRUE(bundle().disk.contains(p));
  }
}

TEST_F(RkcLame, NoFoldOnSubDiskOnOneSideOfNodalLine) {
  const Disk right({0.9, 0.0}, 0.3);
  const auto& s = bundle().solution;
  const auto conic = nodal_conic(s.a, s.b, s.c, bundle().k);
  for (Vec2 p : lattice_in_disk(right, 40)) EXPECT_GT(conic(p), 0.0);
  EXPECT_FALSE(fold_search(bundle().map, right, 100).has_value());
}

TEST_F(RkcLame, FoldPairHasEqualImages) {
  const auto& f = *bundle().certificates.fold_pair;
  EXPECT_GT(f.domain_distance, bundle().disk.radius / 10);
  EXPECT_LT(distance(evaluate(bundle().map, f.p), evaluate(bundle().map, f.q)), 1e-9);
  EXPECT_TRUE(bundle().disk.contains(f.p, 1e-12));
  EXPECT_TRUE(bundle().disk.contains(f.q, 1e-12));
}

TEST_F(RkcLame, GridInjectivityFindsInterpenetration) {
  const auto v = grid_injectivity(bundle().map, bundle().disk, 200);
  EXPECT_FALSE(v.injective);
  ASSERT_TRUE(v.collision.has_value());
}

TEST(RkcThreshold, ConvexityThresholdMatchesClosedForm) {
  const auto sol = synthesize_quadratic(lame(1.0, 1.0));
  const double t = convexity_threshold_k(sol, 4096);
  // Sampled threshold approaches (1 + sqrt 10)|b| / 2 from below as N grows.
  EXPECT_NEAR(t, kFigureK, 1e-5 * kFigureK);
  EXPECT_LE(t, kFigureK);
}

TEST(RkcThreshold, ConvexityFailsAtHalfAndAtAbsB) {
  const auto sol = synthesize_quadratic(lame(1.0, 1.0));
  const double b = std::abs(sol.b);
  for (double k : {0.5 * b, b}) {
    const auto samples = rkc_boundary(sol, k, 4096);
    EXPECT_FALSE(is_convex(ClosedPolyline(samples))) << "k = " << k;
  }
}

TEST(RkcThreshold, DefaultK) {
  const auto sol = synthesize_quadratic(lame(1.0, 1.0));
  const double k = default_k(sol);
  EXPECT_GE(k, std::abs(sol.b) + 1e-3 * std::abs(sol.b));
  EXPECT_NEAR(k, 1.001 * convexity_threshold_k(sol), 1e-9 * k);
  const auto bundle = build_rkc_counterexample(lame(1.0, 1.0));
  EXPECT_DOUBLE_EQ(bundle.k, k);
  EXPECT_TRUE(bundle.certificates.all_pass());
}

TEST(RkcBuild, PerturbedLaplacian) {
  const auto bundle = build_rkc_counterexample(perturbed_laplacian(1.0));
  EXPECT_TRUE(bundle.certificates.all_pass());
}

TEST(RkcBuild, Errors) {
  EXPECT_THROW((void)build_rkc_counterexample(laplacian()), Error);
  try {
    (void)build_rkc_counterexample(laplacian());
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Diagonalizable);
  }
  try {
    (void)build_rkc_counterexample(lame(1.0, 1.0), 3.0);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::KTooSmall);
  }
  try {
    (void)build_rkc_counterexample(lame(1.0, 1.0), std::nan(""));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonFiniteInput);
  }
}

TEST(RkcBuild, AtAbsBTheBoundaryIsNotConvex) {
  const auto bundle = build_rkc_counterexample(lame(1.0, 1.0), 4.0);
  EXPECT_FALSE(bundle.certificates.boundary_simple);
  EXPECT_FALSE(oracle::brute_force_simple(bundle.boundary_samples));
  EXPECT_FALSE(bundle.certificates.boundary_convex);
  EXPECT_FALSE(bundle.certificates.all_pass());
}

TEST(NodalConic, Classification) {
  const auto line = nodal_conic(0.0, 0.0, 0.0, 1.0);
  EXPECT_EQ(line.kind, NodalConic::Kind::Line);
  for (Vec2 p : line.branch_through_origin(Disk({0, 0}, 1.0), 20)) EXPECT_EQ(p.x, 0.0);
  const auto hyp = nodal_conic(0.0, 1.0, 0.0, 2.0);
  EXPECT_EQ(hyp.kind, NodalConic::Kind::Hyperbola);
  EXPECT_EQ(hyp({0.0, 0.0}), 0.0);
  // 3x3 conic determinant b k^2 / 4 is nonzero and the quadratic part is indefinite.
  EXPECT_LT(hyp.b * -hyp.b - 0.25 * hyp.c_minus_a * hyp.c_minus_a, 0.0);
  EXPECT_EQ(nodal_conic(1.0, 0.0, 2.0, 1.0).kind, NodalConic::Kind::LinePair);
}

TEST(Fold, IdentityMapHasNone) {
  EXPECT_FALSE(fold_search(PlanarPolyMap::identity(), rkc_disk(), 100).has_value());
}

}  // namespace
}  // namespace interpen
