#pragma once

#include <optional>
#include <vector>

#include "interpen/algebra.hpp"
#include "interpen/geometry.hpp"
#include "interpen/poly.hpp"
#include "interpen/synthesis.hpp"

namespace interpen {

// Center image w = M^-1 R_{-theta} u(0,0) against the strip (1-sqrt5)/2 <= w1 <= (1+sqrt5)/2.
struct StripCertificate {
  double w1 = 0.0;
  double bound = 0.0;  // lower edge of the strip
  bool violated = false;
  bool boundary_in_strip = false;
  double boundary_w1_min = 0.0;
  double boundary_w1_max = 0.0;
};

struct CertificateSet {
  bool boundary_simple = false;
  bool boundary_convex = false;
  StripCertificate strip;
  bool jacobian_center_zero = false;
  // max coefficient deviation of det Du from 2kx + 2(b(x^2-y^2) + (c-a)xy)
  double jacobian_formula_error = 0.0;
  SignCounts jacobian_signs;
  std::optional<CollisionPair> fold_pair;

  // Every certificate needed to conclude that u is not a homeomorphism of B onto D.
  [[nodiscard]] bool all_pass() const noexcept;
};

struct RkcOptions {
  int boundary_samples = 4096;
  int sign_grid = 200;
  int fold_grid = 200;
};

struct RkcBundle {
  EllipticSystem system;
  QuadraticSolution solution;  // theta and p = (a x^2 + 2bxy + c y^2) / 2
  double k = 1.0;
  Disk disk;                   // center (1/2, 0), radius sqrt(5)/2
  PlanarPolyMap map;           // R_theta (x^2 + y^2 - 1, k y + p)
  RkcOptions options;
  std::vector<Vec2> boundary_samples;  // Phi(dB) = R_theta M Psi(dB)
  CertificateSet certificates;
};

[[nodiscard]] Disk rkc_disk();

// R_theta (x^2 + y^2 - 1, k y + p).
[[nodiscard]] PlanarPolyMap rkc_map(const QuadraticSolution& sol, double k);

// Phi(t) = R_theta (x, k y + p(x, y)) at x = 1/2 + sqrt5/2 cos t, y = sqrt5/2 sin t.
[[nodiscard]] std::vector<Vec2> rkc_boundary(const QuadraticSolution& sol, double k, int n);

// Smallest k (to bisection accuracy) for which the sampled Psi(dB) is convex.
[[nodiscard]] double convexity_threshold_k(const QuadraticSolution& sol, int n = 4096);

// max(|b| + max(1e-3 |b|, 1e-3), 1.001 * convexity threshold); 1 stands in for |b| + ... when b = 0.
[[nodiscard]] double default_k(const QuadraticSolution& sol, int n = 4096);

// Throws NotElliptic, Diagonalizable, KTooSmall (k < |b| or k == 0), IllConditioned.
[[nodiscard]] RkcBundle build_rkc_counterexample(const EllipticSystem& system,
                                                 std::optional<double> k = std::nullopt,
                                                 const RkcOptions& options = {});

[[nodiscard]] StripCertificate strip_certificate(const RkcBundle& bundle);

struct NodalConic {
  enum class Kind { Hyperbola, LinePair, Line };

  Kind kind = Kind::Hyperbola;
  double k = 0.0;
  double b = 0.0;
  double c_minus_a = 0.0;

  // k x + b (x^2 - y^2) + (c - a) x y
  [[nodiscard]] double operator()(Vec2 p) const noexcept {
    return k * p.x + b * (p.x * p.x - p.y * p.y) + c_minus_a * p.x * p.y;
  }
  // Points of the component through the origin, parametrized by y, clipped to the disk.
  [[nodiscard]] std::vector<Vec2> branch_through_origin(const Disk& disk, int n) const;
};

[[nodiscard]] NodalConic nodal_conic(double a, double b, double c, double k);

// Deterministic lattice search for a doubly covered image point.
[[nodiscard]] std::optional<CollisionPair> fold_search(const PlanarPolyMap& map, const Disk& disk,
                                                       int grid_n);
[[nodiscard]] std::optional<CollisionPair> fold_certificate(const RkcBundle& bundle, int grid_n);

// Recomputes every certificate from the bundle's map and boundary samples.
[[nodiscard]] CertificateSet compute_rkc_certificates(const RkcBundle& bundle,
                                                      const RkcOptions& options = {});

}  // namespace interpen
