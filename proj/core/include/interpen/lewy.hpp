#pragma once

#include <cstdint>
#include <vector>

#include "interpen/algebra.hpp"
#include "interpen/geometry.hpp"
#include "interpen/poly.hpp"
#include "interpen/synthesis.hpp"

namespace interpen {

// Interior probe points of a disk from a seeded additive-recurrence (R2) sequence.
[[nodiscard]] std::vector<Vec2> probe_points(const Disk& disk, int count, std::uint64_t seed,
                                             double radius_fraction = 0.95);

struct HomeomorphismCertificate {
  bool boundary_simple = false;
  bool winding_ok = false;
  int probes = 0;
  int winding_min = 0;
  int winding_max = 0;
  bool grid_injective = false;

  [[nodiscard]] bool all_pass() const noexcept {
    return boundary_simple && winding_ok && grid_injective;
  }
};

struct LewyCertificates {
  bool center_jacobian_zero = false;
  bool punctured_positivity = false;
  SignCounts punctured_signs;
  double ineq_b = 0.0;  // 2 + b rho^2
  double ineq_d = 0.0;  // 3 + d rho^2
  bool inequalities_ok = false;  // both at least 10% of their constant term
  HomeomorphismCertificate homeomorphism;

  [[nodiscard]] bool all_pass() const noexcept {
    return center_jacobian_zero && punctured_positivity && inequalities_ok &&
           homeomorphism.all_pass();
  }
};

struct LewyOptions {
  int boundary_samples = 4096;
  int n_probe = 100;
  int positivity_grid = 120;
  std::uint64_t seed = 0;
};

struct LewyBundle {
  EllipticSystem system;
  CubicSolution solution;
  double r = 0.0;
  double rho = 0.0;
  double rho_inequality = 0.0;  // +inf when b, d >= 0
  PlanarPolyMap map;            // R_theta (x (x^2 + y^2), y + q)
  LewyOptions options;
  std::vector<Vec2> boundary_samples;  // u on the circle of radius rho
  LewyCertificates certificates;

  [[nodiscard]] Disk disk() const { return Disk({0.0, 0.0}, rho); }
};

// R_theta (x (x^2 + y^2), y + q).
[[nodiscard]] PlanarPolyMap lewy_map(const CubicSolution& sol);

// Largest radius on the schedule 1, 0.9, 0.81, ... with det Du > 0 on a 720 x 50 polar grid of
// the punctured disk, times a 0.9 safety factor. Throws NoPositiveRadius.
[[nodiscard]] double find_positivity_radius(const PlanarPolyMap& map);

// Largest rho with 2 + b rho^2 > 0 and 3 + d rho^2 > 0 (+inf when b, d >= 0).
[[nodiscard]] double inequality_radius(double b, double d);

// Throws NotElliptic, Diagonalizable, IllConditioned, NoPositiveRadius.
[[nodiscard]] LewyBundle build_lewy_counterexample(const EllipticSystem& system,
                                                   const LewyOptions& options = {});

// Boundary simplicity, winding number +1 around n_probe interior images, and grid injectivity
// at resolution n_probe. Failures are reported, not thrown.
[[nodiscard]] HomeomorphismCertificate homeomorphism_certificate(const PlanarPolyMap& map,
                                                                 const Disk& disk,
                                                                 const std::vector<Vec2>& boundary,
                                                                 int n_probe,
                                                                 std::uint64_t seed = 0);
[[nodiscard]] HomeomorphismCertificate homeomorphism_certificate(const LewyBundle& bundle,
                                                                 int n_probe,
                                                                 std::uint64_t seed = 0);

[[nodiscard]] LewyCertificates compute_lewy_certificates(const LewyBundle& bundle,
                                                         const LewyOptions& options = {});

}  // namespace interpen
