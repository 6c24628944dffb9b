#pragma once

#include <functional>
#include <vector>

#include "interpen/geometry.hpp"
#include "interpen/vec2.hpp"

namespace interpen {

// Boundary data on the unit circle, t in [0, 2 pi), with a cached uniform sample table.
class BoundaryMap {
 public:
  using Sampler = std::function<Vec2(double)>;

  BoundaryMap(Sampler sampler, int n);

  // Arc-length-proportional parametrization of a closed polygon, starting at vertices[0].
  // Throws DegenerateInput for fewer than 3 vertices or zero perimeter.
  [[nodiscard]] static BoundaryMap polygon(std::vector<Vec2> vertices, int n);
  // The identity on the unit circle.
  [[nodiscard]] static BoundaryMap identity(int n);

  [[nodiscard]] Vec2 operator()(double t) const { return sampler_(t); }
  [[nodiscard]] const std::vector<Vec2>& samples() const noexcept { return samples_; }
  // Uniform table of n samples (the cached one when n matches).
  [[nodiscard]] std::vector<Vec2> table(int n) const;

 private:
  Sampler sampler_;
  std::vector<Vec2> samples_;
};

inline constexpr int kMinQuadrature = 256;
inline constexpr double kMaxInteriorRadius = 0.999;

// Trapezoidal Poisson integral on the unit disk.
// Throws TooCloseToBoundary for |point| > 0.999, ParameterOutOfRange for n_quad < 256.
[[nodiscard]] Vec2 poisson_extend(const BoundaryMap& boundary, Vec2 point, int n_quad);

// The harmonic extension as a reusable plane map (quadrature nodes precomputed).
[[nodiscard]] PlanarMap harmonic_extension(const BoundaryMap& boundary, int n_quad);

struct RkcDemoResult {
  bool boundary_convex = false;
  InjectivityVerdict verdict;
};

inline constexpr double kDemoRadius = 0.99;

// Checks the boundary curve, extends harmonically, and probes injectivity on a
// grid_n x grid_n polar grid of the disk of radius 0.99. Throws NonConvexBoundary.
[[nodiscard]] RkcDemoResult rkc_demo(const BoundaryMap& boundary, int grid_n);

}  // namespace interpen
