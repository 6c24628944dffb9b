#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "interpen/poly.hpp"
#include "interpen/vec2.hpp"

namespace interpen {

struct Disk {
  Vec2 center;
  double radius = 1.0;

  Disk() = default;
  // Throws ParameterOutOfRange for a non-positive or non-finite radius.
  Disk(Vec2 c, double r);

  [[nodiscard]] bool contains(Vec2 p, double slack = 0.0) const noexcept {
    return distance(p, center) <= radius + slack;
  }
};

// Closed polygonal curve; the last vertex connects back to the first.
class ClosedPolyline {
 public:
  static constexpr std::size_t kMinVertices = 8;

  // Throws DegenerateInput for fewer than 8 vertices, non-finite or repeated consecutive vertices.
  explicit ClosedPolyline(std::vector<Vec2> vertices);

  [[nodiscard]] std::span<const Vec2> vertices() const noexcept { return vertices_; }
  [[nodiscard]] std::size_t size() const noexcept { return vertices_.size(); }
  [[nodiscard]] Vec2 operator[](std::size_t i) const noexcept { return vertices_[i % size()]; }
  // Diagonal of the bounding box.
  [[nodiscard]] double scale() const noexcept;

 private:
  std::vector<Vec2> vertices_;
};

// No two non-adjacent edges meet and no adjacent pair doubles back.
[[nodiscard]] bool is_simple_closed(const ClosedPolyline& polyline);

inline constexpr double kFlatTurnTolerance = 1e-12;

// All consecutive turns share one sign (near-flat turns accepted) and the curve turns once.
[[nodiscard]] bool is_convex(const ClosedPolyline& polyline);

// Throws PointOnCurve when the point is within 1e-9 * scale of the curve.
[[nodiscard]] int winding_number(const ClosedPolyline& polyline, Vec2 point);

// A plane map with an optional analytic Jacobian (central differences otherwise).
struct PlanarMap {
  std::function<Vec2(Vec2)> value;
  std::function<Mat2(Vec2)> jacobian;

  [[nodiscard]] Vec2 operator()(Vec2 p) const { return value(p); }
  [[nodiscard]] Mat2 derivative(Vec2 p, double step) const;
};

[[nodiscard]] PlanarMap as_planar_map(const PlanarPolyMap& map);

// n radii (R (i + 1) / n) times n angles (2 pi j / n); the centre is not included.
[[nodiscard]] std::vector<Vec2> polar_grid(const Disk& disk, int n);
// Cartesian n x n lattice over the bounding square, restricted to the closed disk.
[[nodiscard]] std::vector<Vec2> lattice_in_disk(const Disk& disk, int n);

struct CollisionPair {
  Vec2 p;
  Vec2 q;
  double image_distance = 0.0;
  double domain_distance = 0.0;
};

struct CollisionSearch {
  std::optional<CollisionPair> pair;
  // Near-coincident grid pairs whose Newton refinement did not land on a distinct preimage.
  int rejected_candidates = 0;
  double image_diameter = 0.0;
};

// Searches sampled points for two far-apart domain points with (numerically) equal images.
// Candidate pairs are those with image distance below candidate_radius; each is confirmed by
// Newton-solving map(q) = map(p) from the candidate q, requiring the converged q to stay in the
// disk and at least disk.radius / 10 from p.
[[nodiscard]] CollisionSearch search_collision(const PlanarMap& map, std::span<const Vec2> samples,
                                               const Disk& disk, double candidate_radius);

struct InjectivityVerdict {
  bool injective = true;
  std::optional<CollisionPair> collision;
  int rejected_candidates = 0;
};

// Polar n x n sample; candidates at image distance < diameter / (10 n). Requires n >= 16.
[[nodiscard]] InjectivityVerdict grid_injectivity(const PlanarMap& map, const Disk& disk, int n);
[[nodiscard]] InjectivityVerdict grid_injectivity(const PlanarPolyMap& map, const Disk& disk, int n);

struct SignCounts {
  int positive = 0;
  int negative = 0;
  int near_zero = 0;
};

// det Du on the polar n x n grid, with |det| <= 1e-10 max|det| counted as near zero.
[[nodiscard]] SignCounts jacobian_sign_field(const PlanarPolyMap& map, const Disk& disk, int n);

// Polyline through map(center + r (cos t, sin t)) at n uniform angles.
[[nodiscard]] std::vector<Vec2> circle_image(const PlanarMap& map, Vec2 center, double radius,
                                             int n);

}  // namespace interpen
