#include "interpen/harmonic.hpp"

#include <cmath>
#include <memory>
#include <numbers>

#include "interpen/error.hpp"

namespace interpen {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Quadrature {
  std::vector<double> cos_t;
  std::vector<double> sin_t;
  std::vector<Vec2> values;
};

Quadrature make_quadrature(const BoundaryMap& boundary, int n_quad) {
  if (n_quad < kMinQuadrature) {
    throw Error(ErrorCode::ParameterOutOfRange, "Poisson quadrature needs at least 256 nodes");
  }
  Quadrature q;
  q.values = boundary.table(n_quad);
  q.cos_t.resize(static_cast<std::size_t>(n_quad));
  q.sin_t.resize(static_cast<std::size_t>(n_quad));
  for (int j = 0; j < n_quad; ++j) {
    const double t = kTwoPi * j / n_quad;
    q.cos_t[j] = std::cos(t);
    q.sin_t[j] = std::sin(t);
  }
  return q;
}

Vec2 integrate(const Quadrature& q, Vec2 point) {
  const double r = norm(point);
  if (r > kMaxInteriorRadius) {
    throw Error(ErrorCode::TooCloseToBoundary, "Poisson extension is limited to |z| <= 0.999");
  }
  const double r2 = r * r;
  // 1 - 2 r cos(phi - t) + r^2 with r cos(phi - t) = x cos t + y sin t
  double sx = 0.0, sy = 0.0;
  const std::size_t n = q.values.size();
  for (std::size_t j = 0; j < n; ++j) {
    const double proj = point.x * q.cos_t[j] + point.y * q.sin_t[j];
    const double kernel = (1.0 - r2) / (1.0 - 2.0 * proj + r2);
    sx += kernel * q.values[j].x;
    sy += kernel * q.values[j].y;
  }
  const double w = 1.0 / static_cast<double>(n);
  return {sx * w, sy * w};
}

}  // namespace

BoundaryMap::BoundaryMap(Sampler sampler, int n) : sampler_(std::move(sampler)) {
  samples_ = table(n);
}

std::vector<Vec2> BoundaryMap::table(int n) const {
  if (!samples_.empty() && static_cast<int>(samples_.size()) == n) return samples_;
  std::vector<Vec2> out;
  out.reserve(static_cast<std::size_t>(std::max(n, 0)));
  for (int j = 0; j < n; ++j) out.push_back(sampler_(kTwoPi * j / n));
  return out;
}

BoundaryMap BoundaryMap::polygon(std::vector<Vec2> vertices, int n) {
  if (vertices.size() < 3) {
    throw Error(ErrorCode::DegenerateInput, "boundary polygon needs at least 3 vertices");
  }
  std::vector<double> cumulative(vertices.size() + 1, 0.0);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    cumulative[i + 1] = cumulative[i] + distance(vertices[i], vertices[(i + 1) % vertices.size()]);
  }
  const double perimeter = cumulative.back();
  if (!(perimeter > 0.0)) {
    throw Error(ErrorCode::DegenerateInput, "boundary polygon has zero perimeter");
  }
  auto shared = std::make_shared<const std::pair<std::vector<Vec2>, std::vector<double>>>(
      std::move(vertices), std::move(cumulative));
  Sampler sampler = [shared, perimeter](double t) {
    const auto& [verts, cum] = *shared;
    double s = std::fmod(t / kTwoPi, 1.0);
    if (s < 0.0) s += 1.0;
    s *= perimeter;
    std::size_t i = 0;
    while (i + 1 < verts.size() && cum[i + 1] <= s) ++i;
    const double len = cum[i + 1] - cum[i];
    const double f = len > 0.0 ? (s - cum[i]) / len : 0.0;
    const Vec2 a = verts[i];
    const Vec2 b = verts[(i + 1) % verts.size()];
    return a + f * (b - a);
  };
  return BoundaryMap(std::move(sampler), n);
}

BoundaryMap BoundaryMap::identity(int n) {
  return BoundaryMap([](double t) { return Vec2{std::cos(t), std::sin(t)}; }, n);
}

Vec2 poisson_extend(const BoundaryMap& boundary, Vec2 point, int n_quad) {
  return integrate(make_quadrature(boundary, n_quad), point);
}

PlanarMap harmonic_extension(const BoundaryMap& boundary, int n_quad) {
  auto q = std::make_shared<const Quadrature>(make_quadrature(boundary, n_quad));
  return {[q](Vec2 p) { return integrate(*q, p); }, {}};
}

RkcDemoResult rkc_demo(const BoundaryMap& boundary, int grid_n) {
  RkcDemoResult result;
  const ClosedPolyline curve(boundary.samples());
  result.boundary_convex = is_simple_closed(curve) && is_convex(curve);
  if (!result.boundary_convex) {
    throw Error(ErrorCode::NonConvexBoundary, "boundary curve is not a simple convex curve");
  }
  const int n_quad = std::max(static_cast<int>(boundary.samples().size()), kMinQuadrature);
  result.verdict =
      grid_injectivity(harmonic_extension(boundary, n_quad), Disk({0.0, 0.0}, kDemoRadius), grid_n);
  return result;
}

}  // namespace interpen
