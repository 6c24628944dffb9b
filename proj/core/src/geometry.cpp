#include "interpen/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>
#include <unordered_map>

#include "interpen/error.hpp"
#include "interpen/predicates.hpp"

namespace interpen {

Disk::Disk(Vec2 c, double r) : center(c), radius(r) {
  if (!(r > 0.0) || !std::isfinite(r) || !std::isfinite(c.x) || !std::isfinite(c.y)) {
    throw Error(ErrorCode::ParameterOutOfRange, "disk radius must be positive and finite");
  }
}

ClosedPolyline::ClosedPolyline(std::vector<Vec2> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < kMinVertices) {
    throw Error(ErrorCode::DegenerateInput, "closed polyline needs at least 8 vertices, got " +
                                                std::to_string(vertices_.size()));
  }
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const Vec2 v = vertices_[i];
    if (!std::isfinite(v.x) || !std::isfinite(v.y)) {
      throw Error(ErrorCode::DegenerateInput, "non-finite vertex");
    }
    if (v == vertices_[(i + 1) % vertices_.size()]) {
      throw Error(ErrorCode::DegenerateInput, "repeated vertex at index " + std::to_string(i));
    }
  }
}

double ClosedPolyline::scale() const noexcept {
  double xmin = vertices_[0].x, xmax = xmin, ymin = vertices_[0].y, ymax = ymin;
  for (Vec2 v : vertices_) {
    xmin = std::min(xmin, v.x);
    xmax = std::max(xmax, v.x);
    ymin = std::min(ymin, v.y);
    ymax = std::max(ymax, v.y);
  }
  return std::hypot(xmax - xmin, ymax - ymin);
}

namespace {

bool on_segment_collinear(Vec2 a, Vec2 b, Vec2 p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

// Closed segments [p1, p2] and [p3, p4] share a point.
bool segments_meet(Vec2 p1, Vec2 p2, Vec2 p3, Vec2 p4) {
  const int o1 = orient2d(p1, p2, p3);
  const int o2 = orient2d(p1, p2, p4);
  const int o3 = orient2d(p3, p4, p1);
  const int o4 = orient2d(p3, p4, p2);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  if (o1 == 0 && on_segment_collinear(p1, p2, p3)) return true;
  if (o2 == 0 && on_segment_collinear(p1, p2, p4)) return true;
  if (o3 == 0 && on_segment_collinear(p3, p4, p1)) return true;
  if (o4 == 0 && on_segment_collinear(p3, p4, p2)) return true;
  return false;
}

}  // namespace

bool is_simple_closed(const ClosedPolyline& poly) {
  const std::size_t n = poly.size();

  // Adjacent edges share a vertex; they only overlap when the path doubles back on itself.
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = poly[i], b = poly[i + 1], c = poly[i + 2];
    if (orient2d(a, b, c) == 0 && dot_sign(b, a, c) > 0) return false;
  }

  // Uniform-grid broad phase over edge bounding boxes.
  double xmin = poly[0].x, xmax = xmin, ymin = poly[0].y, ymax = ymin;
  for (Vec2 v : poly.vertices()) {
    xmin = std::min(xmin, v.x);
    xmax = std::max(xmax, v.x);
    ymin = std::min(ymin, v.y);
    ymax = std::max(ymax, v.y);
  }
  const int cells = std::max(1, static_cast<int>(std::sqrt(static_cast<double>(n))));
  const double wx = std::max(xmax - xmin, std::numeric_limits<double>::min()) / cells;
  const double wy = std::max(ymax - ymin, std::numeric_limits<double>::min()) / cells;
  const auto cell_x = [&](double x) {
    return std::clamp(static_cast<int>((x - xmin) / wx), 0, cells - 1);
  };
  const auto cell_y = [&](double y) {
    return std::clamp(static_cast<int>((y - ymin) / wy), 0, cells - 1);
  };

  std::vector<std::vector<std::size_t>> buckets(static_cast<std::size_t>(cells) * cells);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = poly[i], b = poly[i + 1];
    // One cell of padding absorbs the truncation in cell_x / cell_y.
    const int x0 = std::max(0, cell_x(std::min(a.x, b.x)) - 1);
    const int x1 = std::min(cells - 1, cell_x(std::max(a.x, b.x)) + 1);
    const int y0 = std::max(0, cell_y(std::min(a.y, b.y)) - 1);
    const int y1 = std::min(cells - 1, cell_y(std::max(a.y, b.y)) + 1);
    for (int cx = x0; cx <= x1; ++cx) {
      for (int cy = y0; cy <= y1; ++cy) buckets[static_cast<std::size_t>(cx) * cells + cy].push_back(i);
    }
  }

  for (const auto& bucket : buckets) {
    for (std::size_t s = 0; s < bucket.size(); ++s) {
      for (std::size_t t = s + 1; t < bucket.size(); ++t) {
        const std::size_t i = std::min(bucket[s], bucket[t]);
        const std::size_t j = std::max(bucket[s], bucket[t]);
        if (j == i + 1 || (i == 0 && j == n - 1)) continue;
        if (segments_meet(poly[i], poly[i + 1], poly[j], poly[j + 1])) return false;
      }
    }
  }
  return true;
}

bool is_convex(const ClosedPolyline& poly) {
  const std::size_t n = poly.size();
  int sign = 0;
  double turning = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 e1 = poly[i + 1] - poly[i];
    const Vec2 e2 = poly[i + 2] - poly[i + 1];
    const double cr = cross(e1, e2);
    turning += std::atan2(cr, dot(e1, e2));
    if (std::abs(cr) <= kFlatTurnTolerance * norm(e1) * norm(e2)) continue;
    const int s = cr > 0.0 ? 1 : -1;
    if (sign == 0) {
      sign = s;
    } else if (s != sign) {
      return false;
    }
  }
  // A one-signed turn sequence can still wind several times around.
  return sign != 0 && std::abs(std::abs(turning) - 2.0 * std::numbers::pi) < 1e-6;
}

namespace {

double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) {
  const Vec2 ab = b - a;
  const double len2 = dot(ab, ab);
  const double t = len2 > 0.0 ? std::clamp(dot(p - a, ab) / len2, 0.0, 1.0) : 0.0;
  return distance(p, a + t * ab);
}

}  // namespace

int winding_number(const ClosedPolyline& poly, Vec2 point) {
  const std::size_t n = poly.size();
  const double tol = 1e-9 * poly.scale();
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = poly[i], b = poly[i + 1];
    if (point_segment_distance(point, a, b) <= tol) {
      throw Error(ErrorCode::PointOnCurve, "point lies on the polyline");
    }
    const Vec2 u = a - point;
    const Vec2 v = b - point;
    total += std::atan2(cross(u, v), dot(u, v));
  }
  const double w = total / (2.0 * std::numbers::pi);
  const double rounded = std::round(w);
  if (std::abs(w - rounded) >= 0.1) {
    throw Error(ErrorCode::DegenerateInput, "winding sum is not close to an integer");
  }
  return static_cast<int>(rounded);
}

Mat2 PlanarMap::derivative(Vec2 p, double step) const {
  if (jacobian) return jacobian(p);
  const Vec2 fx = value(p + Vec2{step, 0.0}) - value(p - Vec2{step, 0.0});
  const Vec2 fy = value(p + Vec2{0.0, step}) - value(p - Vec2{0.0, step});
  const double inv = 0.5 / step;
  return {fx.x * inv, fy.x * inv, fx.y * inv, fy.y * inv};
}

PlanarMap as_planar_map(const PlanarPolyMap& map) {
  const BivariatePoly u1x = map.u1.dx(), u1y = map.u1.dy();
  const BivariatePoly u2x = map.u2.dx(), u2y = map.u2.dy();
  return {[map](Vec2 p) { return evaluate(map, p); },
          [u1x, u1y, u2x, u2y](Vec2 p) { return Mat2{u1x(p), u1y(p), u2x(p), u2y(p)}; }};
}

std::vector<Vec2> polar_grid(const Disk& disk, int n) {
  std::vector<Vec2> pts;
  pts.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    const double r = disk.radius * (i + 1) / n;
    for (int j = 0; j < n; ++j) {
      const double t = 2.0 * std::numbers::pi * j / n;
      pts.push_back(disk.center + Vec2{r * std::cos(t), r * std::sin(t)});
    }
  }
  return pts;
}

std::vector<Vec2> lattice_in_disk(const Disk& disk, int n) {
  std::vector<Vec2> pts;
  const double step = 2.0 * disk.radius / (n - 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Vec2 p = disk.center + Vec2{-disk.radius + step * j, -disk.radius + step * i};
      if (disk.contains(p)) pts.push_back(p);
    }
  }
  return pts;
}

namespace {

struct Box {
  double xmin, xmax, ymin, ymax;
  [[nodiscard]] double diagonal() const { return std::hypot(xmax - xmin, ymax - ymin); }
};

Box bounds(std::span<const Vec2> pts) {
  Box b{pts[0].x, pts[0].x, pts[0].y, pts[0].y};
  for (Vec2 p : pts) {
    b.xmin = std::min(b.xmin, p.x);
    b.xmax = std::max(b.xmax, p.x);
    b.ymin = std::min(b.ymin, p.y);
    b.ymax = std::max(b.ymax, p.y);
  }
  return b;
}

// Newton iteration for map(q) = target from q0; damped, confined to the disk.
std::optional<Vec2> solve_preimage(const PlanarMap& map, Vec2 target, Vec2 q0, const Disk& disk,
                                   double tol) {
  const double fd_step = 1e-6 * disk.radius;
  Vec2 q = q0;
  Vec2 r = map(q) - target;
  for (int it = 0; it < 80; ++it) {
    if (norm(r) <= tol) return q;
    const Mat2 j = map.derivative(q, fd_step);
    const double det = j.det();
    if (!(std::abs(det) > 0.0) || !std::isfinite(det)) return std::nullopt;
    const Vec2 step{(j.a22 * r.x - j.a12 * r.y) / det, (-j.a21 * r.x + j.a11 * r.y) / det};
    double scale = 1.0;
    Vec2 next = q - step;
    Vec2 rn = map(next) - target;
    for (int h = 0; h < 40 && !(norm(rn) < norm(r)); ++h) {
      scale *= 0.5;
      next = q - scale * step;
      rn = map(next) - target;
    }
    if (!(norm(rn) < norm(r))) return std::nullopt;
    q = next;
    r = rn;
    if (!disk.contains(q, 1e-9 * disk.radius)) return std::nullopt;
  }
  return norm(r) <= tol ? std::optional<Vec2>(q) : std::nullopt;
}

}  // namespace

CollisionSearch search_collision(const PlanarMap& map, std::span<const Vec2> samples,
                                 const Disk& disk, double candidate_radius) {
  CollisionSearch out;
  if (samples.size() < 2) return out;

  std::vector<Vec2> images(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) images[i] = map(samples[i]);
  const Box box = bounds(images);
  out.image_diameter = box.diagonal();
  if (!(out.image_diameter > 0.0) || !(candidate_radius > 0.0)) return out;

  const double cell = candidate_radius;
  const double min_domain = disk.radius / 10.0;
  const double confirm_tol = 1e-12 * out.image_diameter;
  const auto key = [](std::int64_t cx, std::int64_t cy) { return (cx << 32) ^ (cy & 0xffffffff); };
  const auto cell_of = [&](Vec2 p) {
    return std::pair<std::int64_t, std::int64_t>{
        static_cast<std::int64_t>(std::floor((p.x - box.xmin) / cell)),
        static_cast<std::int64_t>(std::floor((p.y - box.ymin) / cell))};
  };

  std::unordered_map<std::int64_t, std::vector<std::size_t>> hash;
  for (std::size_t i = 0; i < images.size(); ++i) {
    const auto [cx, cy] = cell_of(images[i]);
    hash[key(cx, cy)].push_back(i);
  }

  for (std::size_t i = 0; i < images.size(); ++i) {
    const auto [cx, cy] = cell_of(images[i]);
    for (std::int64_t dx = -1; dx <= 1; ++dx) {
      for (std::int64_t dy = -1; dy <= 1; ++dy) {
        const auto it = hash.find(key(cx + dx, cy + dy));
        if (it == hash.end()) continue;
        for (std::size_t j : it->second) {
          if (j <= i) continue;
          if (distance(images[i], images[j]) >= candidate_radius) continue;
          if (distance(samples[i], samples[j]) <= min_domain) continue;
          std::optional<Vec2> q;
          try {
            q = solve_preimage(map, images[i], samples[j], disk, confirm_tol);
          } catch (const Error&) {
            q.reset();
          }
          if (q && distance(*q, samples[i]) > min_domain) {
            out.pair = CollisionPair{samples[i], *q, distance(map(*q), images[i]),
                                     distance(*q, samples[i])};
            return out;
          }
          ++out.rejected_candidates;
        }
      }
    }
  }
  return out;
}

InjectivityVerdict grid_injectivity(const PlanarMap& map, const Disk& disk, int n) {
  if (n < 16) {
    throw Error(ErrorCode::ParameterOutOfRange, "grid_injectivity needs n >= 16");
  }
  const std::vector<Vec2> pts = polar_grid(disk, n);
  std::vector<Vec2> images(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) images[i] = map(pts[i]);
  const double diameter = bounds(images).diagonal();
  const CollisionSearch search = search_collision(map, pts, disk, diameter / (10.0 * n));
  return {!search.pair.has_value(), search.pair, search.rejected_candidates};
}

InjectivityVerdict grid_injectivity(const PlanarPolyMap& map, const Disk& disk, int n) {
  return grid_injectivity(as_planar_map(map), disk, n);
}

SignCounts jacobian_sign_field(const PlanarPolyMap& map, const Disk& disk, int n) {
  if (n < 16) {
    throw Error(ErrorCode::ParameterOutOfRange, "jacobian_sign_field needs n >= 16");
  }
  const BivariatePoly det = jacobian_det(map);
  const std::vector<Vec2> pts = polar_grid(disk, n);
  std::vector<double> values(pts.size());
  double max_abs = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    values[i] = det(pts[i]);
    max_abs = std::max(max_abs, std::abs(values[i]));
  }
  const double threshold = 1e-10 * max_abs;
  SignCounts counts;
  for (double v : values) {
    if (std::abs(v) <= threshold) {
      ++counts.near_zero;
    } else if (v > 0.0) {
      ++counts.positive;
    } else {
      ++counts.negative;
    }
  }
  return counts;
}

std::vector<Vec2> circle_image(const PlanarMap& map, Vec2 center, double radius, int n) {
  std::vector<Vec2> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const double t = 2.0 * std::numbers::pi * j / n;
    out.push_back(map(center + Vec2{radius * std::cos(t), radius * std::sin(t)}));
  }
  return out;
}

}  // namespace interpen
