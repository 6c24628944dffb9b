#include "interpen/rkc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "interpen/error.hpp"

namespace interpen {

namespace {

const double kSqrt5 = std::sqrt(5.0);
const double kStripLow = 0.5 * (1.0 - kSqrt5);
const double kStripHigh = 0.5 * (1.0 + kSqrt5);

bool sampled_convex(const QuadraticSolution& sol, double k, int n) {
  // Psi(dB) differs from Phi(dB) by the orientation-preserving linear map R_theta M.
  QuadraticSolution unrotated = sol;
  unrotated.theta = 0.0;
  try {
    const ClosedPolyline gamma(rkc_boundary(unrotated, k, n));
    return is_simple_closed(gamma) && is_convex(gamma);
  } catch (const Error&) {
    return false;
  }
}

}  // namespace

bool CertificateSet::all_pass() const noexcept {
  return boundary_simple && boundary_convex && strip.violated && strip.boundary_in_strip &&
         jacobian_center_zero && jacobian_formula_error <= 1e-12 && jacobian_signs.positive > 0 &&
         jacobian_signs.negative > 0 && fold_pair.has_value();
}

Disk rkc_disk() { return Disk({0.5, 0.0}, 0.5 * kSqrt5); }

PlanarPolyMap rkc_map(const QuadraticSolution& sol, double k) {
  const BivariatePoly first =
      BivariatePoly::monomial(2, 0) + BivariatePoly::monomial(0, 2) - BivariatePoly::constant(1.0);
  const BivariatePoly second = BivariatePoly::monomial(0, 1, k) + quadratic_poly(sol.a, sol.b, sol.c);
  return rotate({first, second}, sol.theta);
}

std::vector<Vec2> rkc_boundary(const QuadraticSolution& sol, double k, int n) {
  const Disk disk = rkc_disk();
  const Mat2 rot = rotation(sol.theta);
  const BivariatePoly p = quadratic_poly(sol.a, sol.b, sol.c);
  std::vector<Vec2> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const double t = 2.0 * std::numbers::pi * j / n;
    const double x = disk.center.x + disk.radius * std::cos(t);
    const double y = disk.center.y + disk.radius * std::sin(t);
    out.push_back(rot * Vec2{x, k * y + p(x, y)});
  }
  return out;
}

double convexity_threshold_k(const QuadraticSolution& sol, int n) {
  double hi = std::max(std::abs(sol.b), 1e-3);
  for (int i = 0; i < 64 && !sampled_convex(sol, hi, n); ++i) hi *= 2.0;
  double lo = 0.0;
  while (hi - lo > 1e-9 * hi) {
    const double mid = 0.5 * (lo + hi);
    if (sampled_convex(sol, mid, n)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

double default_k(const QuadraticSolution& sol, int n) {
  const double b = std::abs(sol.b);
  const double strict = b > 0.0 ? b + std::max(1e-3 * b, 1e-3) : 1.0;
  return std::max(strict, 1.001 * convexity_threshold_k(sol, n));
}

RkcBundle build_rkc_counterexample(const EllipticSystem& system, std::optional<double> k,
                                   const RkcOptions& options) {
  const QuadraticSolution sol = synthesize_quadratic(system);
  double chosen = 0.0;
  if (k) {
    if (!std::isfinite(*k)) throw Error(ErrorCode::NonFiniteInput, "k must be finite");
    if (*k == 0.0 || *k < std::abs(sol.b)) {
      throw Error(ErrorCode::KTooSmall, "k must satisfy k >= |b| = " + std::to_string(std::abs(sol.b)) +
                                            " and k != 0");
    }
    chosen = *k;
  } else {
    chosen = default_k(sol, options.boundary_samples);
  }

  RkcBundle bundle;
  bundle.system = system;
  bundle.solution = sol;
  bundle.k = chosen;
  bundle.disk = rkc_disk();
  bundle.map = rkc_map(sol, chosen);
  bundle.options = options;
  bundle.boundary_samples = rkc_boundary(sol, chosen, options.boundary_samples);
  bundle.certificates = compute_rkc_certificates(bundle, options);
  return bundle;
}

StripCertificate strip_certificate(const RkcBundle& bundle) {
  const Mat2 back = rotation(-bundle.solution.theta);
  const auto to_strip = [&](Vec2 v) {
    const Vec2 r = back * v;
    return Vec2{r.x, r.y / bundle.k};
  };

  StripCertificate cert;
  cert.bound = kStripLow;
  cert.w1 = to_strip(evaluate(bundle.map, {0.0, 0.0})).x;
  cert.violated = cert.w1 < kStripLow;

  cert.boundary_w1_min = std::numeric_limits<double>::infinity();
  cert.boundary_w1_max = -std::numeric_limits<double>::infinity();
  for (Vec2 v : bundle.boundary_samples) {
    const double w1 = to_strip(v).x;
    cert.boundary_w1_min = std::min(cert.boundary_w1_min, w1);
    cert.boundary_w1_max = std::max(cert.boundary_w1_max, w1);
  }
  const double tol = 1e-12 * (1.0 + kStripHigh);
  cert.boundary_in_strip = !bundle.boundary_samples.empty() &&
                           cert.boundary_w1_min >= kStripLow - tol &&
                           cert.boundary_w1_max <= kStripHigh + tol;
  return cert;
}

NodalConic nodal_conic(double a, double b, double c, double k) {
  NodalConic conic;
  conic.k = k;
  conic.b = b;
  conic.c_minus_a = c - a;
  // The 3x3 conic matrix has determinant b k^2 / 4: b = 0 leaves x (k + (c - a) y) = 0.
  if (b != 0.0) {
    conic.kind = NodalConic::Kind::Hyperbola;
  } else if (conic.c_minus_a != 0.0) {
    conic.kind = NodalConic::Kind::LinePair;
  } else {
    conic.kind = NodalConic::Kind::Line;
  }
  return conic;
}

std::vector<Vec2> NodalConic::branch_through_origin(const Disk& disk, int n) const {
  std::vector<Vec2> out;
  const double y0 = disk.center.y - disk.radius;
  const double y1 = disk.center.y + disk.radius;
  for (int i = 0; i <= n; ++i) {
    const double y = y0 + (y1 - y0) * i / n;
    // Root of b x^2 + K x - b y^2 = 0 that vanishes at y = 0, in cancellation-free form.
    const double kk = k + c_minus_a * y;
    double x = 0.0;
    if (b != 0.0) {
      const double sgn = kk >= 0.0 ? 1.0 : -1.0;
      const double den = kk + sgn * std::sqrt(kk * kk + 4.0 * b * b * y * y);
      if (den == 0.0) continue;
      x = 2.0 * b * y * y / den;
    }
    const Vec2 p{x, y};
    if (disk.contains(p)) out.push_back(p);
  }
  return out;
}

std::optional<CollisionPair> fold_search(const PlanarPolyMap& map, const Disk& disk, int grid_n) {
  const PlanarMap pm = as_planar_map(map);
  const std::vector<Vec2> samples = lattice_in_disk(disk, grid_n);
  if (samples.size() < 2) return std::nullopt;
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (Vec2 s : samples) {
    const Vec2 v = pm(s);
    xmin = std::min(xmin, v.x);
    xmax = std::max(xmax, v.x);
    ymin = std::min(ymin, v.y);
    ymax = std::max(ymax, v.y);
  }
  const double diameter = std::hypot(xmax - xmin, ymax - ymin);
  const CollisionSearch found = search_collision(pm, samples, disk, diameter / grid_n);
  if (found.pair && found.pair->image_distance < 1e-6 * diameter) return found.pair;
  return std::nullopt;
}

std::optional<CollisionPair> fold_certificate(const RkcBundle& bundle, int grid_n) {
  return fold_search(bundle.map, bundle.disk, grid_n);
}

CertificateSet compute_rkc_certificates(const RkcBundle& bundle, const RkcOptions& options) {
  CertificateSet cert;
  try {
    const ClosedPolyline gamma(bundle.boundary_samples);
    cert.boundary_simple = is_simple_closed(gamma);
    cert.boundary_convex = cert.boundary_simple && is_convex(gamma);
  } catch (const Error&) {
    cert.boundary_simple = false;
    cert.boundary_convex = false;
  }
  cert.strip = strip_certificate(bundle);

  const BivariatePoly det = jacobian_det(bundle.map);
  cert.jacobian_center_zero = det.coeff(0, 0) == 0.0;

  const QuadraticSolution& s = bundle.solution;
  BivariatePoly expected;
  expected.set(1, 0, 2.0 * bundle.k);
  expected.set(2, 0, 2.0 * s.b);
  expected.set(0, 2, -2.0 * s.b);
  expected.set(1, 1, 2.0 * (s.c - s.a));
  cert.jacobian_formula_error = (det - expected).max_abs_coeff();

  cert.jacobian_signs = jacobian_sign_field(bundle.map, bundle.disk, options.sign_grid);
  cert.fold_pair = fold_certificate(bundle, options.fold_grid);
  return cert;
}

}  // namespace interpen
