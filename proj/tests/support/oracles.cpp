#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Eigenvalues>

namespace interpen::oracle {

double brute_force_lh_minimum(const EllipticSystem& s, int n) {
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    const double t = std::numbers::pi * i / n;
    const double c = std::cos(t);
    const double sn = std::sin(t);
    const auto q = [&](SymMat2 m) { return m.m11 * c * c + 2.0 * m.m12 * c * sn + m.m22 * sn * sn; };
    const double a = q(s.A);
    const double m = q(s.B) + q(s.C);
    const double d = q(s.D);
    for (int j = 0; j < n; ++j) {
      const double e = std::numbers::pi * j / n;
      const double e1 = std::cos(e);
      const double e2 = std::sin(e);
      best = std::min(best, e1 * e1 * a + e1 * e2 * m + e2 * e2 * d);
    }
  }
  return best;
}

FdHessian fd_hessian(const std::function<double(double, double)>& f, double x, double y,
                     double h) {
  const double f0 = f(x, y);
  return {(f(x + h, y) - 2.0 * f0 + f(x - h, y)) / (h * h),
          (f(x + h, y + h) - f(x + h, y - h) - f(x - h, y + h) + f(x - h, y - h)) / (4.0 * h * h),
          (f(x, y + h) - 2.0 * f0 + f(x, y - h)) / (h * h)};
}

Vec2 fd_operator(const EllipticSystem& s, const std::function<Vec2(double, double)>& u, double x,
                 double y, double h) {
  const FdHessian h1 = fd_hessian([&](double a, double b) { return u(a, b).x; }, x, y, h);
  const FdHessian h2 = fd_hessian([&](double a, double b) { return u(a, b).y; }, x, y, h);
  const auto contract = [](SymMat2 m, const FdHessian& hh) {
    return m.m11 * hh.xx + 2.0 * m.m12 * hh.xy + m.m22 * hh.yy;
  };
  return {contract(s.A, h1) + contract(s.B, h2), contract(s.C, h1) + contract(s.D, h2)};
}

namespace {

long double orient(Vec2 a, Vec2 b, Vec2 c) {
  return (static_cast<long double>(b.x) - a.x) * (static_cast<long double>(c.y) - a.y) -
         (static_cast<long double>(b.y) - a.y) * (static_cast<long double>(c.x) - a.x);
}

bool on_segment(Vec2 a, Vec2 b, Vec2 p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

bool meet(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
  const long double o1 = orient(a, b, c);
  const long double o2 = orient(a, b, d);
  const long double o3 = orient(c, d, a);
  const long double o4 = orient(c, d, b);
  if (((o1 > 0 && o2 < 0) || (o1 < 0 && o2 > 0)) && ((o3 > 0 && o4 < 0) || (o3 < 0 && o4 > 0))) {
    return true;
  }
  return (o1 == 0 && on_segment(a, b, c)) || (o2 == 0 && on_segment(a, b, d)) ||
         (o3 == 0 && on_segment(c, d, a)) || (o4 == 0 && on_segment(c, d, b));
}

}  // namespace

bool brute_force_simple(const std::vector<Vec2>& poly) {
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = poly[i];
    const Vec2 b = poly[(i + 1) % n];
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
      const Vec2 c = poly[j];
      const Vec2 d = poly[(j + 1) % n];
      if (adjacent) {
        // Adjacent edges share one endpoint; they may not overlap beyond it.
        const Vec2 shared = j == i + 1 ? b : a;
        const Vec2 p = j == i + 1 ? a : b;
        const Vec2 q = j == i + 1 ? d : c;
        if (orient(shared, p, q) == 0 && on_segment(shared, p, q) && !(q == shared)) return false;
        if (orient(shared, q, p) == 0 && on_segment(shared, q, p) && !(p == shared)) return false;
        continue;
      }
      if (meet(a, b, c, d)) return false;
    }
  }
  return true;
}

bool hull_convex(const std::vector<Vec2>& poly) {
  if (!brute_force_simple(poly)) return false;
  std::vector<Vec2> pts = poly;
  std::sort(pts.begin(), pts.end(), [](Vec2 a, Vec2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  std::vector<Vec2> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && orient(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i > 0; --i) {
    while (k >= t && orient(hull[k - 2], hull[k - 1], pts[i - 1]) <= 0) --k;
    hull[k++] = pts[i - 1];
  }
  hull.resize(k - 1);
  const double scale = [&] {
    double s = 0.0;
    for (Vec2 p : poly) s = std::max({s, std::abs(p.x), std::abs(p.y)});
    return s;
  }();
  for (Vec2 p : poly) {
    bool on_boundary = false;
    for (std::size_t i = 0; i < hull.size() && !on_boundary; ++i) {
      const Vec2 a = hull[i];
      const Vec2 b = hull[(i + 1) % hull.size()];
      const double len = std::hypot(b.x - a.x, b.y - a.y);
      on_boundary = std::abs(static_cast<double>(orient(a, b, p))) <= 1e-12 * len * (1.0 + scale) &&
                    on_segment(a, b, p);
    }
    if (!on_boundary) return false;
  }
  return true;
}

double block_min_eigenvalue(const EllipticSystem& s, double tau) {
  const SymMat2 e = 0.5 * (s.B + s.C);
  Eigen::Matrix4d m;
  m << s.A.m11, s.A.m12, e.m11, e.m12 + tau,
       s.A.m12, s.A.m22, e.m12 - tau, e.m22,
       e.m11, e.m12 - tau, s.D.m11, s.D.m12,
       e.m12 + tau, e.m22, s.D.m12, s.D.m22;
  return Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d>(m).eigenvalues()(0);
}

double best_block_min_eigenvalue(const EllipticSystem& s, double tau_range, int n) {
  double best = -std::numeric_limits<double>::infinity();
  for (int i = 0; i <= n; ++i) {
    best = std::max(best, block_min_eigenvalue(s, -tau_range + 2.0 * tau_range * i / n));
  }
  return best;
}

SymMat2 random_sym(std::mt19937_64& rng, double scale) {
  std::uniform_real_distribution<double> u(-scale, scale);
  return {u(rng), u(rng), u(rng)};
}

SymMat2 random_spd(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double p = u(rng), q = u(rng), r = u(rng);
  // L L^T + 0.1 I
  return {p * p + 0.1, p * q, q * q + r * r + 0.1};
}

EllipticSystem random_elliptic(std::mt19937_64& rng) {
  for (;;) {
    EllipticSystem s{random_spd(rng), random_sym(rng), random_sym(rng), random_spd(rng)};
    const auto v = is_elliptic(s);
    if (v.elliptic && v.certified_lower_bound > 1e-3) return s;
  }
}

EllipticSystem random_diagonalizable(std::mt19937_64& rng, Mixing* mixing, SymMat2* base) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (;;) {
    const SymMat2 a = random_spd(rng);
    Mixing m{u(rng), u(rng), u(rng), u(rng)};
    if (std::abs(m.det()) < 0.2) continue;
    const EllipticSystem block{a, {}, {}, a};
    const EllipticSystem s = apply_mixing(block, m);
    if (!is_elliptic(s).elliptic) continue;
    if (mixing) *mixing = m;
    if (base) *base = a;
    return s;
  }
}

}  // namespace interpen::oracle
