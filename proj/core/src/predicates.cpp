#include "interpen/predicates.hpp"

#include <cmath>

#include <boost/multiprecision/cpp_int.hpp>

namespace interpen {

namespace {

using Rational = boost::multiprecision::cpp_rational;

int sign_of(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

// (3 + 16 eps) eps with eps = 2^-53, the classical bound for the 2D orientation determinant.
constexpr double kOrientErrBound = 3.3306690738754716e-16;

}  // namespace

int orient2d(Vec2 a, Vec2 b, Vec2 c) {
  const double left = (a.x - c.x) * (b.y - c.y);
  const double right = (a.y - c.y) * (b.x - c.x);
  const double det = left - right;
  const double detsum = std::abs(left) + std::abs(right);
  if (std::abs(det) > kOrientErrBound * detsum) return det > 0 ? 1 : -1;

  const Rational ax(a.x), ay(a.y), bx(b.x), by(b.y), cx(c.x), cy(c.y);
  return sign_of((ax - cx) * (by - cy) - (ay - cy) * (bx - cx));
}

int dot_sign(Vec2 o, Vec2 a, Vec2 b) {
  const double p = (a.x - o.x) * (b.x - o.x);
  const double q = (a.y - o.y) * (b.y - o.y);
  const double v = p + q;
  if (std::abs(v) > kOrientErrBound * (std::abs(p) + std::abs(q))) return v > 0 ? 1 : -1;

  const Rational ox(o.x), oy(o.y);
  return sign_of((Rational(a.x) - ox) * (Rational(b.x) - ox) +
                 (Rational(a.y) - oy) * (Rational(b.y) - oy));
}

}  // namespace interpen
