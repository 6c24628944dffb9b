#include "interpen/poly.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "interpen/error.hpp"

namespace interpen {

namespace {

void check_exponents(int i, int j, int max_degree) {
  if (i < 0 || j < 0) {
    throw Error(ErrorCode::DegreeTooHigh, "negative exponent");
  }
  if (i + j > max_degree) {
    throw Error(ErrorCode::DegreeTooHigh,
                "monomial x^" + std::to_string(i) + " y^" + std::to_string(j) + " exceeds degree " +
                    std::to_string(max_degree));
  }
}

void require_input_degree(const BivariatePoly& p) {
  if (p.degree() > BivariatePoly::kMaxInputDegree) {
    throw Error(ErrorCode::DegreeTooHigh, "input polynomial has degree " +
                                              std::to_string(p.degree()) + " > 3");
  }
}

}  // namespace

BivariatePoly BivariatePoly::constant(double c) { return monomial(0, 0, c); }

BivariatePoly BivariatePoly::monomial(int i, int j, double c) {
  BivariatePoly p;
  p.set(i, j, c);
  return p;
}

BivariatePoly BivariatePoly::from_terms(const std::vector<Term>& terms) {
  BivariatePoly p;
  for (const Term& t : terms) {
    if (!std::isfinite(t.coeff)) {
      throw Error(ErrorCode::NonFiniteInput, "non-finite polynomial coefficient");
    }
    check_exponents(t.i, t.j, kMaxDegree);
    p.c_[index(t.i, t.j)] += t.coeff;
  }
  return p;
}

double BivariatePoly::coeff(int i, int j) const noexcept {
  if (i < 0 || j < 0 || i + j > kMaxDegree) return 0.0;
  return c_[index(i, j)];
}

void BivariatePoly::set(int i, int j, double c) {
  check_exponents(i, j, kMaxDegree);
  c_[index(i, j)] = c;
}

int BivariatePoly::degree() const noexcept {
  for (int d = kMaxDegree; d >= 0; --d) {
    for (int j = 0; j <= d; ++j) {
      if (c_[index(d - j, j)] != 0.0) return d;
    }
  }
  return -1;
}

double BivariatePoly::max_abs_coeff() const noexcept {
  double m = 0.0;
  for (double v : c_) m = std::max(m, std::abs(v));
  return m;
}

std::vector<BivariatePoly::Term> BivariatePoly::terms() const {
  std::vector<Term> out;
  for (int d = 0; d <= kMaxDegree; ++d) {
    for (int j = 0; j <= d; ++j) {
      const double v = c_[index(d - j, j)];
      if (v != 0.0) out.push_back({d - j, j, v});
    }
  }
  return out;
}

BivariatePoly BivariatePoly::dx() const {
  BivariatePoly out;
  for (int d = 1; d <= kMaxDegree; ++d) {
    for (int j = 0; j < d; ++j) {
      const int i = d - j;
      out.c_[index(i - 1, j)] = i * c_[index(i, j)];
    }
  }
  return out;
}

BivariatePoly BivariatePoly::dy() const {
  BivariatePoly out;
  for (int d = 1; d <= kMaxDegree; ++d) {
    for (int j = 1; j <= d; ++j) {
      const int i = d - j;
      out.c_[index(i, j - 1)] = j * c_[index(i, j)];
    }
  }
  return out;
}

double BivariatePoly::operator()(double x, double y) const noexcept {
  // Horner in y over Horner-in-x columns.
  double acc = 0.0;
  for (int j = kMaxDegree; j >= 0; --j) {
    double col = 0.0;
    for (int i = kMaxDegree - j; i >= 0; --i) col = col * x + c_[index(i, j)];
    acc = acc * y + col;
  }
  return acc;
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& o) noexcept {
  for (int k = 0; k < kSize; ++k) c_[k] += o.c_[k];
  return *this;
}

BivariatePoly& BivariatePoly::operator-=(const BivariatePoly& o) noexcept {
  for (int k = 0; k < kSize; ++k) c_[k] -= o.c_[k];
  return *this;
}

BivariatePoly& BivariatePoly::operator*=(double s) noexcept {
  for (double& v : c_) v *= s;
  return *this;
}

BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
  if (a.degree() + b.degree() > BivariatePoly::kMaxDegree) {
    throw Error(ErrorCode::DegreeTooHigh, "product exceeds degree 4");
  }
  BivariatePoly out;
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) {
      out.c_[BivariatePoly::index(ta.i + tb.i, ta.j + tb.j)] += ta.coeff * tb.coeff;
    }
  }
  return out;
}

bool is_identically_zero(const BivariatePoly& p, double scale, double tol) {
  return p.max_abs_coeff() <= tol * (1.0 + std::abs(scale));
}

int PlanarPolyMap::degree() const noexcept { return std::max(u1.degree(), u2.degree()); }

double PlanarPolyMap::max_abs_coeff() const noexcept {
  return std::max(u1.max_abs_coeff(), u2.max_abs_coeff());
}

PolyHessian hessian(const BivariatePoly& poly) {
  require_input_degree(poly);
  const BivariatePoly px = poly.dx();
  return {px.dx(), px.dy(), poly.dy().dy()};
}

BivariatePoly contract(SymMat2 s, const PolyHessian& h) {
  return s.m11 * h.xx + (2.0 * s.m12) * h.xy + s.m22 * h.yy;
}

std::pair<BivariatePoly, BivariatePoly> system_residual(const EllipticSystem& system,
                                                        const PlanarPolyMap& map) {
  const PolyHessian h1 = hessian(map.u1);
  const PolyHessian h2 = hessian(map.u2);
  return {contract(system.A, h1) + contract(system.B, h2),
          contract(system.C, h1) + contract(system.D, h2)};
}

double relative_residual(const EllipticSystem& system, const PlanarPolyMap& map) {
  const auto [r1, r2] = system_residual(system, map);
  const double scale = system.max_abs_entry() * map.max_abs_coeff();
  return std::max(r1.max_abs_coeff(), r2.max_abs_coeff()) / (1.0 + scale);
}

BivariatePoly jacobian_det(const PlanarPolyMap& map) {
  require_input_degree(map.u1);
  require_input_degree(map.u2);
  return map.u1.dx() * map.u2.dy() - map.u1.dy() * map.u2.dx();
}

Vec2 evaluate(const PlanarPolyMap& map, Vec2 point) noexcept {
  return {map.u1(point), map.u2(point)};
}

Mat2 jacobian_at(const PlanarPolyMap& map, Vec2 point) {
  return {map.u1.dx()(point), map.u1.dy()(point), map.u2.dx()(point), map.u2.dy()(point)};
}

PlanarPolyMap rotate(const PlanarPolyMap& map, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {c * map.u1 - s * map.u2, s * map.u1 + c * map.u2};
}

}  // namespace interpen
