#pragma once

#include <array>
#include <utility>
#include <vector>

#include "interpen/algebra.hpp"
#include "interpen/vec2.hpp"

namespace interpen {

// Real polynomial in (x, y) of total degree <= 4, stored densely by exponent pair.
// Degree 4 is reached only by Jacobian determinants of cubic maps; every other
// operation expects inputs of degree <= kMaxInputDegree.
class BivariatePoly {
 public:
  static constexpr int kMaxDegree = 4;
  static constexpr int kMaxInputDegree = 3;
  static constexpr int kSize = (kMaxDegree + 1) * (kMaxDegree + 2) / 2;

  struct Term {
    int i;
    int j;
    double coeff;
  };

  BivariatePoly() = default;

  [[nodiscard]] static BivariatePoly constant(double c);
  [[nodiscard]] static BivariatePoly monomial(int i, int j, double c = 1.0);
  [[nodiscard]] static BivariatePoly x() { return monomial(1, 0); }
  [[nodiscard]] static BivariatePoly y() { return monomial(0, 1); }
  // Throws DegreeTooHigh / NonFiniteInput.
  [[nodiscard]] static BivariatePoly from_terms(const std::vector<Term>& terms);

  // Zero for exponents outside the stored range.
  [[nodiscard]] double coeff(int i, int j) const noexcept;
  // Throws DegreeTooHigh when i + j > kMaxDegree.
  void set(int i, int j, double c);

  // -1 for the zero polynomial.
  [[nodiscard]] int degree() const noexcept;
  [[nodiscard]] double max_abs_coeff() const noexcept;
  [[nodiscard]] std::vector<Term> terms() const;

  [[nodiscard]] BivariatePoly dx() const;
  [[nodiscard]] BivariatePoly dy() const;
  [[nodiscard]] double operator()(double x, double y) const noexcept;
  [[nodiscard]] double operator()(Vec2 p) const noexcept { return (*this)(p.x, p.y); }

  BivariatePoly& operator+=(const BivariatePoly& o) noexcept;
  BivariatePoly& operator-=(const BivariatePoly& o) noexcept;
  BivariatePoly& operator*=(double s) noexcept;

  friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) noexcept { return a += b; }
  friend BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b) noexcept { return a -= b; }
  friend BivariatePoly operator*(double s, BivariatePoly a) noexcept { return a *= s; }
  // Throws DegreeTooHigh when the product exceeds kMaxDegree.
  friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b);
  friend bool operator==(const BivariatePoly&, const BivariatePoly&) noexcept = default;

 private:
  static constexpr int index(int i, int j) noexcept { return (i + j) * (i + j + 1) / 2 + j; }
  std::array<double, kSize> c_{};
};

// Max-coefficient test with the relative threshold tol * (1 + scale).
[[nodiscard]] bool is_identically_zero(const BivariatePoly& p, double scale, double tol = 1e-10);

struct PlanarPolyMap {
  BivariatePoly u1;
  BivariatePoly u2;

  [[nodiscard]] static PlanarPolyMap identity() { return {BivariatePoly::x(), BivariatePoly::y()}; }
  [[nodiscard]] int degree() const noexcept;
  [[nodiscard]] double max_abs_coeff() const noexcept;

  friend PlanarPolyMap operator+(const PlanarPolyMap& a, const PlanarPolyMap& b) {
    return {a.u1 + b.u1, a.u2 + b.u2};
  }
  friend PlanarPolyMap operator*(double s, const PlanarPolyMap& a) { return {s * a.u1, s * a.u2}; }
  friend bool operator==(const PlanarPolyMap&, const PlanarPolyMap&) noexcept = default;
};

// Second partials; each entry has degree <= 1 for cubic input.
struct PolyHessian {
  BivariatePoly xx;
  BivariatePoly xy;
  BivariatePoly yy;
};

// Throws DegreeTooHigh for degree > 3.
[[nodiscard]] PolyHessian hessian(const BivariatePoly& poly);

// S : Hess(u) for constant symmetric S.
[[nodiscard]] BivariatePoly contract(SymMat2 s, const PolyHessian& h);

// (A:Hess u1 + B:Hess u2, C:Hess u1 + D:Hess u2). Throws DegreeTooHigh.
[[nodiscard]] std::pair<BivariatePoly, BivariatePoly> system_residual(const EllipticSystem& system,
                                                                     const PlanarPolyMap& map);

// Largest residual coefficient divided by (1 + system scale * map scale).
[[nodiscard]] double relative_residual(const EllipticSystem& system, const PlanarPolyMap& map);

// u1_x u2_y - u1_y u2_x, exact at coefficient level. Throws DegreeTooHigh.
[[nodiscard]] BivariatePoly jacobian_det(const PlanarPolyMap& map);

[[nodiscard]] Vec2 evaluate(const PlanarPolyMap& map, Vec2 point) noexcept;
[[nodiscard]] Mat2 jacobian_at(const PlanarPolyMap& map, Vec2 point);

// R_theta applied to the values of the map.
[[nodiscard]] PlanarPolyMap rotate(const PlanarPolyMap& map, double theta);

}  // namespace interpen
