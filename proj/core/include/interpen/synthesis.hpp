#pragma once

#include <array>

#include "interpen/algebra.hpp"
#include "interpen/poly.hpp"

namespace interpen {

using Mat23 = std::array<std::array<double, 3>, 2>;
using Mat44 = std::array<std::array<double, 4>, 4>;

template <typename M>
struct FGPair {
  M F;
  M G;
};

// F rows (a11, 2a12, a22), (c11, 2c12, c22); G likewise from B and D.
[[nodiscard]] FGPair<Mat23> build_fg_quadratic(const EllipticSystem& system);
// Banded 4x4 layout: each row triple of the quadratic case, then shifted right by one.
[[nodiscard]] FGPair<Mat44> build_fg_cubic(const EllipticSystem& system);

// Right-hand sides of (-sin t F + cos t G) coeffs = Y(t), obtained by contracting the
// Hessians of x^2 + y^2 and x(x^2 + y^2) with the rotated system.
[[nodiscard]] std::array<double, 2> rhs_quadratic(const EllipticSystem& system, double theta);
[[nodiscard]] std::array<double, 4> rhs_cubic(const EllipticSystem& system, double theta);

struct ThetaChoice {
  double theta = 0.0;
  double sigma_min = 0.0;
  double sigma_max = 0.0;
};

inline constexpr int kThetaGrid = 3600;
inline constexpr double kRankTolerance = 1e-9;

// Maximizes the smallest singular value of -sin t F + cos t G over [0, 2 pi).
// Throws NoFullRankTheta when sigma_min <= kRankTolerance * sigma_max everywhere.
[[nodiscard]] ThetaChoice select_theta(const Mat23& F, const Mat23& G);
[[nodiscard]] ThetaChoice select_theta(const Mat44& F, const Mat44& G);

// p = (a x^2 + 2 b x y + c y^2) / 2.
struct QuadraticSolution {
  double theta = 0.0;
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double residual_norm = 0.0;
  double sigma_min = 0.0;
};

// q = (a x^3 / 3 + b x^2 y + c x y^2 + d y^3 / 3) / 2.
struct CubicSolution {
  double theta = 0.0;
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
  double residual_norm = 0.0;
  double sigma_min = 0.0;
};

[[nodiscard]] BivariatePoly quadratic_poly(double a, double b, double c);
[[nodiscard]] BivariatePoly cubic_poly(double a, double b, double c, double d);

// R_theta (x^2 + y^2, p).
[[nodiscard]] PlanarPolyMap quadratic_map(const QuadraticSolution& sol);
// R_theta (x (x^2 + y^2), q).
[[nodiscard]] PlanarPolyMap cubic_map(const CubicSolution& sol);

inline constexpr double kResidualTolerance = 1e-10;

// Minimum-norm (a, b, c) at the selected theta.
// Throws NotElliptic, Diagonalizable, IllConditioned.
[[nodiscard]] QuadraticSolution synthesize_quadratic(const EllipticSystem& system);
// Throws NotElliptic, Diagonalizable, IllConditioned.
[[nodiscard]] CubicSolution synthesize_cubic(const EllipticSystem& system);

}  // namespace interpen
