#include "interpen/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Dense>

#include "interpen/error.hpp"

namespace interpen {

namespace {

std::array<double, 3> row_of(SymMat2 m) { return {m.m11, 2.0 * m.m12, m.m22}; }

std::array<double, 4> shifted(SymMat2 m, int shift) {
  std::array<double, 4> r{};
  const auto t = row_of(m);
  for (int k = 0; k < 3; ++k) r[k + shift] = t[k];
  return r;
}

template <typename M>
Eigen::MatrixXd combine(const M& F, const M& G, double theta) {
  const int rows = static_cast<int>(F.size());
  const int cols = static_cast<int>(F[0].size());
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  Eigen::MatrixXd out(rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int k = 0; k < cols; ++k) out(r, k) = -s * F[r][k] + c * G[r][k];
  }
  return out;
}

struct Singular {
  double min;
  double max;
};

template <typename M>
Singular singular_extremes(const M& F, const M& G, double theta) {
  const Eigen::VectorXd sv = combine(F, G, theta).jacobiSvd().singularValues();
  return {sv(sv.size() - 1), sv(0)};
}

double wrap_angle(double t) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  t = std::fmod(t, two_pi);
  if (t < 0.0) t += two_pi;
  return t;
}

template <typename M>
ThetaChoice select_theta_impl(const M& F, const M& G) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  const double h = two_pi / kThetaGrid;

  int best = 0;
  Singular best_sv = singular_extremes(F, G, 0.0);
  double scale = best_sv.max;
  for (int j = 1; j < kThetaGrid; ++j) {
    const Singular sv = singular_extremes(F, G, h * j);
    scale = std::max(scale, sv.max);
    // Strict improvement beyond rounding keeps the smallest maximizing angle.
    if (sv.min > best_sv.min + 1e-12 * scale) {
      best = j;
      best_sv = sv;
    }
  }

  ThetaChoice choice{h * best, best_sv.min, best_sv.max};

  // Golden-section refinement on the bracketing grid cells.
  const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double lo = choice.theta - h;
  double hi = choice.theta + h;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = singular_extremes(F, G, x1).min;
  double f2 = singular_extremes(F, G, x2).min;
  while (hi - lo > 1e-10) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = singular_extremes(F, G, x2).min;
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = singular_extremes(F, G, x1).min;
    }
  }
  const double refined = wrap_angle(0.5 * (lo + hi));
  const Singular refined_sv = singular_extremes(F, G, refined);
  if (refined_sv.min > choice.sigma_min * (1.0 + 1e-14)) {
    choice = {refined, refined_sv.min, refined_sv.max};
  }

  if (!(choice.sigma_min > kRankTolerance * choice.sigma_max)) {
    throw Error(ErrorCode::NoFullRankTheta,
                "-sin(t) F + cos(t) G is rank deficient for every t; the system is equivalent to a "
                "diagonal one");
  }
  return choice;
}

void require_not_diagonalizable(const EllipticSystem& system) {
  if (classify(system).diagonalizable()) {
    throw Error(ErrorCode::Diagonalizable,
                "system is equivalent to two copies of one operator; no counterexample exists");
  }
}

template <typename M>
ThetaChoice theta_or_ill_conditioned(const M& F, const M& G) {
  try {
    return select_theta(F, G);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoFullRankTheta) throw;
    throw Error(ErrorCode::IllConditioned,
                "classifier reports NotDiagonalizable but no full-rank angle exists");
  }
}

}  // namespace

FGPair<Mat23> build_fg_quadratic(const EllipticSystem& s) {
  return {Mat23{row_of(s.A), row_of(s.C)}, Mat23{row_of(s.B), row_of(s.D)}};
}

FGPair<Mat44> build_fg_cubic(const EllipticSystem& s) {
  return {Mat44{shifted(s.A, 0), shifted(s.A, 1), shifted(s.C, 0), shifted(s.C, 1)},
          Mat44{shifted(s.B, 0), shifted(s.B, 1), shifted(s.D, 0), shifted(s.D, 1)}};
}

std::array<double, 2> rhs_quadratic(const EllipticSystem& s, double theta) {
  const double c = std::cos(theta);
  const double sn = std::sin(theta);
  return {-2.0 * (c * s.A.trace() + sn * s.B.trace()), -2.0 * (c * s.C.trace() + sn * s.D.trace())};
}

std::array<double, 4> rhs_cubic(const EllipticSystem& s, double theta) {
  const double c = std::cos(theta);
  const double sn = std::sin(theta);
  // Hess(x (x^2 + y^2)) = x diag(6, 2) + y offdiag(2).
  const auto xpart = [](SymMat2 m) { return 6.0 * m.m11 + 2.0 * m.m22; };
  const auto ypart = [](SymMat2 m) { return 4.0 * m.m12; };
  return {-(c * xpart(s.A) + sn * xpart(s.B)), -(c * ypart(s.A) + sn * ypart(s.B)),
          -(c * xpart(s.C) + sn * xpart(s.D)), -(c * ypart(s.C) + sn * ypart(s.D))};
}

ThetaChoice select_theta(const Mat23& F, const Mat23& G) { return select_theta_impl(F, G); }
ThetaChoice select_theta(const Mat44& F, const Mat44& G) { return select_theta_impl(F, G); }

BivariatePoly quadratic_poly(double a, double b, double c) {
  BivariatePoly p;
  p.set(2, 0, 0.5 * a);
  p.set(1, 1, b);
  p.set(0, 2, 0.5 * c);
  return p;
}

BivariatePoly cubic_poly(double a, double b, double c, double d) {
  BivariatePoly q;
  q.set(3, 0, a / 6.0);
  q.set(2, 1, 0.5 * b);
  q.set(1, 2, 0.5 * c);
  q.set(0, 3, d / 6.0);
  return q;
}

PlanarPolyMap quadratic_map(const QuadraticSolution& sol) {
  const BivariatePoly r2 = BivariatePoly::monomial(2, 0) + BivariatePoly::monomial(0, 2);
  return rotate({r2, quadratic_poly(sol.a, sol.b, sol.c)}, sol.theta);
}

PlanarPolyMap cubic_map(const CubicSolution& sol) {
  const BivariatePoly xr2 = BivariatePoly::monomial(3, 0) + BivariatePoly::monomial(1, 2);
  return rotate({xr2, cubic_poly(sol.a, sol.b, sol.c, sol.d)}, sol.theta);
}

QuadraticSolution synthesize_quadratic(const EllipticSystem& system) {
  require_not_diagonalizable(system);
  const auto [F, G] = build_fg_quadratic(system);
  const ThetaChoice choice = theta_or_ill_conditioned(F, G);

  const Eigen::MatrixXd m = combine(F, G, choice.theta);
  const auto y = rhs_quadratic(system, choice.theta);
  // Underdetermined 2x3: the SVD solve returns the minimum-norm solution.
  const Eigen::Vector3d coeffs =
      m.jacobiSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(Eigen::Vector2d(y[0], y[1]));

  QuadraticSolution sol{choice.theta, coeffs(0), coeffs(1), coeffs(2), 0.0, choice.sigma_min};
  sol.residual_norm = relative_residual(system, quadratic_map(sol));
  if (!(sol.residual_norm <= kResidualTolerance)) {
    throw Error(ErrorCode::IllConditioned, "assembled quadratic map does not solve the system");
  }
  return sol;
}

CubicSolution synthesize_cubic(const EllipticSystem& system) {
  require_not_diagonalizable(system);
  const auto [F, G] = build_fg_cubic(system);
  const ThetaChoice choice = theta_or_ill_conditioned(F, G);

  const Eigen::MatrixXd m = combine(F, G, choice.theta);
  const auto y = rhs_cubic(system, choice.theta);
  const Eigen::Vector4d coeffs = m.fullPivLu().solve(Eigen::Vector4d(y[0], y[1], y[2], y[3]));

  CubicSolution sol{choice.theta, coeffs(0), coeffs(1), coeffs(2), coeffs(3), 0.0,
                    choice.sigma_min};
  sol.residual_norm = relative_residual(system, cubic_map(sol));
  if (!(sol.residual_norm <= kResidualTolerance)) {
    throw Error(ErrorCode::IllConditioned, "assembled cubic map does not solve the system");
  }
  return sol;
}

}  // namespace interpen
