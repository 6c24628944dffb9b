#include "interpen/algebra.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "interpen/error.hpp"

namespace interpen {

bool SymMat2::is_finite() const noexcept {
  return std::isfinite(m11) && std::isfinite(m12) && std::isfinite(m22);
}

double frobenius_norm(SymMat2 a) noexcept { return std::sqrt(frobenius(a, a)); }

bool EllipticSystem::is_finite() const noexcept {
  return A.is_finite() && B.is_finite() && C.is_finite() && D.is_finite();
}

double EllipticSystem::max_abs_entry() const noexcept {
  double m = 0.0;
  for (const SymMat2& s : {A, B, C, D}) {
    m = std::max({m, std::abs(s.m11), std::abs(s.m12), std::abs(s.m22)});
  }
  return m;
}

Mixing Mixing::inverse() const {
  const double d = det();
  if (!(std::abs(d) > 0.0) || !std::isfinite(d)) {
    throw Error(ErrorCode::SingularMixing, "mixing matrix has zero determinant");
  }
  return {delta / d, -beta / d, -gamma / d, alpha / d};
}

namespace {

void require_finite(const EllipticSystem& system) {
  if (!system.is_finite()) {
    throw Error(ErrorCode::NonFiniteInput, "system has NaN or infinite coefficients");
  }
}

// sup |f| and sup |f'| for f(t) = Q(cos t, sin t) = mean + (m11-m22)/2 cos 2t + m12 sin 2t.
struct TrigBound {
  double sup;
  double sup_derivative;
};

TrigBound bound_of(SymMat2 q) {
  const double mean = 0.5 * q.trace();
  const double amp = std::hypot(0.5 * (q.m11 - q.m22), q.m12);
  return {std::abs(mean) + amp, 2.0 * amp};
}

}  // namespace

EllipticityVerdict is_elliptic(const EllipticSystem& system) {
  require_finite(system);
  const SymMat2 coupling = system.B + system.C;

  // The form is even in xi, so [0, pi) covers every direction.
  const double spacing = std::numbers::pi / kEllipticityAngles;
  double margin = std::numeric_limits<double>::infinity();
  int argmin = 0;
  for (int j = 0; j < kEllipticityAngles; ++j) {
    const double t = spacing * j;
    const double c = std::cos(t);
    const double s = std::sin(t);
    const double a = system.A.quad(c, s);
    const double d = system.D.quad(c, s);
    const double m = coupling.quad(c, s);
    const double g = std::min({a, d, 4.0 * a * d - m * m});
    if (g < margin) {
      margin = g;
      argmin = j;
    }
  }

  const TrigBound ba = bound_of(system.A);
  const TrigBound bd = bound_of(system.D);
  const TrigBound bm = bound_of(coupling);
  const double lipschitz =
      std::max({ba.sup_derivative, bd.sup_derivative,
                4.0 * (ba.sup_derivative * bd.sup + ba.sup * bd.sup_derivative) +
                    2.0 * bm.sup * bm.sup_derivative});

  EllipticityVerdict verdict;
  verdict.margin = margin;
  verdict.elliptic = margin > 0.0;
  verdict.lipschitz = lipschitz;
  verdict.certified_lower_bound = margin - 0.5 * lipschitz * spacing;
  if (!verdict.elliptic) {
    const double t = spacing * argmin;
    const double c = std::cos(t);
    const double s = std::sin(t);
    const double a = system.A.quad(c, s);
    const double d = system.D.quad(c, s);
    const double m = coupling.quad(c, s);
    double eta = 0.0;
    if (a <= 0.0) {
      eta = 0.0;
    } else if (d <= 0.0) {
      eta = 0.5 * std::numbers::pi;
    } else {
      // eta = (-m, 2a) gives a(4ad - m^2) <= 0.
      eta = std::atan2(2.0 * a, -m);
    }
    verdict.witness = std::make_pair(t, eta);
  }
  return verdict;
}

namespace {

using Mat4 = std::array<std::array<double, 4>, 4>;

// Determinant of the leading k x k block by Gaussian elimination with partial pivoting.
double leading_minor(Mat4 m, int k) {
  double det = 1.0;
  for (int col = 0; col < k; ++col) {
    int pivot = col;
    for (int r = col + 1; r < k; ++r) {
      if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
    }
    if (m[pivot][col] == 0.0) return 0.0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (int r = col + 1; r < k; ++r) {
      const double f = m[r][col] / m[col][col];
      for (int c = col; c < k; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

Mat4 block_matrix(const EllipticSystem& system, double tau) {
  const SymMat2 e = 0.5 * (system.B + system.C);
  const SymMat2& a = system.A;
  const SymMat2& d = system.D;
  return {{{a.m11, a.m12, e.m11, e.m12 + tau},
           {a.m12, a.m22, e.m12 - tau, e.m22},
           {e.m11, e.m12 - tau, d.m11, d.m12},
           {e.m12 + tau, e.m22, d.m12, d.m22}}};
}

bool minors_positive(const Mat4& m) {
  for (int k = 1; k <= 4; ++k) {
    if (!(leading_minor(m, k) > 0.0)) return false;
  }
  return true;
}

Eigen::Vector4d eigenvalues(const Mat4& m) {
  Eigen::Matrix4d e;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) e(i, j) = m[i][j];
  }
  return Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d>(e, Eigen::EigenvaluesOnly).eigenvalues();
}

double min_eigenvalue(const Mat4& m) { return eigenvalues(m)(0); }

}  // namespace

bool block_matrix_positive_definite(const EllipticSystem& system) {
  require_finite(system);
  return minors_positive(block_matrix(system, 0.0));
}

StrongConvexity strong_convexity(const EllipticSystem& system) {
  require_finite(system);
  StrongConvexity out;
  const double e12 = 0.5 * (system.B.m12 + system.C.m12);
  const double reach = std::sqrt(std::max(system.A.m11 * system.D.m22, 0.0)) +
                       std::sqrt(std::max(system.A.m22 * system.D.m11, 0.0));
  const auto f = [&](double tau) { return min_eigenvalue(block_matrix(system, tau)); };
  // lambda_min(M(tau)) is concave in tau and bounded above by lambda_max(M(0)) - |tau|.
  const Eigen::Vector4d ev0 = eigenvalues(block_matrix(system, 0.0));
  const double spread = ev0(3) - ev0(0);
  const double bound = std::max(reach + std::abs(e12), spread);
  double lo = -bound;
  double hi = bound;
  for (int it = 0; it < 300 && hi - lo > 1e-15 * (1.0 + bound); ++it) {
    const double m1 = lo + (hi - lo) / 3.0;
    const double m2 = hi - (hi - lo) / 3.0;
    if (f(m1) < f(m2)) {
      lo = m1;
    } else {
      hi = m2;
    }
  }
  out.tau = 0.5 * (lo + hi);
  out.min_eigenvalue = f(out.tau);
  out.convex = out.min_eigenvalue > 0.0 && minors_positive(block_matrix(system, out.tau));
  return out;
}

bool is_strongly_convex(const EllipticSystem& system) { return strong_convexity(system).convex; }

namespace {

bool in_span(SymMat2 x, SymMat2 a, double sigma, double& residual) {
  residual = frobenius_norm(x - sigma * a);
  return residual <= kSpanTolerance * (frobenius_norm(x) + frobenius_norm(a));
}

}  // namespace

ClassificationResult classify(const EllipticSystem& system) {
  if (!is_elliptic(system).elliptic) {
    throw Error(ErrorCode::NotElliptic, "system violates the Legendre-Hadamard condition");
  }
  const double aa = frobenius(system.A, system.A);
  if (!(aa > 0.0)) {
    throw Error(ErrorCode::NotElliptic, "A is numerically zero");
  }

  ClassificationResult result;
  result.sigma_b = frobenius(system.A, system.B) / aa;
  result.sigma_c = frobenius(system.A, system.C) / aa;
  result.sigma_d = frobenius(system.A, system.D) / aa;
  const bool b_in = in_span(system.B, system.A, result.sigma_b, result.residuals[0]);
  const bool c_in = in_span(system.C, system.A, result.sigma_c, result.residuals[1]);
  const bool d_in = in_span(system.D, system.A, result.sigma_d, result.residuals[2]);

  if (b_in && c_in && d_in) {
    result.variant = ClassVariant::Diagonalizable;
    result.mixing = {1.0, result.sigma_b, result.sigma_c, result.sigma_d};
    result.base = system.A;
  } else {
    result.variant = ClassVariant::NotDiagonalizable;
  }
  return result;
}

EllipticSystem lame(double mu, double lambda) {
  if (!std::isfinite(mu) || !std::isfinite(lambda)) {
    throw Error(ErrorCode::NonFiniteInput, "Lame moduli must be finite");
  }
  if (!(mu > 0.0) || !(mu + lambda > 0.0)) {
    throw Error(ErrorCode::ParameterOutOfRange, "Lame moduli require mu > 0 and mu + lambda > 0");
  }
  const SymMat2 coupling = SymMat2::offdiag(0.5 * (mu + lambda));
  return {SymMat2::diag(2.0 * mu + lambda, mu), coupling, coupling,
          SymMat2::diag(mu, 2.0 * mu + lambda)};
}

EllipticSystem perturbed_laplacian(double eps) {
  return {SymMat2::identity(), {}, {}, SymMat2::diag(1.0 + eps, 1.0)};
}

EllipticSystem apply_mixing(const EllipticSystem& s, const Mixing& mx) {
  if (!(std::abs(mx.det()) > 0.0)) {
    throw Error(ErrorCode::SingularMixing, "mixing matrix has zero determinant");
  }
  return {mx.alpha * s.A + mx.beta * s.C, mx.alpha * s.B + mx.beta * s.D,
          mx.gamma * s.A + mx.delta * s.C, mx.gamma * s.B + mx.delta * s.D};
}

}  // namespace interpen
