#pragma once

#include <array>
#include <optional>
#include <utility>

namespace interpen {

// 2x2 symmetric real matrix; only the upper triangle is stored.
struct SymMat2 {
  double m11 = 0.0;
  double m12 = 0.0;
  double m22 = 0.0;

  static constexpr SymMat2 identity() noexcept { return {1.0, 0.0, 1.0}; }
  static constexpr SymMat2 diag(double d1, double d2) noexcept { return {d1, 0.0, d2}; }
  static constexpr SymMat2 offdiag(double v) noexcept { return {0.0, v, 0.0}; }

  [[nodiscard]] constexpr double trace() const noexcept { return m11 + m22; }
  [[nodiscard]] constexpr double det() const noexcept { return m11 * m22 - m12 * m12; }
  // Quadratic form at (cos t, sin t) for the unit vector given by its components.
  [[nodiscard]] constexpr double quad(double c, double s) const noexcept {
    return m11 * c * c + 2.0 * m12 * c * s + m22 * s * s;
  }
  [[nodiscard]] bool is_finite() const noexcept;

  friend constexpr SymMat2 operator+(SymMat2 a, SymMat2 b) noexcept {
    return {a.m11 + b.m11, a.m12 + b.m12, a.m22 + b.m22};
  }
  friend constexpr SymMat2 operator-(SymMat2 a, SymMat2 b) noexcept {
    return {a.m11 - b.m11, a.m12 - b.m12, a.m22 - b.m22};
  }
  friend constexpr SymMat2 operator*(double s, SymMat2 a) noexcept {
    return {s * a.m11, s * a.m12, s * a.m22};
  }
  friend constexpr bool operator==(SymMat2, SymMat2) noexcept = default;
};

// Frobenius inner product A:B.
[[nodiscard]] constexpr double frobenius(SymMat2 a, SymMat2 b) noexcept {
  return a.m11 * b.m11 + 2.0 * a.m12 * b.m12 + a.m22 * b.m22;
}
[[nodiscard]] double frobenius_norm(SymMat2 a) noexcept;

// The constant-coefficient system
//   div(A grad u1 + B grad u2) = 0,
//   div(C grad u1 + D grad u2) = 0.
struct EllipticSystem {
  SymMat2 A;
  SymMat2 B;
  SymMat2 C;
  SymMat2 D;

  [[nodiscard]] bool is_finite() const noexcept;
  [[nodiscard]] double max_abs_entry() const noexcept;
  friend constexpr bool operator==(const EllipticSystem&, const EllipticSystem&) noexcept = default;
};

// Left block-scalar action (alpha Id, beta Id; gamma Id, delta Id).
struct Mixing {
  double alpha = 1.0;
  double beta = 0.0;
  double gamma = 0.0;
  double delta = 1.0;

  [[nodiscard]] constexpr double det() const noexcept { return alpha * delta - beta * gamma; }
  // Throws SingularMixing.
  [[nodiscard]] Mixing inverse() const;
};

struct EllipticityVerdict {
  bool elliptic = false;
  // min over sampled unit xi of min(A xi.xi, D xi.xi, 4 (A xi.xi)(D xi.xi) - ((B+C) xi.xi)^2)
  double margin = 0.0;
  // Upper bound on |d margin-function / d angle|; margin - lipschitz * spacing / 2 is a certified
  // lower bound for the continuous minimum.
  double lipschitz = 0.0;
  double certified_lower_bound = 0.0;
  // (xi angle, eta angle) with eta^T Q(xi) eta <= 0, present when not elliptic.
  std::optional<std::pair<double, double>> witness;
};

inline constexpr int kEllipticityAngles = 10000;

// Legendre-Hadamard test of the system. Throws NonFiniteInput.
[[nodiscard]] EllipticityVerdict is_elliptic(const EllipticSystem& system);

// Positive definiteness (leading principal minors) of the symmetric part of the literal 4x4
// block matrix (A, B; C, D). Throws NonFiniteInput.
[[nodiscard]] bool block_matrix_positive_definite(const EllipticSystem& system);

struct StrongConvexity {
  bool convex = false;
  double tau = 0.0;             // best null-Lagrangian shift
  double min_eigenvalue = 0.0;  // smallest eigenvalue of M(tau)
};

// Sup over tau of the smallest eigenvalue of M(tau), the 4x4 block matrix with B + tau J and
// C - tau J (J the rotation by pi/2); these all define the same operator.
[[nodiscard]] StrongConvexity strong_convexity(const EllipticSystem& system);

// strong_convexity(system).convex. Throws NonFiniteInput.
[[nodiscard]] bool is_strongly_convex(const EllipticSystem& system);

enum class ClassVariant { Diagonalizable, NotDiagonalizable };

struct ClassificationResult {
  ClassVariant variant = ClassVariant::NotDiagonalizable;
  // Projections of B, C, D onto span{A}: sigma_X = (A:X)/(A:A).
  double sigma_b = 0.0;
  double sigma_c = 0.0;
  double sigma_d = 0.0;
  // ||X - sigma_X A||_F for X = B, C, D.
  std::array<double, 3> residuals{};
  // Meaningful only when Diagonalizable: system == apply_mixing(diag(base, base), mixing).
  Mixing mixing{};
  SymMat2 base{};

  [[nodiscard]] bool diagonalizable() const noexcept {
    return variant == ClassVariant::Diagonalizable;
  }
};

inline constexpr double kSpanTolerance = 1e-9;

// Decides whether the system is equivalent to two copies of a single scalar operator.
// Throws NotElliptic.
[[nodiscard]] ClassificationResult classify(const EllipticSystem& system);

// Lame system mu div(grad u + grad u^T) + lambda grad div u = 0. Throws ParameterOutOfRange.
[[nodiscard]] EllipticSystem lame(double mu, double lambda);

// u1_xx + u1_yy = 0, (1 + eps) u2_xx + u2_yy = 0.
[[nodiscard]] EllipticSystem perturbed_laplacian(double eps);

[[nodiscard]] constexpr EllipticSystem laplacian() noexcept {
  return {SymMat2::identity(), {}, {}, SymMat2::identity()};
}

// Returns (alpha A + beta C, alpha B + beta D; gamma A + delta C, gamma B + delta D).
// Throws SingularMixing.
[[nodiscard]] EllipticSystem apply_mixing(const EllipticSystem& system, const Mixing& mixing);

}  // namespace interpen
