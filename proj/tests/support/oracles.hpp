#pragma once

#include <functional>
#include <random>
#include <vector>

#include "interpen/algebra.hpp"
#include "interpen/vec2.hpp"

namespace interpen::oracle {

// min over a (xi, eta) angle grid of the Legendre-Hadamard form with unit xi, eta.
double brute_force_lh_minimum(const EllipticSystem& s, int n = 720);

// Central-difference second derivatives of f at p.
struct FdHessian {
  double xx, xy, yy;
};
FdHessian fd_hessian(const std::function<double(double, double)>& f, double x, double y,
                     double h = 1e-4);

// Residual of div(A grad u1 + B grad u2), div(C grad u1 + D grad u2) at p via finite differences.
Vec2 fd_operator(const EllipticSystem& s, const std::function<Vec2(double, double)>& u, double x,
                 double y, double h = 1e-4);

// Quadratic O(n^2) segment test in long double with no exact fallback.
bool brute_force_simple(const std::vector<Vec2>& poly);
// Andrew monotone chain hull; convex iff simple and every vertex is a hull vertex or on a hull edge.
bool hull_convex(const std::vector<Vec2>& poly);

// Smallest eigenvalue of the literal 4x4 block matrix with null-Lagrangian shift tau.
double block_min_eigenvalue(const EllipticSystem& s, double tau);
// max over a uniform tau grid.
double best_block_min_eigenvalue(const EllipticSystem& s, double tau_range, int n);

SymMat2 random_sym(std::mt19937_64& rng, double scale = 1.0);
SymMat2 random_spd(std::mt19937_64& rng);
// Random system passing is_elliptic with certified margin.
EllipticSystem random_elliptic(std::mt19937_64& rng);
// Random system equivalent to a block-diagonal one.
EllipticSystem random_diagonalizable(std::mt19937_64& rng, Mixing* mixing = nullptr,
                                     SymMat2* base = nullptr);

}  // namespace interpen::oracle
