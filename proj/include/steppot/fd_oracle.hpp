#ifndef STEPPOT_FD_ORACLE_HPP
#define STEPPOT_FD_ORACLE_HPP

#include <span>
#include <vector>

#include "steppot/kernel.hpp"
#include "steppot/types.hpp"

namespace steppot {

// Central-difference discretization of the operator on the nodes
// (i - m) h, i = 0..2m, m = floor(L/h), with Dirichlet values dropped one
// step outside.  The delta coupling is lumped as alpha/h on the origin node.
// Complex symmetric tridiagonal: constant off-diagonal -1/h^2.
struct Discretization {
  double half_width;
  double h;
  std::size_t n;
  std::size_t origin_index;
  std::vector<cplx> diag;
  double off;

  double x(std::size_t i) const {
    return (static_cast<double>(i) - static_cast<double>(origin_index)) * h;
  }
};

// Builds the matrix.  Every declared spectral point is checked against the
// resolution rule h < 0.25 min(1, 2 pi / sqrt(Re z)) and the decay margin
// Re k(z) L > -ln(1e-8); violations raise ResolutionError.
Discretization build_discretization(const StepPotential& pot, const Interaction& inter,
                                    double half_width, double h,
                                    std::span<const cplx> declared_z = {});

// 1/sigma_min(A - z) by inverse iteration on the normal equations with
// reused tridiagonal factorizations.  Deterministic all-ones start; stops when
// successive Rayleigh quotients agree to rel_tol (relative).
double oracle_resolvent_norm(const Discretization& disc, const SpectralPoint& z,
                             int max_iterations = 500, double rel_tol = 1e-10);

// Discrete eigenvalue nearest the target by shifted inverse power iteration;
// converged when the eigen-residual drops below residual_tol.
cplx oracle_eigenvalue_near(const Discretization& disc, cplx target,
                            int max_iterations = 200, double residual_tol = 1e-8);

// ||(A - z) u - f||_h / ||f||_h in the discrete l2(h) norm; u and f must be
// sampled on the discretization nodes.
double oracle_residual(const Discretization& disc, const SampledFunction& u,
                       const SampledFunction& f, const SpectralPoint& z);

}  // namespace steppot

#endif
