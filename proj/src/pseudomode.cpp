#include "steppot/pseudomode.hpp"

#include "steppot/bounds.hpp"

namespace steppot {

PseudomodeCoeffs pseudomode_coeffs_for(const StepPotential& pot, const Interaction& inter,
                                       const SpectralPoint& z, cplx n2, cplx p2) {
  const WaveNumbers k = wavenumbers(pot, z, BranchMode::strict);
  const cplx a = inter.alpha;
  const cplx denom = k.k_plus + k.k_minus + a;
  if (std::abs(denom) < 1e-12 * (1.0 + std::abs(a)))
    throw EigenvalueHitError("z coincides with the point-interaction eigenvalue");
  PseudomodeCoeffs c;
  c.n2 = n2;
  c.p2 = p2;
  c.n1 = -(k.k_plus + std::conj(k.k_minus) + a) / denom * n2 +
         (k.k_plus - std::conj(k.k_plus)) / denom * p2;
  c.p1 = (k.k_minus - std::conj(k.k_minus)) / denom * n2 -
         (std::conj(k.k_plus) + k.k_minus + a) / denom * p2;
  c.k = k;
  c.alpha = a;
  c.degenerate_im_v = pot.is_im_constant();
  return c;
}

PseudomodeCoeffs pseudomode_coeffs(const StepPotential& pot, const Interaction& inter,
                                   const SpectralPoint& z) {
  const cplx n2{-std::abs(pot.v_plus.imag() - z.delta), 0.0};
  const cplx p2{std::abs(pot.v_minus.imag() - z.delta), 0.0};
  return pseudomode_coeffs_for(pot, inter, z, n2, p2);
}

cplx pseudomode_eval(const PseudomodeCoeffs& c, double x) {
  if (x < 0.0)
    return c.n1 * std::exp(c.k.k_minus * x) + c.n2 * std::exp(std::conj(c.k.k_minus) * x);
  if (x > 0.0)
    return c.p1 * std::exp(-c.k.k_plus * x) + c.p2 * std::exp(-std::conj(c.k.k_plus) * x);
  return c.p1 + c.p2;
}

double pseudomode_quotient_exact(const PseudomodeCoeffs& c, const StepPotential& pot,
                                 const SpectralPoint& z) {
  if (pot.is_im_constant())
    throw DegenerateImVError("exact quotient needs Im V+ != Im V-");
  const double rp = c.k.re_k_plus, rm = c.k.re_k_minus;
  const double gm = pot.v_minus.imag() - z.delta;
  const double gp = pot.v_plus.imag() - z.delta;
  // (L - z) Psi is a single exponential per half-line with the tail weights
  const double num2 = 4.0 * gm * gm * std::norm(c.n2) / (2.0 * rm) +
                      4.0 * gp * gp * std::norm(c.p2) / (2.0 * rp);
  const double den2 = (std::norm(c.n1) + std::norm(c.n2)) / (2.0 * rm) +
                      (c.n1 * std::conj(c.n2) / c.k.k_minus).real() +
                      (std::norm(c.p1) + std::norm(c.p2)) / (2.0 * rp) +
                      (c.p1 * std::conj(c.p2) / c.k.k_plus).real();
  if (den2 <= 0.0) throw Error("pseudomode_quotient_exact: zero trial function");
  return std::sqrt(num2 / den2);
}

double pseudomode_quotient_exact(const StepPotential& pot, const Interaction& inter,
                                 const SpectralPoint& z) {
  if (pot.is_im_constant())
    throw DegenerateImVError("exact quotient needs Im V+ != Im V-");
  return pseudomode_quotient_exact(pseudomode_coeffs(pot, inter, z), pot, z);
}

double pseudomode_quotient_asymptotic(const StepPotential& pot, const Interaction& inter,
                                      const SpectralPoint& z) {
  const double norm = resolvent_norm_asymptotic(pot, inter, z);  // shares the preconditions
  return 1.0 / norm;
}

std::pair<double, double> check_domain_conditions(const PseudomodeCoeffs& c) {
  const double scale = std::max({std::abs(c.n1), std::abs(c.n2), std::abs(c.p1), std::abs(c.p2)});
  if (scale == 0.0) return {0.0, 0.0};
  const double continuity = std::abs(c.n1 + c.n2 - c.p1 - c.p2) / scale;
  const cplx d_right = -c.k.k_plus * c.p1 - std::conj(c.k.k_plus) * c.p2;
  const cplx d_left = c.k.k_minus * c.n1 + std::conj(c.k.k_minus) * c.n2;
  const double jump = std::abs(d_right - d_left - c.alpha * (c.p1 + c.p2)) / scale;
  return {continuity, jump};
}

}  // namespace steppot
