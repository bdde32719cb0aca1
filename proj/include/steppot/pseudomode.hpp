#ifndef STEPPOT_PSEUDOMODE_HPP
#define STEPPOT_PSEUDOMODE_HPP

#include <utility>

#include "steppot/scalar.hpp"
#include "steppot/types.hpp"

namespace steppot {

// Coefficients of the trial function
//   Psi(x) = (n1 e^{k- x} + n2 e^{conj(k-) x})            for x < 0,
//            (p1 e^{-k+ x} + p2 e^{-conj(k+) x})          for x > 0,
// continuous at the origin and satisfying the derivative (jump) condition.
struct PseudomodeCoeffs {
  cplx n1;
  cplx n2;
  cplx p1;
  cplx p2;
  WaveNumbers k;
  cplx alpha;
  bool degenerate_im_v;  // Im V+ == Im V-: the optimal tail choice degenerates
};

// Coefficients for a caller-chosen tail pair (n2, p2); n1 and p1 are solved
// from the matching conditions at the origin.
PseudomodeCoeffs pseudomode_coeffs_for(const StepPotential& pot, const Interaction& inter,
                                       const SpectralPoint& z, cplx n2, cplx p2);

// Optimal tail choice n2 = -|Im V+ - Im z|, p2 = |Im V- - Im z|.
PseudomodeCoeffs pseudomode_coeffs(const StepPotential& pot, const Interaction& inter,
                                   const SpectralPoint& z);

// Pointwise value; x = 0 returns the common boundary value p1 + p2.
cplx pseudomode_eval(const PseudomodeCoeffs& coeffs, double x);

// Exact quotient ||(L - z) Psi|| / ||Psi|| in closed form.  The squared
// denominator is the exact L2 norm including the cross terms
// Re(n1 conj(n2)/k-) and Re(p1 conj(p2)/k+); it is validated against
// adaptive quadrature in the test suite.
double pseudomode_quotient_exact(const PseudomodeCoeffs& coeffs, const StepPotential& pot,
                                 const SpectralPoint& z);
double pseudomode_quotient_exact(const StepPotential& pot, const Interaction& inter,
                                 const SpectralPoint& z);

// Leading-order quotient inside the strip:
//   alpha = 0:  (|V+ - V-| / (2 |Im V+ - Im V-|)) |Im V+ - d| |Im V- - d| / tau
//   alpha != 0: (|alpha| / |Im V+ - Im V-|) |Im V+ - d| |Im V- - d| / sqrt(tau)
double pseudomode_quotient_asymptotic(const StepPotential& pot, const Interaction& inter,
                                      const SpectralPoint& z);

// (continuity residual, derivative-jump residual), normalized by the largest
// coefficient magnitude.
std::pair<double, double> check_domain_conditions(const PseudomodeCoeffs& coeffs);

}  // namespace steppot

#endif
