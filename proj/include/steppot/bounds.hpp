#ifndef STEPPOT_BOUNDS_HPP
#define STEPPOT_BOUNDS_HPP

#include "steppot/kernel.hpp"
#include "steppot/operator_model.hpp"

namespace steppot {

// Quadratic-form coefficients of the separable-part norm bound in the
// half-line masses of a unit input: a x^2 + b xy + c y^2 plus the constant d.
// b uses moduli (upper bound), b_tilde the signed real parts (lower bound);
// |b_tilde| <= b always.
struct SeparableBoundTerms {
  double a;
  double b;
  double b_tilde;
  double c;
  double d;
};

enum class Regime { inside_strip, outside_num_range, generic };

const char* regime_name(Regime r);

struct NormBracket {
  double lower;
  double upper;
  Regime regime;
};

SeparableBoundTerms separable_bound_terms(const StepPotential& pot, const Interaction& inter,
                                          const SpectralPoint& z);

// Two-sided bound for the separable part:
// sqrt((sqrt((a-c)^2 + b^2) + a + c + 2d)/2), with b_tilde on the lower side.
NormBracket separable_norm_bracket(const SeparableBoundTerms& terms);

// Schur bound for the convolution part: 1/(|k+| Re k+) + 1/(|k-| Re k-).
double convolution_norm_upper(const StepPotential& pot, const SpectralPoint& z);

// Resolvent-norm bracket.  Generic regime combines the two parts by the
// triangle inequality; for alpha = 0 and z outside the closed numerical range
// the bracket tightens to [1/dist(z,spectrum), 1/dist(z,range)] and collapses
// to equality on the W region (and, for V = (+i,-i), on the extended region).
NormBracket resolvent_norm_bracket(const StepPotential& pot, const Interaction& inter,
                                   const SpectralPoint& z, double w_tol = 1e-12);

// Leading-order norm inside the strip:
//   alpha = 0:  (2 |Im V+ - Im V-| / |V+ - V-|) tau / (|Im V+ - d| |Im V- - d|)
//   alpha != 0: |Im V+ - Im V-| sqrt(tau) / (|alpha| |Im V+ - d| |Im V- - d|)
double resolvent_norm_asymptotic(const StepPotential& pot, const Interaction& inter,
                                 const SpectralPoint& z);

}  // namespace steppot

#endif
