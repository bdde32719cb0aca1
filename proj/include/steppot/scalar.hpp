#ifndef STEPPOT_SCALAR_HPP
#define STEPPOT_SCALAR_HPP

#include "steppot/types.hpp"

namespace steppot {

// Principal-branch wavenumbers k+- = sqrt(V+- - z), Re k+- > 0 off the spectrum.
struct WaveNumbers {
  cplx k_plus;
  cplx k_minus;
  double re_k_plus;
  double re_k_minus;
};

struct CircleOptimum {
  double max_value;
  double argmax_angle;  // in [0, 2*pi)
};

enum class BranchMode { lenient, strict };

// Principal square root, holomorphic off (-inf, 0].  On the cut itself
// (negative real radicand, either signed zero) returns +i*sqrt(|r|) so
// plotting sweeps that land on the rays behave deterministically.
cplx principal_sqrt(cplx w);

// k+- = principal sqrt(V+- - z).  In strict mode a z on either spectral ray
// [V+-,+inf) raises SpectrumPointError; lenient mode evaluates the cut value.
WaveNumbers wavenumbers(const StepPotential& pot, const SpectralPoint& z,
                        BranchMode mode = BranchMode::lenient);

// Two-term large-tau expansion
//   k+- ~ sgn(Im V+- - delta) * [ i sqrt(tau) + ((Im V+- - delta) - i Re V+-) / (2 sqrt(tau)) ],
//   Re k+- ~ |Im V+- - delta| / (2 sqrt(tau)),
// valid for tau > 0 and delta distinct from both Im V+-.
WaveNumbers wavenumbers_asymptotic(const StepPotential& pot, const SpectralPoint& z);

// Maximum of A x^2 + B xy + C y^2 on the unit circle:
//   (A + C + sqrt((A-C)^2 + B^2)) / 2,
// attained where (cos 2t, sin 2t) is parallel to ((A-C), B).  The tie at
// A == C, B == 0 returns angle 0.
CircleOptimum max_quadratic_on_circle(double a, double b, double c);

}  // namespace steppot

#endif
