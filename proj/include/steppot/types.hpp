#ifndef STEPPOT_TYPES_HPP
#define STEPPOT_TYPES_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace steppot {

using cplx = std::complex<double>;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// z lies on a spectral ray [V,+inf) and strict branch evaluation was requested.
struct SpectrumPointError : Error { using Error::Error; };
// k+ + k- + alpha vanished: z is the point-interaction eigenvalue.
struct EigenvalueHitError : Error { using Error::Error; };
// Im z equals Im V+ or Im V-, so the sign in the wavenumber expansion is undefined.
struct DegenerateDeltaError : Error { using Error::Error; };
// Im V+ == Im V-: the quantity needs a nonconstant imaginary part.
struct DegenerateImVError : Error { using Error::Error; };
// Im z is not strictly between Im V+ and Im V-.
struct DeltaOutsideStripError : Error { using Error::Error; };
// operation is defined only for the V = (+i, -i) model.
struct WrongModelError : Error { using Error::Error; };
struct NotInOmegaError : Error { using Error::Error; };
// sampled input reaches the quadrature boundary.
struct QuadratureDomainError : Error { using Error::Error; };
struct GridMismatchError : Error { using Error::Error; };
// discretization too coarse / too small for the declared spectral points.
struct ResolutionError : Error { using Error::Error; };
struct NoConvergenceError : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

// ---------------------------------------------------------------------------
// Domain values
// ---------------------------------------------------------------------------

// Two complex potential levels: V(x) = v_plus for x >= 0, v_minus for x < 0.
struct StepPotential {
  cplx v_plus{0.0, 0.0};
  cplx v_minus{0.0, 0.0};

  cplx at(double x) const { return x >= 0.0 ? v_plus : v_minus; }
  bool is_im_constant() const { return v_plus.imag() == v_minus.imag(); }
  double im_gap() const { return std::abs(v_plus.imag() - v_minus.imag()); }
  double level_gap() const { return std::abs(v_plus - v_minus); }
};

// Coupling of the delta term; alpha = 0 is the interaction-free operator.
struct Interaction {
  cplx alpha{0.0, 0.0};

  bool zero() const { return alpha == cplx{0.0, 0.0}; }
};

// Spectral parameter z = tau + i*delta.
struct SpectralPoint {
  cplx z;
  double tau;
  double delta;

  SpectralPoint(cplx value) : z(value), tau(value.real()), delta(value.imag()) {}
  SpectralPoint(double re, double im) : SpectralPoint(cplx{re, im}) {}
};

}  // namespace steppot

#endif
