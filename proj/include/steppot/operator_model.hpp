#ifndef STEPPOT_OPERATOR_MODEL_HPP
#define STEPPOT_OPERATOR_MODEL_HPP

#include <optional>
#include <utility>

#include "steppot/scalar.hpp"
#include "steppot/types.hpp"

namespace steppot {

struct OperatorClass {
  bool normal;
  bool self_adjoint;
  bool t_self_adjoint;  // always true for this family
  bool p_self_adjoint;
  bool pt_symmetric;
};

// Point-spectrum answer for the delta-coupled operator.  The rates are the
// exponents of the eigenfunction: first the growth rate on x < 0 (Re > 0),
// then the decay rate on x > 0 (Re < 0).
struct EigenResult {
  bool in_omega;
  std::optional<cplx> eigenvalue;
  std::optional<std::pair<cplx, cplx>> eigenfunction_rates;
};

// Euclidean distance from z to the spectrum [V+,+inf) u [V-,+inf).
double spectrum_distance(const StepPotential& pot, const SpectralPoint& z);

// Distance from z to the closure of the numerical range, the convex hull of
// the two rays (0 when z lies inside).
double numerical_range_distance(const StepPotential& pot, const SpectralPoint& z);

// z outside the closed numerical range with equal spectrum / range distances
// (relative tolerance tol): the region where the resolvent norm equals the
// reciprocal spectral distance.
bool in_w_region(const StepPotential& pot, const SpectralPoint& z, double tol);

// Extended equality region for the V = (+i, -i) model only:
// Re z < 0 and |Im z| >= 1/(Re z)^2.  Other potentials raise WrongModelError.
bool in_extended_equality_region(const StepPotential& pot, const SpectralPoint& z);

OperatorClass classify(const StepPotential& pot, const Interaction& inter);

// Vertex of the sector containing the numerical range:
// min Re V - max |Im V| - (|Re alpha| + |Im alpha|)^2.
double sector_vertex(const StepPotential& pot, const Interaction& inter);

// Coupling region where the discrete eigenvalue exists:
// |<V+ - V-, alpha>_R2| < -|alpha|^2 Re alpha.  alpha = 0 gives false.
bool in_omega(const StepPotential& pot, const Interaction& inter);

// Equivalent two-real-parts characterization, kept as an independent route:
// Re(-alpha/2 -+ (V+ - V-)/(2 alpha)) > 0 for both signs.
bool in_omega_dual(const StepPotential& pot, const Interaction& inter);

// Eigenvalue z(alpha) = (V+ + V-)/2 - (V+ - V-)^2/(4 alpha^2) - alpha^2/4 and
// eigenfunction rates when alpha is in Omega; empty otherwise.
EigenResult eigen_result(const StepPotential& pot, const Interaction& inter);

// Value of the (unnormalized) eigenfunction at x; 1 at the origin.
cplx eigenfunction_sample(const StepPotential& pot, const Interaction& inter, double x);

// Membership in the explicit pseudospectrum inclusion set: within eps of the
// spectrum, or beyond the strip threshold
// Re z > max(M, |V+ - V-| |Im V+ - Im z| |Im V- - Im z| / (2 eps (1-eps') |Im V+ - Im V-|))
// with Im z strictly between Im V+ and Im V-.
bool pseudospectrum_inclusion(const StepPotential& pot, double eps, double eps_prime,
                              double m_threshold, const SpectralPoint& z);

}  // namespace steppot

#endif
