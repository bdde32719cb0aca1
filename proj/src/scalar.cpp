#include "steppot/scalar.hpp"

namespace steppot {

cplx principal_sqrt(cplx w) {
  if (w.imag() == 0.0) {
    if (w.real() >= 0.0) return {std::sqrt(w.real()), 0.0};
    return {0.0, std::sqrt(-w.real())};
  }
  return std::sqrt(w);
}

namespace {

bool on_ray(cplx radicand) {
  // V - z in (-inf, 0]  <=>  z in [V, +inf)
  return radicand.imag() == 0.0 && radicand.real() <= 0.0;
}

}  // namespace

WaveNumbers wavenumbers(const StepPotential& pot, const SpectralPoint& z, BranchMode mode) {
  const cplx wp = pot.v_plus - z.z;
  const cplx wm = pot.v_minus - z.z;
  if (mode == BranchMode::strict && (on_ray(wp) || on_ray(wm)))
    throw SpectrumPointError("z lies on a spectral ray");
  const cplx kp = principal_sqrt(wp);
  const cplx km = principal_sqrt(wm);
  return {kp, km, kp.real(), km.real()};
}

WaveNumbers wavenumbers_asymptotic(const StepPotential& pot, const SpectralPoint& z) {
  if (z.tau <= 0.0) throw Error("wavenumbers_asymptotic: Re z must be positive");
  if (z.delta == pot.v_plus.imag() || z.delta == pot.v_minus.imag())
    throw DegenerateDeltaError("Im z coincides with Im V+ or Im V-");
  const double rt = std::sqrt(z.tau);
  auto expand = [&](cplx v) {
    const double s = v.imag() - z.delta > 0.0 ? 1.0 : -1.0;
    const cplx correction = (cplx{v.imag() - z.delta, 0.0} - cplx{0.0, v.real()}) / (2.0 * rt);
    return s * (cplx{0.0, rt} + correction);
  };
  const cplx kp = expand(pot.v_plus);
  const cplx km = expand(pot.v_minus);
  return {kp, km, std::abs(pot.v_plus.imag() - z.delta) / (2.0 * rt),
          std::abs(pot.v_minus.imag() - z.delta) / (2.0 * rt)};
}

CircleOptimum max_quadratic_on_circle(double a, double b, double c) {
  const double r = std::hypot(a - c, b);
  const double max_value = 0.5 * (a + c + r);
  if (r == 0.0) return {max_value, 0.0};
  double angle = 0.5 * std::atan2(b, a - c);
  if (angle < 0.0) angle += 3.14159265358979323846;  // same maximizer, period pi
  return {max_value, angle};
}

}  // namespace steppot
