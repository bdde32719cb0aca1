#include "steppot/bounds.hpp"

namespace steppot {

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::inside_strip: return "inside_strip";
    case Regime::outside_num_range: return "outside_num_range";
    default: return "generic";
  }
}

SeparableBoundTerms separable_bound_terms(const StepPotential& pot, const Interaction& inter,
                                          const SpectralPoint& z) {
  const KernelCoeffs c = kernel_coeffs(pot, inter, z);
  const double rp = c.k.re_k_plus, rm = c.k.re_k_minus;
  SeparableBoundTerms t;
  t.a = std::norm(c.k_pp) / (4.0 * rp * rp);
  t.c = std::norm(c.k_mm) / (4.0 * rm * rm);
  t.d = std::norm(c.k_pm) / (4.0 * rp * rm);
  const double root = 2.0 * std::sqrt(rp * rm);
  t.b = std::abs(c.k_pm) / root * (std::abs(c.k_pp) / rp + std::abs(c.k_mm) / rm);
  t.b_tilde = ((c.k_pp * std::conj(c.k_pm)).real() / rp +
               (c.k_mm * std::conj(c.k_pm)).real() / rm) /
              root;
  return t;
}

NormBracket separable_norm_bracket(const SeparableBoundTerms& t) {
  const double upper =
      std::sqrt((std::hypot(t.a - t.c, t.b) + t.a + t.c + 2.0 * t.d) / 2.0);
  const double lower =
      std::sqrt((std::hypot(t.a - t.c, t.b_tilde) + t.a + t.c + 2.0 * t.d) / 2.0);
  return {lower, upper, Regime::generic};
}

double convolution_norm_upper(const StepPotential& pot, const SpectralPoint& z) {
  const WaveNumbers k = wavenumbers(pot, z, BranchMode::strict);
  return 1.0 / (std::abs(k.k_plus) * k.re_k_plus) + 1.0 / (std::abs(k.k_minus) * k.re_k_minus);
}

namespace {

bool inside_strip(const StepPotential& pot, const SpectralPoint& z) {
  if (pot.is_im_constant() || z.tau <= 0.0) return false;
  const double lo = std::min(pot.v_plus.imag(), pot.v_minus.imag());
  const double hi = std::max(pot.v_plus.imag(), pot.v_minus.imag());
  return z.delta > lo && z.delta < hi;
}

}  // namespace

NormBracket resolvent_norm_bracket(const StepPotential& pot, const Interaction& inter,
                                   const SpectralPoint& z, double w_tol) {
  const NormBracket sep = separable_norm_bracket(separable_bound_terms(pot, inter, z));
  const double conv = convolution_norm_upper(pot, z);
  NormBracket out{std::max(0.0, sep.lower - conv), sep.upper + conv,
                  inside_strip(pot, z) ? Regime::inside_strip : Regime::generic};
  if (!inter.zero()) return out;
  const double dnum = numerical_range_distance(pot, z);
  if (dnum <= 0.0) return out;
  const double dspec = spectrum_distance(pot, z);
  out.regime = Regime::outside_num_range;
  out.lower = std::max(out.lower, 1.0 / dspec);
  out.upper = std::min(out.upper, 1.0 / dnum);
  bool equality = in_w_region(pot, z, w_tol);
  if (!equality && pot.v_plus == cplx{0.0, 1.0} && pot.v_minus == cplx{0.0, -1.0})
    equality = in_extended_equality_region(pot, z);
  if (equality) out.lower = out.upper = 1.0 / dspec;
  return out;
}

double resolvent_norm_asymptotic(const StepPotential& pot, const Interaction& inter,
                                 const SpectralPoint& z) {
  if (pot.is_im_constant()) throw DegenerateImVError("asymptotics need Im V+ != Im V-");
  if (!inside_strip(pot, z)) {
    if (z.tau <= 0.0) throw Error("resolvent_norm_asymptotic: Re z must be positive");
    throw DeltaOutsideStripError("Im z must lie strictly between Im V+ and Im V-");
  }
  const double gaps = std::abs(pot.v_plus.imag() - z.delta) * std::abs(pot.v_minus.imag() - z.delta);
  if (inter.zero()) return 2.0 * pot.im_gap() / pot.level_gap() * z.tau / gaps;
  return pot.im_gap() * std::sqrt(z.tau) / (std::abs(inter.alpha) * gaps);
}

}  // namespace steppot
