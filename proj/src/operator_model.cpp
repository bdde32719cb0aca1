#include "steppot/operator_model.hpp"

namespace steppot {

namespace {

double ray_distance(cplx start, cplx z) {
  if (z.real() <= start.real()) return std::abs(z - start);
  return std::abs(z.imag() - start.imag());
}

double segment_distance(cplx a, cplx b, cplx z) {
  const cplx ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(z - a);
  double t = ((z.real() - a.real()) * ab.real() + (z.imag() - a.imag()) * ab.imag()) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(z - (a + t * ab));
}

// inner product of complex numbers viewed as vectors in R^2
double dot_r2(cplx x, cplx y) { return x.real() * y.real() + x.imag() * y.imag(); }

bool between_strict(double value, double a, double b) {
  return value > std::min(a, b) && value < std::max(a, b);
}

}  // namespace

double spectrum_distance(const StepPotential& pot, const SpectralPoint& z) {
  return std::min(ray_distance(pot.v_plus, z.z), ray_distance(pot.v_minus, z.z));
}

double numerical_range_distance(const StepPotential& pot, const SpectralPoint& z) {
  const cplx vp = pot.v_plus, vm = pot.v_minus;
  // membership: between the ray heights and right of the segment [V-, V+]
  if (vp.imag() == vm.imag()) {
    if (z.z.imag() == vp.imag() && z.z.real() >= std::min(vp.real(), vm.real())) return 0.0;
  } else {
    const double t = (z.z.imag() - vm.imag()) / (vp.imag() - vm.imag());
    if (t >= 0.0 && t <= 1.0 &&
        z.z.real() >= vm.real() + t * (vp.real() - vm.real()))
      return 0.0;
  }
  return std::min({ray_distance(vp, z.z), ray_distance(vm, z.z), segment_distance(vm, vp, z.z)});
}

bool in_w_region(const StepPotential& pot, const SpectralPoint& z, double tol) {
  if (tol <= 0.0) throw Error("in_w_region: tol must be positive");
  const double dnum = numerical_range_distance(pot, z);
  if (dnum <= 0.0) return false;
  const double dspec = spectrum_distance(pot, z);
  return std::abs(dspec - dnum) <= tol * dspec;
}

bool in_extended_equality_region(const StepPotential& pot, const SpectralPoint& z) {
  if (pot.v_plus != cplx{0.0, 1.0} || pot.v_minus != cplx{0.0, -1.0})
    throw WrongModelError("extended equality region is established for V = (+i, -i) only");
  if (z.tau >= 0.0) return false;
  return std::abs(z.delta) >= 1.0 / (z.tau * z.tau);
}

OperatorClass classify(const StepPotential& pot, const Interaction& inter) {
  const cplx vp = pot.v_plus, vm = pot.v_minus, a = inter.alpha;
  OperatorClass out{};
  out.t_self_adjoint = true;
  const bool im_v_zero = vp.imag() == 0.0 && vm.imag() == 0.0;
  const bool v_conjugate_pair = vp.real() == vm.real() && vp.imag() == -vm.imag();
  if (inter.zero()) {
    out.normal = vp.imag() == vm.imag();
    out.self_adjoint = im_v_zero;
    out.p_self_adjoint = v_conjugate_pair;
    out.pt_symmetric = v_conjugate_pair;
  } else {
    const bool alpha_real = a.imag() == 0.0;
    out.normal = im_v_zero && alpha_real;
    out.self_adjoint = im_v_zero && alpha_real;
    const bool p = v_conjugate_pair && a.real() == 0.0;
    out.p_self_adjoint = p;
    out.pt_symmetric = p;
  }
  return out;
}

double sector_vertex(const StepPotential& pot, const Interaction& inter) {
  const double min_re = std::min(pot.v_plus.real(), pot.v_minus.real());
  const double max_im = std::max(std::abs(pot.v_plus.imag()), std::abs(pot.v_minus.imag()));
  const double a1 = std::abs(inter.alpha.real()) + std::abs(inter.alpha.imag());
  return min_re - max_im - a1 * a1;
}

bool in_omega(const StepPotential& pot, const Interaction& inter) {
  if (inter.zero()) return false;  // interaction-free operator has empty point spectrum
  const cplx w = pot.v_plus - pot.v_minus;
  return std::abs(dot_r2(w, inter.alpha)) < -std::norm(inter.alpha) * inter.alpha.real();
}

bool in_omega_dual(const StepPotential& pot, const Interaction& inter) {
  if (inter.zero()) return false;
  const cplx a = inter.alpha;
  const cplx half = -a / 2.0;
  const cplx shift = (pot.v_plus - pot.v_minus) / (2.0 * a);
  return (half - shift).real() > 0.0 && (half + shift).real() > 0.0;
}

EigenResult eigen_result(const StepPotential& pot, const Interaction& inter) {
  if (!in_omega(pot, inter)) return {false, std::nullopt, std::nullopt};
  const cplx a = inter.alpha;
  const cplx w = pot.v_plus - pot.v_minus;
  const cplx z = (pot.v_plus + pot.v_minus) / 2.0 - (w * w) / (4.0 * a * a) - (a * a) / 4.0;
  const cplx decay_rate = a / 2.0 + w / (2.0 * a);    // exponent on x >= 0
  const cplx growth_rate = -(a / 2.0 - w / (2.0 * a));  // exponent on x <= 0
  return {true, z, std::make_pair(growth_rate, decay_rate)};
}

cplx eigenfunction_sample(const StepPotential& pot, const Interaction& inter, double x) {
  const EigenResult r = eigen_result(pot, inter);
  if (!r.in_omega) throw NotInOmegaError("alpha is not in Omega");
  const auto& [growth, decay] = *r.eigenfunction_rates;
  return x >= 0.0 ? std::exp(decay * x) : std::exp(growth * x);
}

bool pseudospectrum_inclusion(const StepPotential& pot, double eps, double eps_prime,
                              double m_threshold, const SpectralPoint& z) {
  if (pot.is_im_constant())
    throw DegenerateImVError("pseudospectrum inclusion set needs Im V+ != Im V-");
  if (eps <= 0.0 || eps_prime <= 0.0 || eps_prime >= 1.0)
    throw Error("pseudospectrum_inclusion: need eps > 0 and eps' in (0,1)");
  if (spectrum_distance(pot, z) < eps) return true;
  if (z.tau <= m_threshold) return false;
  if (!between_strict(z.delta, pot.v_plus.imag(), pot.v_minus.imag())) return false;
  const double bound = pot.level_gap() * std::abs(pot.v_plus.imag() - z.delta) *
                       std::abs(pot.v_minus.imag() - z.delta) /
                       (2.0 * pot.im_gap() * eps * (1.0 - eps_prime));
  return z.tau > bound;
}

}  // namespace steppot
