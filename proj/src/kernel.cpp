#include "steppot/kernel.hpp"

namespace steppot {

SampledFunction sample_on_symmetric_grid(double half_width, double h,
                                         const std::function<cplx(double)>& fn) {
  if (half_width <= 0.0 || h <= 0.0 || h > half_width)
    throw Error("sample_on_symmetric_grid: need 0 < h <= L");
  const auto m = static_cast<std::size_t>(std::floor(half_width / h));
  SampledFunction f;
  f.h = h;
  f.x0 = -static_cast<double>(m) * h;
  f.values.resize(2 * m + 1);
  for (std::size_t i = 0; i < f.values.size(); ++i) f.values[i] = fn(f.x(i));
  return f;
}

KernelCoeffs kernel_coeffs(const StepPotential& pot, const Interaction& inter,
                           const SpectralPoint& z) {
  const WaveNumbers k = wavenumbers(pot, z, BranchMode::strict);
  const cplx a = inter.alpha;
  const cplx denom = k.k_plus + k.k_minus + a;
  if (std::abs(denom) < 1e-12 * (1.0 + std::abs(a)))
    throw EigenvalueHitError("z coincides with the point-interaction eigenvalue");
  const cplx diff = k.k_plus - k.k_minus;
  KernelCoeffs c;
  c.k_pp = (diff - a) / (2.0 * k.k_plus * denom);
  c.k_mm = -(diff + a) / (2.0 * k.k_minus * denom);
  c.k_pm = 1.0 / denom;
  c.denom = denom;
  c.k = k;
  c.alpha = a;
  return c;
}

cplx kernel_eval(const KernelCoeffs& c, double x, double y) {
  const bool xp = x >= 0.0, yp = y >= 0.0;
  if (xp && yp)
    return std::exp(-c.k.k_plus * std::abs(x - y)) / (2.0 * c.k.k_plus) +
           c.k_pp * std::exp(-c.k.k_plus * (x + y));
  if (!xp && !yp)
    return std::exp(-c.k.k_minus * std::abs(x - y)) / (2.0 * c.k.k_minus) +
           c.k_mm * std::exp(c.k.k_minus * (x + y));
  const double pos = xp ? x : y;
  const double neg = xp ? y : x;
  return c.k_pm * std::exp(-c.k.k_plus * pos + c.k.k_minus * neg);
}

cplx kernel_eval(const StepPotential& pot, const Interaction& inter, const SpectralPoint& z,
                 double x, double y) {
  return kernel_eval(kernel_coeffs(pot, inter, z), x, y);
}

namespace {

void check_apply_domain(const SampledFunction& f) {
  const std::size_t n = f.size();
  if (n < 3 || n % 2 == 0 || f.h <= 0.0)
    throw GridMismatchError("apply_resolvent: need an odd-size grid with h > 0");
  const double span = static_cast<double>(n - 1) * f.h;
  if (std::abs(f.x0 + 0.5 * span) > 1e-12 * (1.0 + span))
    throw GridMismatchError("apply_resolvent: grid must be symmetric about the origin");
  double peak = 0.0;
  for (const cplx& v : f.values) peak = std::max(peak, std::abs(v));
  if (std::abs(f.values.front()) > 1e-12 * peak || std::abs(f.values.back()) > 1e-12 * peak)
    throw QuadratureDomainError("apply_resolvent: f reaches the quadrature boundary");
}

cplx quadrature_row(const KernelCoeffs& c, const SampledFunction& f, double xi) {
  const std::size_t n = f.size();
  cplx acc{0.0, 0.0};
  for (std::size_t j = 0; j < n; ++j) {
    const double w = (j == 0 || j == n - 1) ? 0.5 * f.h : f.h;
    acc += w * kernel_eval(c, xi, f.x(j)) * f.values[j];
  }
  return acc;
}

}  // namespace

SampledFunction apply_resolvent(const StepPotential& pot, const Interaction& inter,
                                const SpectralPoint& z, const SampledFunction& f) {
  check_apply_domain(f);
  const KernelCoeffs c = kernel_coeffs(pot, inter, z);
  SampledFunction u = f;
  const auto n = static_cast<std::ptrdiff_t>(f.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i)
    u.values[static_cast<std::size_t>(i)] =
        quadrature_row(c, f, f.x(static_cast<std::size_t>(i)));
  return u;
}

SampledFunction apply_resolvent_serial(const StepPotential& pot, const Interaction& inter,
                                       const SpectralPoint& z, const SampledFunction& f) {
  check_apply_domain(f);
  const KernelCoeffs c = kernel_coeffs(pot, inter, z);
  SampledFunction u = f;
  for (std::size_t i = 0; i < f.size(); ++i) u.values[i] = quadrature_row(c, f, f.x(i));
  return u;
}

}  // namespace steppot
