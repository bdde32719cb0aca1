#ifndef STEPPOT_KERNEL_HPP
#define STEPPOT_KERNEL_HPP

#include <functional>
#include <vector>

#include "steppot/scalar.hpp"
#include "steppot/types.hpp"

namespace steppot {

// Coefficients of the separable part of the resolvent kernel.  alpha = 0
// reduces to the interaction-free values; denom = k+ + k- + alpha.
struct KernelCoeffs {
  cplx k_pp;  // reflection weight on {x>0, y>0}
  cplx k_mm;  // reflection weight on {x<0, y<0}
  cplx k_pm;  // transmission weight on mixed signs
  cplx denom;
  WaveNumbers k;
  cplx alpha;
};

// Complex samples on a uniform grid x0, x0+h, ..., x0+(n-1)h.
struct SampledFunction {
  double x0{0.0};
  double h{0.0};
  std::vector<cplx> values;

  std::size_t size() const { return values.size(); }
  double x(std::size_t i) const { return x0 + static_cast<double>(i) * h; }
};

// Symmetric grid over [-m*h, m*h] with m = floor(L/h); the origin is a node.
SampledFunction sample_on_symmetric_grid(double half_width, double h,
                                         const std::function<cplx(double)>& fn);

KernelCoeffs kernel_coeffs(const StepPotential& pot, const Interaction& inter,
                           const SpectralPoint& z);

// Pointwise resolvent kernel.  x >= 0 counts as the + side, matching the
// potential's convention at the origin.
cplx kernel_eval(const KernelCoeffs& coeffs, double x, double y);
cplx kernel_eval(const StepPotential& pot, const Interaction& inter, const SpectralPoint& z,
                 double x, double y);

// Applies the resolvent to f by composite trapezoid quadrature on f's grid.
// The grid must be symmetric with the origin as a node so the kernel kinks at
// y = 0 and y = x never straddle a panel.  f must be supported well inside
// the grid (boundary samples below 1e-12 of the peak).  Each output row is
// summed left to right, so the parallel and serial versions are bit-identical.
SampledFunction apply_resolvent(const StepPotential& pot, const Interaction& inter,
                                const SpectralPoint& z, const SampledFunction& f);
SampledFunction apply_resolvent_serial(const StepPotential& pot, const Interaction& inter,
                                       const SpectralPoint& z, const SampledFunction& f);

}  // namespace steppot

#endif
