#include "steppot/fd_oracle.hpp"

#include "steppot/scalar.hpp"

namespace steppot {

namespace {

constexpr double kDecayMargin = 18.420680743952367;  // -ln(1e-8)

// LU factorization of a tridiagonal matrix with partial pivoting (upper
// bandwidth grows to 2, the usual gtsv layout).  Factor once, solve many.
class TridiagonalSolver {
 public:
  TridiagonalSolver(const std::vector<cplx>& diag, cplx lower_upper)
      : n_(diag.size()), d0_(diag), du1_(n_, cplx{0, 0}), du2_(n_, cplx{0, 0}),
        dl_(n_, cplx{0, 0}), pivoted_(n_, false) {
    for (std::size_t i = 0; i + 1 < n_; ++i) {
      du1_[i] = lower_upper;
      dl_[i] = lower_upper;
    }
    factor();
  }

  // in-place solve of T x = b
  void solve(std::vector<cplx>& b) const {
    for (std::size_t i = 0; i + 1 < n_; ++i) {
      if (pivoted_[i]) std::swap(b[i], b[i + 1]);
      b[i + 1] -= mult_[i] * b[i];
    }
    for (std::size_t ir = n_; ir-- > 0;) {
      cplx v = b[ir];
      if (ir + 1 < n_) v -= du1_[ir] * b[ir + 1];
      if (ir + 2 < n_) v -= du2_[ir] * b[ir + 2];
      b[ir] = v / d0_[ir];
    }
  }

  // solve conj(T) x = b via conjugation
  void solve_conj(std::vector<cplx>& b) const {
    for (cplx& v : b) v = std::conj(v);
    solve(b);
    for (cplx& v : b) v = std::conj(v);
  }

 private:
  void factor() {
    mult_.assign(n_ > 0 ? n_ - 1 : 0, cplx{0, 0});
    for (std::size_t i = 0; i + 1 < n_; ++i) {
      if (std::abs(dl_[i]) > std::abs(d0_[i])) {
        pivoted_[i] = true;
        std::swap(d0_[i], dl_[i]);
        std::swap(du1_[i], d0_[i + 1]);
        // row i originally had no second superdiagonal entry
        du2_[i] = du1_[i + 1];
        du1_[i + 1] = cplx{0, 0};
      }
      if (d0_[i] == cplx{0, 0}) d0_[i] = cplx{1e-300, 0};  // keep the solve finite
      const cplx m = dl_[i] / d0_[i];
      mult_[i] = m;
      d0_[i + 1] -= m * du1_[i];
      du1_[i + 1] -= m * du2_[i];
    }
    if (n_ > 0 && d0_[n_ - 1] == cplx{0, 0}) d0_[n_ - 1] = cplx{1e-300, 0};
  }

  std::size_t n_;
  std::vector<cplx> d0_, du1_, du2_, dl_, mult_;
  std::vector<bool> pivoted_;
};

double norm2(const std::vector<cplx>& v) {
  double s = 0.0;
  for (const cplx& x : v) s += std::norm(x);
  return std::sqrt(s);
}

// y = (A - z) v for the tridiagonal operator
void shifted_matvec(const Discretization& disc, cplx z, const std::vector<cplx>& v,
                    std::vector<cplx>& y) {
  const std::size_t n = disc.n;
  for (std::size_t i = 0; i < n; ++i) {
    cplx acc = (disc.diag[i] - z) * v[i];
    if (i > 0) acc += disc.off * v[i - 1];
    if (i + 1 < n) acc += disc.off * v[i + 1];
    y[i] = acc;
  }
}

}  // namespace

Discretization build_discretization(const StepPotential& pot, const Interaction& inter,
                                    double half_width, double h,
                                    std::span<const cplx> declared_z) {
  if (half_width <= 0.0 || h <= 0.0 || h > half_width)
    throw Error("build_discretization: need 0 < h <= L");
  const auto m = static_cast<std::size_t>(std::floor(half_width / h));
  Discretization disc;
  disc.half_width = half_width;
  disc.h = h;
  disc.n = 2 * m + 1;
  disc.origin_index = m;
  disc.off = -1.0 / (h * h);
  disc.diag.resize(disc.n);
  for (std::size_t i = 0; i < disc.n; ++i)
    disc.diag[i] = 2.0 / (h * h) + pot.at(disc.x(i));
  if (!inter.zero()) disc.diag[m] += inter.alpha / h;

  const double span = static_cast<double>(m) * h;
  for (const cplx& z : declared_z) {
    if (z.real() > 0.0) {
      const double max_h = 0.25 * std::min(1.0, 2.0 * 3.14159265358979323846 / std::sqrt(z.real()));
      if (h >= max_h)
        throw ResolutionError("h too coarse for declared Re z (oscillation wavelength)");
    }
    const WaveNumbers k = wavenumbers(pot, SpectralPoint(z), BranchMode::strict);
    if (std::min(k.re_k_plus, k.re_k_minus) * span <= kDecayMargin)
      throw ResolutionError("L too small for declared z (decay margin)");
  }
  return disc;
}

double oracle_resolvent_norm(const Discretization& disc, const SpectralPoint& z,
                             int max_iterations, double rel_tol) {
  std::vector<cplx> shifted(disc.diag);
  for (cplx& d : shifted) d -= z.z;
  const TridiagonalSolver solver(shifted, disc.off);

  const std::size_t n = disc.n;
  std::vector<cplx> v(n, cplx{1.0 / std::sqrt(static_cast<double>(n)), 0.0});
  std::vector<cplx> work(n);
  double rayleigh_prev = -1.0;
  for (int it = 0; it < max_iterations; ++it) {
    // w = (A-z)^{-1} (A-z)^{-H} v, two reused tridiagonal solves
    work = v;
    solver.solve_conj(work);
    solver.solve(work);
    const double nw = norm2(work);
    if (!(nw > 0.0) || !std::isfinite(nw))
      throw NoConvergenceError("oracle_resolvent_norm: iteration broke down");
    for (std::size_t i = 0; i < n; ++i) v[i] = work[i] / nw;
    shifted_matvec(disc, z.z, v, work);
    const double rayleigh = norm2(work);  // sigma estimate on the unit vector
    const double r2 = rayleigh * rayleigh;
    if (rayleigh_prev >= 0.0 && std::abs(r2 - rayleigh_prev) <= rel_tol * r2)
      return 1.0 / rayleigh;
    rayleigh_prev = r2;
  }
  throw NoConvergenceError("oracle_resolvent_norm: max iterations reached");
}

cplx oracle_eigenvalue_near(const Discretization& disc, cplx target, int max_iterations,
                            double residual_tol) {
  std::vector<cplx> shifted(disc.diag);
  for (cplx& d : shifted) d -= target;
  const TridiagonalSolver solver(shifted, disc.off);

  const std::size_t n = disc.n;
  std::vector<cplx> v(n, cplx{1.0 / std::sqrt(static_cast<double>(n)), 0.0});
  std::vector<cplx> av(n);
  for (int it = 0; it < max_iterations; ++it) {
    solver.solve(v);
    const double nv = norm2(v);
    if (!(nv > 0.0) || !std::isfinite(nv))
      throw NoConvergenceError("oracle_eigenvalue_near: iteration broke down");
    for (cplx& x : v) x /= nv;
    shifted_matvec(disc, cplx{0.0, 0.0}, v, av);
    cplx lambda{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) lambda += std::conj(v[i]) * av[i];
    double res = 0.0;
    for (std::size_t i = 0; i < n; ++i) res += std::norm(av[i] - lambda * v[i]);
    if (std::sqrt(res) < residual_tol) return lambda;
  }
  throw NoConvergenceError("oracle_eigenvalue_near: max iterations reached");
}

double oracle_residual(const Discretization& disc, const SampledFunction& u,
                       const SampledFunction& f, const SpectralPoint& z) {
  const double scale = 1.0 + disc.half_width;
  auto matches = [&](const SampledFunction& g) {
    return g.size() == disc.n && std::abs(g.h - disc.h) <= 1e-12 &&
           std::abs(g.x0 - disc.x(0)) <= 1e-12 * scale;
  };
  if (!matches(u) || !matches(f))
    throw GridMismatchError("oracle_residual: samples not on the discretization grid");
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < disc.n; ++i) {
    cplx r = (disc.diag[i] - z.z) * u.values[i] - f.values[i];
    if (i > 0) r += disc.off * u.values[i - 1];
    if (i + 1 < disc.n) r += disc.off * u.values[i + 1];
    num += std::norm(r);
    den += std::norm(f.values[i]);
  }
  if (den == 0.0) throw Error("oracle_residual: f is identically zero");
  return std::sqrt(num / den);
}

}  // namespace steppot
