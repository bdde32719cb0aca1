// Compares the OpenMP-parallel kernels against their serial references and
// reports timings.  The outputs are also checked for bit-identity, the same
// contract the test suite enforces.

#include <chrono>
#include <cstdio>
#include <cstring>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "steppot/kernel.hpp"
#include "steppot/scan.hpp"

namespace {

using Clock = std::chrono::steady_clock;

template <typename F>
double time_ms(F&& fn, int repeats) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = Clock::now();
    fn();
    const auto t1 = Clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

bool identical(const std::vector<steppot::cplx>& a, const std::vector<steppot::cplx>& b) {
  return a.size() == b.size() &&
         std::memcmp(a.data(), b.data(), a.size() * sizeof(steppot::cplx)) == 0;
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (OpenMP disabled)\n");
#endif

  const steppot::StepPotential pot{{0.0, 1.0}, {0.0, -1.0}};
  const steppot::Interaction none{};

  {
    const steppot::SpectralPoint z{-1.0, 0.5};
    const auto f = steppot::sample_on_symmetric_grid(
        8.0, 16.0 / 4000.0, [](double x) { return steppot::cplx{std::exp(-x * x), 0.0}; });
    steppot::SampledFunction u_par, u_ser;
    const double t_par = time_ms([&] { u_par = steppot::apply_resolvent(pot, none, z, f); }, 3);
    const double t_ser =
        time_ms([&] { u_ser = steppot::apply_resolvent_serial(pot, none, z, f); }, 3);
    std::printf("apply_resolvent   n=%zu   serial %8.1f ms   parallel %8.1f ms   speedup %.2fx   identical=%s\n",
                f.size(), t_ser, t_par, t_ser / t_par,
                identical(u_par.values, u_ser.values) ? "yes" : "NO");
  }

  {
    steppot::ScanConfig config;
    config.potential = pot;
    config.re_min = 1.0; config.re_max = 200.0;
    config.im_min = -0.9; config.im_max = 0.9;
    config.nx = 400; config.ny = 200;
    config.quantity = steppot::Quantity::bracket_upper;
    std::vector<steppot::ScanRecord> r_par, r_ser;
    const double t_par = time_ms([&] { r_par = steppot::scan(config); }, 3);
    const double t_ser = time_ms([&] { r_ser = steppot::scan_serial(config); }, 3);
    bool same = r_par.size() == r_ser.size();
    for (std::size_t i = 0; same && i < r_par.size(); ++i)
      same = std::memcmp(&r_par[i].value, &r_ser[i].value, sizeof(double)) == 0;
    std::printf("scan bracket_upper n=%zu  serial %8.1f ms   parallel %8.1f ms   speedup %.2fx   identical=%s\n",
                r_par.size(), t_ser, t_par, t_ser / t_par, same ? "yes" : "NO");
  }
  return 0;
}
