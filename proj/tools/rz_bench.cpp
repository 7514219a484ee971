// rz_bench: timing comparison of the OpenMP grid kernels against the
// serial reference implementation.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "rz/amoeba.hpp"
#include "rz/laurent.hpp"
#include "rz/quadrature.hpp"
#include "rz/walk_model.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

template <class F>
void bench_grid(const char* name, int dim, int n, F&& f) {
  auto t0 = Clock::now();
  const double serial = rz::grid_mean(dim, n, f, false);
  const double ts = seconds_since(t0);
  t0 = Clock::now();
  const double parallel = rz::grid_mean(dim, n, f, true);
  const double tp = seconds_since(t0);
  std::printf("%-28s serial %8.3fs  parallel %8.3fs  speedup %5.2fx  %s\n", name, ts,
              tp, ts / tp, serial == parallel ? "bit-identical" : "MISMATCH");
}

}  // namespace

int main() {
  rz::apply_thread_env();
  std::printf("threads: %d\n", rz::thread_count());

  const rz::CoinMatrix rw3 = rz::rw_coin(3);
  bench_grid("logzeta integrand d=3 n=48", 3, 48, [&](const double* theta) {
    return std::log(std::abs(rz::char_det(rw3, {theta, 3}, 0.5)));
  });

  const rz::LaurentPolynomial p2 = rz::p_rw(2, 0.9);
  bench_grid("ronkin integrand d=2 n=1024", 2, 1024, [&](const double* theta) {
    return std::log(std::abs(p2.eval_log_polar(std::array<double, 2>{0.3, -0.2},
                                               {theta, 2})));
  });

  auto t0 = Clock::now();
  const rz::AmoebaRaster raster = rz::amoeba_complement_components(
      p2, {-3.0, 3.0, -3.0, 3.0}, 600, rz::QuadratureSpec(16, 1e-9), false);
  std::printf("%-28s %8.3fs  (%zu components)\n", "amoeba raster 600^2",
              seconds_since(t0), raster.components.size());
  return 0;
}
