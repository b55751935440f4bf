// Benchmark comparing the serial reference kernels with their OpenMP
// versions: the exact dual-objective profile sum and the Monte Carlo
// simulator. The parallel results must match the serial ones exactly.

#include <omp.h>

#include <chrono>
#include <cstdio>

#include "optmech/axis1.hpp"
#include "optmech/dual.hpp"
#include "optmech/verify.hpp"

using namespace optmech;

namespace {

template <typename F>
double seconds(F body) {
  auto t0 = std::chrono::steady_clock::now();
  body();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

int main() {
  std::printf("threads available: %d\n\n", omp_get_max_threads());

  {
    // 2^20 profiles of exact rationals, 10 items.
    Axis1Setting s =
        Axis1Setting::make(2, 10, Rational(1), Rational(2), Rational(2, 5));
    TypeSpace ts = enumerate_types(s);
    std::vector<FlowGraph> flows{axis1_flow(s, 0), axis1_flow(s, 1)};
    Rational serial, parallel;
    double ts_serial = seconds(
        [&] { serial = dual_objective_serial(flows, ts, 1ull << 22); });
    double ts_parallel =
        seconds([&] { parallel = dual_objective(flows, ts, 1ull << 22); });
    std::printf("dual objective (n=2, m=10, 1048576 profiles)\n");
    std::printf("  serial    %8.3fs\n", ts_serial);
    std::printf("  openmp    %8.3fs   speedup %.2fx\n", ts_parallel,
                ts_serial / ts_parallel);
    std::printf("  exact match: %s\n\n", serial == parallel ? "yes" : "NO");
  }

  {
    Axis1Setting s =
        Axis1Setting::make(3, 4, Rational(1), Rational(2), Rational(1, 2));
    Mechanism full = axis1_expand(axis1_mechanism(s));
    const std::uint64_t trials = 4000000;
    McReport serial, parallel;
    double ts_serial =
        seconds([&] { serial = mc_simulate(full, full.ts, trials, 7, false); });
    double ts_parallel =
        seconds([&] { parallel = mc_simulate(full, full.ts, trials, 7, true); });
    std::printf("monte carlo (n=3, m=4, 4e6 trials)\n");
    std::printf("  serial    %8.3fs\n", ts_serial);
    std::printf("  openmp    %8.3fs   speedup %.2fx\n", ts_parallel,
                ts_serial / ts_parallel);
    std::printf("  bit-identical: %s\n",
                serial.revenue.mean == parallel.revenue.mean &&
                        serial.revenue.stderr_ == parallel.revenue.stderr_
                    ? "yes"
                    : "NO");
  }
  return 0;
}
