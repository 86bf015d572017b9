// Timing table for the sweep kernels: the serial reference implementation
// against the chunked parallel driver. Results are asserted equal as a side
// effect, so a benchmark run doubles as a consistency check. On a single
// hardware thread the parallel column only measures chunking overhead;
// speedups need cores.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "akgraph/scan.hpp"

using namespace akgraph;

namespace {

template <typename F>
double secs(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <typename Serial, typename Parallel>
void row(const char* name, Serial&& serial, Parallel&& parallel) {
  const double ts = secs([&] {
    if (!(serial() == parallel())) {
      std::fprintf(stderr, "%s: serial and parallel disagree\n", name);
      std::exit(1);
    }
  });
  // the equality run above warms caches; now time each side alone
  const double t_serial = secs(serial);
  const double t_parallel = secs(parallel);
  std::printf("%-34s %9.3fs %9.3fs %8.2fx\n", name, t_serial, t_parallel,
              t_parallel > 0 ? t_serial / t_parallel : 0.0);
  (void)ts;
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP: both columns run the same single thread\n");
#endif
  std::printf("%-34s %10s %10s %9s\n", "kernel", "serial", "parallel", "speedup");

  row("recognition order 6 (with oracle)",
      [] { return scan::recognition_scan_serial(6, true); },
      [] { return scan::recognition_scan_parallel(6, true); });
  row("recognition order 7 (no oracle)",
      [] { return scan::recognition_scan_serial(7, false); },
      [] { return scan::recognition_scan_parallel(7, false); });
  row("witness trees order 6",
      [] { return scan::witness_tree_scan_serial(6); },
      [] { return scan::witness_tree_scan_parallel(6); });
  row("matching condition order 6",
      [] { return scan::tutte_exhaustive_serial(6); },
      [] { return scan::tutte_exhaustive_parallel(6); });
  row("matching condition 10k sampled <= 8",
      [] { return scan::tutte_sampled_serial(8, 10000, 1); },
      [] { return scan::tutte_sampled_parallel(8, 10000, 1); });
  row("extremal sweep half-order 3",
      [] { return scan::extremal_scan_serial(3); },
      [] { return scan::extremal_scan_parallel(3); });
  return 0;
}
