// Compares the OpenMP kernels against their serial references on the two
// hot paths: exhaustive subset enumeration and the inequality grid sweep.
// Results must match bit for bit; timings are wall clock over `reps` runs.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>

#include "kcover/coverage.hpp"
#include "kcover/generators.hpp"
#include "kcover/lemma.hpp"
#include "kcover/report.hpp"

using namespace kcover;

namespace {

double time_ms(const std::function<void()>& fn, int reps) {
  const auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) fn();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count() / reps;
}

void report_row(const char* name, double serial_ms, double parallel_ms, bool equal) {
  std::printf("%-28s %10.2f ms %10.2f ms %8.2fx   %s\n", name, serial_ms,
              parallel_ms, serial_ms / parallel_ms, equal ? "results equal" : "MISMATCH");
}

}  // namespace

int main() {
  apply_thread_cap_from_env();
  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "openmp", "speedup");

  {
    const Graph g = gen_gnp(260, 0.3, 7);
    const int k = 3;
    CoverageSolution serial, parallel;
    const double serial_ms = time_ms([&] { serial = exact_best_serial(g, k); }, 3);
    const double parallel_ms = time_ms([&] { parallel = exact_best(g, k); }, 3);
    report_row("exact_best n=260 k=3", serial_ms, parallel_ms,
               serial.covered == parallel.covered && serial.vertices == parallel.vertices);
  }
  {
    CoverageSolution serial, parallel;
    const Graph g = gen_gnp(1200, 0.2, 11);
    const double serial_ms = time_ms([&] { serial = exact_best_serial(g, 2); }, 3);
    const double parallel_ms = time_ms([&] { parallel = exact_best(g, 2); }, 3);
    report_row("exact_best n=1200 k=2", serial_ms, parallel_ms,
               serial.covered == parallel.covered && serial.vertices == parallel.vertices);
  }
  {
    LemmaSweepReport serial, parallel;
    const double serial_ms =
        time_ms([&] { serial = sweep_lemma_serial(2, 10, 199, 200, 1e-9); }, 3);
    const double parallel_ms =
        time_ms([&] { parallel = sweep_lemma(2, 10, 199, 200, 1e-9); }, 3);
    report_row("sweep_lemma k=2..10", serial_ms, parallel_ms,
               serial.min_margin == parallel.min_margin &&
                   serial.argmin_c == parallel.argmin_c &&
                   serial.argmin_s == parallel.argmin_s &&
                   serial.argmin_k == parallel.argmin_k);
  }
  return 0;
}
