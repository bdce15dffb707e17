// Compares the serial reference class_table against the parallel kernel.
#include "sphereblock/monodromy.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef SPHEREBLOCK_HAVE_OPENMP
#include <omp.h>
#endif

using namespace sphereblock;

namespace {

double now() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

}  // namespace

int main() {
#ifdef SPHEREBLOCK_HAVE_OPENMP
  std::printf("openmp: up to %d threads (cap via SPHEREBLOCK_THREADS)\n",
              omp_get_max_threads());
#else
  std::printf("openmp: not available, parallel kernel runs serially\n");
#endif
  std::printf("%-12s %8s %8s %10s %10s %9s\n", "pair", "|W0|", "chars",
              "serial", "parallel", "speedup");

  for (int n : {4, 5, 6}) {
    PairInvariants inv = derive_invariants(builtin_pair(BuiltinFamily::psl_pso, n));
    double t0 = now();
    MonodromyClassTable serial = class_table_serial(inv);
    double ts = now() - t0;
    t0 = now();
    MonodromyClassTable parallel = class_table(inv);
    double tp = now() - t0;
    if (serial.classes != parallel.classes) {
      std::printf("MISMATCH at n=%d: serial and parallel partitions differ\n", n);
      return 1;
    }
    std::printf("psl_pso:%-4d %8zu %8zu %9.3fs %9.3fs %8.2fx\n", n,
                inv.W0.size(), inv.C_chars.size(), ts, tp, ts / tp);
  }

  // The reference implementation is quadratic in the character count, so
  // larger ranks run the parallel kernel only.
  for (int n : {7, 8}) {
    PairInvariants inv = derive_invariants(builtin_pair(BuiltinFamily::psl_pso, n));
    double t0 = now();
    MonodromyClassTable parallel = class_table(inv);
    double tp = now() - t0;
    std::printf("psl_pso:%-4d %8zu %8zu %10s %9.3fs %9s\n", n, inv.W0.size(),
                inv.C_chars.size(), "-", tp, "-");
    if (parallel.classes.empty()) return 1;
  }
  return 0;
}
