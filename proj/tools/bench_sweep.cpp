// Times the serial reference implementations against the OpenMP kernels on
// the full n-vertex sweep (enumeration + all checks) and prints a small
// comparison table.  Run as: egt-bench [n] [jobs]

#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "egt/enumerate.hpp"
#include "egt/graph6.hpp"
#include "egt/sweep.hpp"

using Clock = std::chrono::steady_clock;

static double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int main(int argc, char** argv) {
  int n = argc > 1 ? std::atoi(argv[1]) : 7;
  int jobs = argc > 2 ? std::atoi(argv[2]) : 0;
#ifdef _OPENMP
  int effective = jobs > 0 ? jobs : omp_get_max_threads();
#else
  int effective = 1;
#endif
  std::printf("sweep over all graphs on %d vertices, %d thread(s) for the parallel runs\n",
              n, effective);

  auto t0 = Clock::now();
  egt::EnumerationLevel serial_level = egt::enumerate_all_serial(n);
  double enum_serial = seconds_since(t0);

  t0 = Clock::now();
  egt::EnumerationLevel parallel_level = egt::enumerate_all(n, jobs);
  double enum_parallel = seconds_since(t0);

  if (serial_level.graphs.size() != parallel_level.graphs.size()) {
    std::fprintf(stderr, "enumeration mismatch: %zu vs %zu graphs\n",
                 serial_level.graphs.size(), parallel_level.graphs.size());
    return 1;
  }

  std::vector<egt::GraphRecord> records;
  records.reserve(parallel_level.graphs.size());
  for (const egt::Graph& g : parallel_level.graphs)
    records.push_back({g, egt::graph6_encode(g)});
  std::vector<std::string> checks;  // empty = every check

  t0 = Clock::now();
  auto serial_out = egt::evaluate_checks_serial(records, checks);
  double sweep_serial = seconds_since(t0);

  t0 = Clock::now();
  auto parallel_out = egt::evaluate_checks_parallel(records, checks, jobs);
  double sweep_parallel = seconds_since(t0);

  bool same = serial_out.size() == parallel_out.size();
  for (std::size_t i = 0; same && i < serial_out.size(); ++i) {
    for (std::size_t c = 0; same && c < serial_out[i].checks.size(); ++c) {
      const auto& a = serial_out[i].checks[c];
      const auto& b = parallel_out[i].checks[c];
      same = a.has_value() == b.has_value() &&
             (!a || (a->lhs == b->lhs && a->rhs == b->rhs && a->holds == b->holds));
    }
  }
  if (!same) {
    std::fprintf(stderr, "sweep mismatch between serial and parallel results\n");
    return 1;
  }

  std::printf("%zu graphs\n", records.size());
  std::printf("%-22s %10s %10s %8s\n", "kernel", "serial", "parallel", "speedup");
  std::printf("%-22s %9.3fs %9.3fs %7.2fx\n", "enumerate", enum_serial, enum_parallel,
              enum_parallel > 0 ? enum_serial / enum_parallel : 0.0);
  std::printf("%-22s %9.3fs %9.3fs %7.2fx\n", "checks sweep", sweep_serial, sweep_parallel,
              sweep_parallel > 0 ? sweep_serial / sweep_parallel : 0.0);
  return 0;
}
