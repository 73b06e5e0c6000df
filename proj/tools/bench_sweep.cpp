// Times the OpenMP sweep against the serial reference on the Figure-style
// grid and checks that both produce identical rows.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "deltashell/solver.hpp"

using namespace deltashell;
using clock_type = std::chrono::steady_clock;

static double seconds(clock_type::time_point a, clock_type::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

int main() {
  const std::vector<double> rhos = {0.5, 1.0, 2.0, 10.0};
  const double A_min = 0.0, A_max = 3.2;
  const int steps = 321;

  const auto t0 = clock_type::now();
  const auto serial = sweep_serial(rhos, A_min, A_max, steps);
  const auto t1 = clock_type::now();
  const auto parallel = sweep(rhos, A_min, A_max, steps);
  const auto t2 = clock_type::now();

  bool identical = serial.size() == parallel.size();
  for (size_t i = 0; identical && i < serial.size(); ++i) {
    const auto& a = serial[i];
    const auto& b = parallel[i];
    identical = a.rho == b.rho && a.coupling_A == b.coupling_A &&
                a.status == b.status &&
                (a.status != SpectrumStatus::Bound || a.epsilon == b.epsilon);
  }

  const double ts = seconds(t0, t1), tp = seconds(t1, t2);
  const double n = static_cast<double>(serial.size());
#ifdef _OPENMP
  std::printf("threads:  %d\n", omp_get_max_threads());
#else
  std::printf("threads:  1 (OpenMP disabled)\n");
#endif
  std::printf("rows:     %zu\n", serial.size());
  std::printf("serial:   %.3f s  (%.0f rows/s)\n", ts, n / ts);
  std::printf("parallel: %.3f s  (%.0f rows/s)\n", tp, n / tp);
  std::printf("speedup:  %.2fx\n", ts / tp);
  std::printf("outputs identical: %s\n", identical ? "yes" : "NO");
  return identical ? 0 : 1;
}
