// Times the serial reference sweep against the OpenMP sweep on the full
// acceptance grid and checks that both produce the same report.

#include <chrono>
#include <cmath>
#include <cstdio>

#include "dfrac/inequalities.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using Clock = std::chrono::steady_clock;

static double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int main() {
  std::vector<double> nu_list;
  for (int k = 1; k <= 20; ++k) nu_list.push_back(0.05 * k);
  const dfrac::CRule rule;  // c = -nu + 0.1j, j = 0..60
  const int n_max = 60;
  const double tol = 1e-9;

#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif

  auto t0 = Clock::now();
  const auto serial = dfrac::bernoulli_sweep_serial(nu_list, rule, n_max, tol);
  const double t_serial = seconds_since(t0);

  t0 = Clock::now();
  const auto parallel = dfrac::bernoulli_sweep(nu_list, rule, n_max, tol);
  const double t_parallel = seconds_since(t0);

  const bool same = serial.min_gap == parallel.min_gap &&
                    serial.violations.size() == parallel.violations.size() &&
                    serial.argmin.nu == parallel.argmin.nu &&
                    serial.argmin.c == parallel.argmin.c &&
                    serial.argmin.n == parallel.argmin.n;

  std::printf("serial:   %.3f s\n", t_serial);
  std::printf("parallel: %.3f s\n", t_parallel);
  std::printf("speedup:  %.2fx\n", t_serial / t_parallel);
  std::printf("reports match: %s\n", same ? "yes" : "NO");
  std::printf("min_gap = %.17g at (nu=%.17g, c=%.17g, n=%d)\n", serial.min_gap,
              serial.argmin.nu, serial.argmin.c, serial.argmin.n);
  return same ? 0 : 1;
}
