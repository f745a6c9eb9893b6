// Serial vs OpenMP timing of the multi-start kernels. Both paths must agree.
#include <chrono>
#include <cstdio>
#include <omp.h>

#include "bjorth/ensemble.hpp"
#include "bjorth/minimax.hpp"
#include "bjorth/orthogonality.hpp"

using namespace bjorth;

namespace {

template <class F>
double time_ms(F&& f, int reps) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) f();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count() / reps;
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());
  bool agree = true;

  for (int n : {2, 4, 6}) {
    const Matrix a = gen_ginibre(n, 11, Field::Complex);
    const Matrix b = gen_ginibre(n, 12, Field::Complex);
    MinimaxOptions serial;
    serial.exec = Exec::Serial;
    MinimaxOptions parallel = serial;
    parallel.exec = Exec::Parallel;
    double vs = 0.0, vp = 0.0;
    const double ts = time_ms([&] { vs = lhs_sup_inf(a, b, serial).value; }, 3);
    const double tp = time_ms([&] { vp = lhs_sup_inf(a, b, parallel).value; }, 3);
    agree = agree && vs == vp;
    std::printf("lhs_sup_inf   n=%d  serial %8.2f ms  parallel %8.2f ms  speedup %.2fx\n", n, ts, tp, ts / tp);
  }

  SuiteConfig cfg;
  cfg.dims = {2, 3, 4};
  cfg.trials_per_dim = 4;
  cfg.seed = 5;
  cfg.exec = Exec::Serial;
  SuiteReport rs, rp;
  const double ts = time_ms([&] { rs = run_suite(cfg); }, 1);
  cfg.exec = Exec::Parallel;
  const double tp = time_ms([&] { rp = run_suite(cfg); }, 1);
  agree = agree && to_csv(rs) == to_csv(rp);
  std::printf("run_suite     36 trials   serial %8.2f ms  parallel %8.2f ms  speedup %.2fx\n", ts, tp, ts / tp);

  std::printf("serial and parallel results %s\n", agree ? "identical" : "DIFFER");
  return agree ? 0 : 1;
}
