// Benchmark of the OpenMP sweep kernel against the serial reference.
// Verifies that both produce identical record sequences before timing.

#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "scmul/analysis.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double time_ms(const std::function<void()>& fn, int repeat) {
  double best = 1e300;
  for (int i = 0; i < repeat; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serial vs parallel sweep benchmark"};
  unsigned width = 8;
  std::string design = "proposed";
  int repeat = 3;
  int threads = 0;
  app.add_option("--b", width, "Operand width")->check(CLI::Range(2u, 8u));
  app.add_option("--design", design, "proposed|gaines|jenson|umul")
      ->check(CLI::IsMember({"proposed", "gaines", "jenson", "umul"}));
  app.add_option("--repeat", repeat, "Timing repetitions (best-of)");
  app.add_option("--threads", threads, "Thread count for the parallel kernel (0 = auto)");
  CLI11_PARSE(app, argc, argv);

  scmul::SweepConfig cfg;
  cfg.kind = scmul::multiplier_kind_from_string(design);
  cfg.width = width;
  cfg.gaines = scmul::GainesConfig::defaults(width);

  const auto serial = scmul::exhaustive_sweep_serial(cfg);
  const auto parallel = scmul::exhaustive_sweep(cfg, threads);
  if (serial != parallel) {
    std::cerr << "FAIL: parallel sweep diverges from the serial reference\n";
    return 1;
  }

  std::vector<scmul::PairRecord> sink;
  const double t_serial =
      time_ms([&] { sink = scmul::exhaustive_sweep_serial(cfg); }, repeat);
  const double t_parallel =
      time_ms([&] { sink = scmul::exhaustive_sweep(cfg, threads); }, repeat);

  int used_threads = 1;
#ifdef _OPENMP
  used_threads = threads > 0 ? threads : omp_get_max_threads();
#endif
  std::cout << "design,B,pairs,serial_ms,parallel_ms,speedup,threads\n";
  std::cout << design << ',' << width << ',' << serial.size() << ',' << t_serial
            << ',' << t_parallel << ',' << t_serial / t_parallel << ','
            << used_threads << "\n";
  return 0;
}
