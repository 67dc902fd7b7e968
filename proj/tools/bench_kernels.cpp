// Times the serial reference loops against the OpenMP kernels on the
// Monte Carlo workloads and checks that both produce identical numbers.

#include <chrono>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <omp.h>

#include "secnoma/experiments.hpp"
#include "secnoma/oracle.hpp"

namespace {

template <typename F>
double time_ms(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace secnoma;
  std::size_t n = 2000;
  CLI::App app{"serial vs OpenMP kernel timings"};
  app.add_option("realizations", n, "channel realizations per workload")
      ->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);
  const SystemParams params{};
  const RiMatrix uniform_ri{0.2, 0.2, 0.2, 0.2};
  const RiMatrix benchmark_ri{0.5, 0.2, 0.5, 0.2};
  const auto rho = default_rho_grid_db();
  const std::vector<double> d2s{100.0, 150.0, 200.0};

  std::cout << "threads " << omp_get_max_threads() << ", realizations " << n << "\n";
  bool identical = true;

  {
    SweepResult serial, parallel;
    const double ts = time_ms([&] { serial = sweep_snr(params, uniform_ri, rho, d2s, n, 1, Execution::Serial); });
    const double tp = time_ms([&] { parallel = sweep_snr(params, uniform_ri, rho, d2s, n, 1, Execution::Parallel); });
    for (std::size_t s = 0; s < serial.series.size(); ++s) {
      identical = identical && serial.series[s].mean == parallel.series[s].mean;
    }
    std::cout << "sweep_snr        serial " << ts << " ms  parallel " << tp << " ms\n";
  }
  {
    BenchmarkResult serial, parallel;
    const double ts = time_ms([&] { serial = benchmark_gains(params, benchmark_ri, rho, n, 1, Execution::Serial); });
    const double tp = time_ms([&] { parallel = benchmark_gains(params, benchmark_ri, rho, n, 1, Execution::Parallel); });
    for (std::size_t s = 0; s < serial.summary.size(); ++s) {
      identical = identical && serial.summary[s].mean_value == parallel.summary[s].mean_value;
    }
    std::cout << "benchmark_gains  serial " << ts << " ms  parallel " << tp << " ms\n";
  }
  {
    const auto g = realization_at(params, 1, 0);
    const GridSpec fine{1e-6};
    GridOptimum serial{}, parallel{};
    const double ts = time_ms([&] { serial = grid_max_min(DecodingOrder::D2, g, 1e7, uniform_ri, fine, Execution::Serial); });
    const double tp = time_ms([&] { parallel = grid_max_min(DecodingOrder::D2, g, 1e7, uniform_ri, fine, Execution::Parallel); });
    identical = identical && serial.alpha == parallel.alpha && serial.value == parallel.value;
    std::cout << "grid_max_min 1e6 serial " << ts << " ms  parallel " << tp << " ms\n";
  }

  std::cout << (identical ? "serial and parallel results identical\n"
                          : "MISMATCH between serial and parallel results\n");
  return identical ? 0 : 1;
}
