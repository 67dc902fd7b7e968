#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace secnoma {

/// Serial loops are the reference path; parallel runs the same per-item
/// kernel under OpenMP and writes into an indexed buffer, so both produce
/// identical buffers and any ordered reduction over them is bitwise equal.
enum class Execution { Serial, Parallel };

std::string_view execution_name(Execution exec);
Execution parse_execution(std::string_view name);

template <typename T = double, typename Kernel>
std::vector<T> map_indexed(std::size_t count, Execution exec, Kernel&& kernel) {
  std::vector<T> out(count);
  if (exec == Execution::Parallel) {
    const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 64)
    for (long long i = 0; i < n; ++i) {
      out[static_cast<std::size_t>(i)] = kernel(static_cast<std::size_t>(i));
    }
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      out[i] = kernel(i);
    }
  }
  return out;
}

}  // namespace secnoma
