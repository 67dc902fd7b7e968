#include "secnoma/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace secnoma {

std::string_view execution_name(Execution exec) {
  return exec == Execution::Parallel ? "parallel" : "serial";
}

Execution parse_execution(std::string_view name) {
  if (name == "parallel") return Execution::Parallel;
  if (name == "serial") return Execution::Serial;
  throw std::invalid_argument("execution must be 'serial' or 'parallel'");
}

void GridSpec::validate() const {
  if (!(step > 0.0 && step < upper - lower)) {
    throw std::invalid_argument("grid step must satisfy 0 < step < upper - lower");
  }
}

std::size_t GridSpec::intervals() const {
  return static_cast<std::size_t>(std::llround((upper - lower) / step));
}

double GridSpec::point(std::size_t k) const {
  const std::size_t n = intervals();
  if (k == n) {
    return upper;
  }
  return lower + (upper - lower) * static_cast<double>(k) / static_cast<double>(n);
}

GridOptimum grid_max_min(DecodingOrder order, const ChannelRealization& g, double rho_t,
                         const RiMatrix& ri, const GridSpec& spec, Execution exec) {
  spec.validate();
  const std::size_t count = spec.intervals() + 1;
  const auto values = map_indexed(count, exec, [&](std::size_t k) {
    return min_secrecy_rate(order, spec.point(k), ri, g, rho_t);
  });
  GridOptimum best{spec.point(0), values[0]};
  for (std::size_t k = 1; k < count; ++k) {
    if (values[k] > best.value) {
      best = {spec.point(k), values[k]};
    }
  }
  return best;
}

}  // namespace secnoma
