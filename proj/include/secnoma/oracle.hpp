#pragma once

#include <cstddef>

#include "secnoma/channel.hpp"
#include "secnoma/execution.hpp"
#include "secnoma/rates.hpp"

namespace secnoma {

/// Uniform alpha grid over [lower, upper] with the given step. The grid is
/// lower + (upper - lower) k / N, N = round((upper - lower) / step), so a
/// grid whose step divides another's contains the coarser one exactly.
struct GridSpec {
  double step = 1e-4;
  double lower = 0.0;
  double upper = 1.0;

  void validate() const;
  std::size_t intervals() const;
  double point(std::size_t k) const;
};

struct GridOptimum {
  double alpha;
  double value;
};

/// Brute-force max over the grid of min(rs1, rs2); ties go to the smaller alpha.
GridOptimum grid_max_min(DecodingOrder order, const ChannelRealization& g, double rho_t,
                         const RiMatrix& ri, const GridSpec& spec = {},
                         Execution exec = Execution::Serial);

}  // namespace secnoma
