#pragma once

#include <vector>

#include "secnoma/channel.hpp"
#include "secnoma/rates.hpp"

namespace secnoma {

/// Open interval (lower, upper) of power fractions, clipped to [0, 1].
struct FeasibleInterval {
  double lower = 0.0;
  double upper = 0.0;
  bool empty = true;

  static FeasibleInterval none() { return {}; }
  /// (lower, upper) clipped to [0, 1]; empty when nothing remains.
  static FeasibleInterval open(double lower, double upper);

  bool contains(double alpha) const { return !empty && lower < alpha && alpha < upper; }
  FeasibleInterval intersect(const FeasibleInterval& other) const;
};

struct OrderFeasibility {
  DecodingOrder order;
  FeasibleInterval interval_u1;  // rs1 > 0
  FeasibleInterval interval_u2;  // rs2 > 0
  FeasibleInterval joint;
  bool secure = false;
};

// Each bound follows from rearranging Gamma_nn > Gamma_nm for the order's
// SINR pair. All take g1 > g2 (guaranteed by ChannelRealization).

OrderFeasibility feasibility_d1(const ChannelRealization& g, double rho_t, const RiMatrix& ri);
OrderFeasibility feasibility_d2(const ChannelRealization& g, double rho_t, const RiMatrix& ri);
OrderFeasibility feasibility_d3(const ChannelRealization& g, double rho_t, const RiMatrix& ri);
OrderFeasibility feasibility_d4(const ChannelRealization& g, double rho_t, const RiMatrix& ri);
OrderFeasibility feasibility(DecodingOrder order, const ChannelRealization& g, double rho_t,
                             const RiMatrix& ri);

/// Orders (a subset of {D2, D4}) with a nonempty joint interval. May be empty.
std::vector<DecodingOrder> secure_set(const ChannelRealization& g, double rho_t,
                                      const RiMatrix& ri);

/// (g1 - g2) / (g1 g2 rho_t), the gap term shared by every bound.
double gain_gap(const ChannelRealization& g, double rho_t);

}  // namespace secnoma
