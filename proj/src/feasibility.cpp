#include "secnoma/feasibility.hpp"

#include <algorithm>
#include <limits>

namespace secnoma {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

OrderFeasibility assemble(DecodingOrder order, FeasibleInterval u1, FeasibleInterval u2) {
  OrderFeasibility f{order, u1, u2, u1.intersect(u2), false};
  f.secure = !f.joint.empty;
  return f;
}

}  // namespace

FeasibleInterval FeasibleInterval::open(double lower, double upper) {
  const double lo = std::max(lower, 0.0);
  const double hi = std::min(upper, 1.0);
  if (!(lo < hi)) {
    return none();
  }
  return {lo, hi, false};
}

FeasibleInterval FeasibleInterval::intersect(const FeasibleInterval& other) const {
  if (empty || other.empty) {
    return none();
  }
  return open(std::max(lower, other.lower), std::min(upper, other.upper));
}

double gain_gap(const ChannelRealization& g, double rho_t) {
  return (g.g1() - g.g2()) / (g.g1() * g.g2() * rho_t);
}

OrderFeasibility feasibility_d1(const ChannelRealization& g, double rho_t, const RiMatrix& ri) {
  // Gamma11 > Gamma12  <=>  (1 - alpha)(b22 - b21) > -gap.
  const double gap = gain_gap(g, rho_t);
  const double slope = ri.b22 - ri.b21;
  FeasibleInterval u1;
  if (slope > 0.0) {
    u1 = FeasibleInterval::open(0.0, 1.0 + gap / slope);
  } else if (slope < 0.0) {
    // Dividing by a negative slope flips the inequality into a lower bound.
    u1 = FeasibleInterval::open(1.0 + gap / slope, 1.0);
  } else {
    u1 = FeasibleInterval::open(0.0, 1.0);
  }
  // Gamma22 > Gamma21 would need g2 > g1.
  return assemble(DecodingOrder::D1, u1, FeasibleInterval::none());
}

OrderFeasibility feasibility_d2(const ChannelRealization& g, double rho_t, const RiMatrix& ri) {
  const FeasibleInterval u1 = FeasibleInterval::open(0.0, 1.0);
  const double denom = 1.0 - ri.b12;
  const double lower = denom > 0.0 ? gain_gap(g, rho_t) / denom : kInf;
  return assemble(DecodingOrder::D2, u1, FeasibleInterval::open(lower, 1.0));
}

OrderFeasibility feasibility_d3(const ChannelRealization& g, double rho_t, const RiMatrix& ri) {
  const double denom = 1.0 - ri.b22;
  // With b22 = 1 the U1 condition reduces to g1 > g2.
  const double lower = denom > 0.0 ? 1.0 - gain_gap(g, rho_t) / denom : 0.0;
  return assemble(DecodingOrder::D3, FeasibleInterval::open(lower, 1.0),
                  FeasibleInterval::none());
}

OrderFeasibility feasibility_d4(const ChannelRealization& g, double rho_t, const RiMatrix& ri) {
  const FeasibleInterval u1 = FeasibleInterval::open(0.0, 1.0);
  if (!(ri.b11 > ri.b12)) {
    return assemble(DecodingOrder::D4, u1, FeasibleInterval::none());
  }
  const double lower = gain_gap(g, rho_t) / (ri.b11 - ri.b12);
  return assemble(DecodingOrder::D4, u1, FeasibleInterval::open(lower, 1.0));
}

OrderFeasibility feasibility(DecodingOrder order, const ChannelRealization& g, double rho_t,
                             const RiMatrix& ri) {
  switch (order) {
    case DecodingOrder::D1: return feasibility_d1(g, rho_t, ri);
    case DecodingOrder::D2: return feasibility_d2(g, rho_t, ri);
    case DecodingOrder::D3: return feasibility_d3(g, rho_t, ri);
    case DecodingOrder::D4: return feasibility_d4(g, rho_t, ri);
  }
  return feasibility_d1(g, rho_t, ri);
}

std::vector<DecodingOrder> secure_set(const ChannelRealization& g, double rho_t,
                                      const RiMatrix& ri) {
  std::vector<DecodingOrder> orders;
  for (const auto order : {DecodingOrder::D2, DecodingOrder::D4}) {
    if (feasibility(order, g, rho_t, ri).secure) {
      orders.push_back(order);
    }
  }
  return orders;
}

}  // namespace secnoma
