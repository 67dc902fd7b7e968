#include "secnoma/rates.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace secnoma {

void RiMatrix::validate() const {
  for (const double b : {b11, b12, b21, b22}) {
    if (!(b >= 0.0 && b <= 1.0)) {
      throw std::invalid_argument("residual interference factors must lie in [0, 1]");
    }
  }
}

OrderMatrix order_matrix(DecodingOrder order) {
  switch (order) {
    case DecodingOrder::D1: return {{{2, 2}, {1, 1}}};
    case DecodingOrder::D2: return {{{2, 1}, {1, 2}}};
    case DecodingOrder::D3: return {{{1, 2}, {2, 1}}};
    case DecodingOrder::D4: return {{{1, 1}, {2, 2}}};
  }
  throw std::invalid_argument("unknown decoding order");
}

DecodingOrder order_from_matrix(const OrderMatrix& matrix) {
  for (const auto order : kAllOrders) {
    if (order_matrix(order) == matrix) {
      return order;
    }
  }
  throw std::invalid_argument("matrix is not a valid two-device decoding order");
}

std::string_view order_name(DecodingOrder order) {
  switch (order) {
    case DecodingOrder::D1: return "D1";
    case DecodingOrder::D2: return "D2";
    case DecodingOrder::D3: return "D3";
    case DecodingOrder::D4: return "D4";
  }
  return "?";
}

DecodingOrder parse_order(std::string_view name) {
  for (const auto order : kAllOrders) {
    if (order_name(order) == name) {
      return order;
    }
  }
  throw std::invalid_argument("unknown decoding order '" + std::string(name) + "'");
}

SinrParams sinr_params(DecodingOrder order, Device n, Device m, double alpha, const RiMatrix& ri) {
  const bool d12 = order == DecodingOrder::D1 || order == DecodingOrder::D2;
  const bool d24 = order == DecodingOrder::D2 || order == DecodingOrder::D4;
  if (n == Device::U1) {
    // Device 1's message carries alpha; device 2's (1 - alpha) is the interferer.
    if (m == Device::U1) {
      return {alpha, d12 ? (1.0 - alpha) * ri.b21 : 1.0 - alpha};
    }
    return {alpha, d24 ? 1.0 - alpha : (1.0 - alpha) * ri.b22};
  }
  if (m == Device::U1) {
    return {1.0 - alpha, d12 ? alpha : alpha * ri.b11};
  }
  return {1.0 - alpha, d24 ? alpha * ri.b12 : alpha};
}

double sinr(DecodingOrder order, Device n, Device m, double alpha, const RiMatrix& ri,
            const ChannelRealization& g, double rho_t) {
  const auto [a, b] = sinr_params(order, n, m, alpha, ri);
  const double gm = g.gain(m);
  return a * gm / (b * gm + 1.0 / rho_t);
}

double data_rate(double sinr_value) { return std::log2(1.0 + sinr_value); }

SecrecyRates secrecy_margins(DecodingOrder order, double alpha, const RiMatrix& ri,
                             const ChannelRealization& g, double rho_t) {
  const auto rate = [&](Device n, Device m) {
    return data_rate(sinr(order, n, m, alpha, ri, g, rho_t));
  };
  return {rate(Device::U1, Device::U1) - rate(Device::U1, Device::U2),
          rate(Device::U2, Device::U2) - rate(Device::U2, Device::U1)};
}

SecrecyRates secrecy_rates(DecodingOrder order, double alpha, const RiMatrix& ri,
                           const ChannelRealization& g, double rho_t) {
  const auto raw = secrecy_margins(order, alpha, ri, g, rho_t);
  return {std::max(0.0, raw.rs1), std::max(0.0, raw.rs2)};
}

double min_secrecy_rate(DecodingOrder order, double alpha, const RiMatrix& ri,
                        const ChannelRealization& g, double rho_t) {
  return secrecy_rates(order, alpha, ri, g, rho_t).min();
}

}  // namespace secnoma
