#pragma once

#include <array>
#include <string_view>

#include "secnoma/channel.hpp"

namespace secnoma {

/// Residual-interference factors under the linear imperfect-SIC model.
/// b_xy is the fraction of device x's signal left over after device y
/// cancels it; 0 means perfect SIC and 1 means no cancellation at all.
struct RiMatrix {
  double b11 = 0.0;
  double b12 = 0.0;
  double b21 = 0.0;
  double b22 = 0.0;

  /// Throws std::invalid_argument unless every factor lies in [0, 1].
  void validate() const;
};

enum class DecodingOrder { D1 = 1, D2 = 2, D3 = 3, D4 = 4 };

inline constexpr std::array<DecodingOrder, 4> kAllOrders = {
    DecodingOrder::D1, DecodingOrder::D2, DecodingOrder::D3, DecodingOrder::D4};

/// Entry [k][m] is the device whose signal device m+1 decodes at stage k+1.
using OrderMatrix = std::array<std::array<int, 2>, 2>;

OrderMatrix order_matrix(DecodingOrder order);
DecodingOrder order_from_matrix(const OrderMatrix& matrix);
std::string_view order_name(DecodingOrder order);
/// Parses "D1".."D4"; throws std::invalid_argument otherwise.
DecodingOrder parse_order(std::string_view name);

/// Numerator and interference power fractions of one SINR expression.
struct SinrParams {
  double a;
  double b;
};

/// Power fractions for the SINR at device m when it decodes device n's
/// signal under the given order.
SinrParams sinr_params(DecodingOrder order, Device n, Device m, double alpha, const RiMatrix& ri);

/// a*g_m / (b*g_m + 1/rho_t)
double sinr(DecodingOrder order, Device n, Device m, double alpha, const RiMatrix& ri,
            const ChannelRealization& g, double rho_t);

/// Shannon rate log2(1 + sinr) in bits/s/Hz.
double data_rate(double sinr_value);

struct SecrecyRates {
  double rs1;
  double rs2;

  double min() const { return rs1 < rs2 ? rs1 : rs2; }
};

/// Legitimate-minus-eavesdropper rate per device, without the [.]^+ clamp.
SecrecyRates secrecy_margins(DecodingOrder order, double alpha, const RiMatrix& ri,
                             const ChannelRealization& g, double rho_t);

/// Secrecy rates clamped at zero.
SecrecyRates secrecy_rates(DecodingOrder order, double alpha, const RiMatrix& ri,
                           const ChannelRealization& g, double rho_t);

/// min(rs1, rs2), the max-min fairness objective.
double min_secrecy_rate(DecodingOrder order, double alpha, const RiMatrix& ri,
                        const ChannelRealization& g, double rho_t);

}  // namespace secnoma
