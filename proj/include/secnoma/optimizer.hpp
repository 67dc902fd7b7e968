#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "secnoma/channel.hpp"
#include "secnoma/rates.hpp"

namespace secnoma {

/// KKT case that produced a candidate. Case 1 (both multipliers zero)
/// contradicts the stationarity condition on x_c and never yields one.
enum class KktCase { Case2, Case3, Case4, NoneFeasible };

std::string_view kkt_case_name(KktCase c);

struct KktCandidate {
  double alpha;
  KktCase kkt_case;
  int root_index;  // 2..7, following the candidate numbering alpha_2* .. alpha_7*
};

/// Roots of a stationarity quadratic. `excluded` holds the Case-2 root that
/// is dropped as nonpositive; it is reported so callers can check the claim.
struct StationaryRoots {
  std::vector<KktCandidate> candidates;
  std::optional<double> excluded;
};

/// Coefficients of M1 a^3 + M2 a^2 + M3 a + M4 = 0, the rs1 = rs2 condition
/// under D2 after clearing denominators.
struct EqualRateCubic {
  double m1;
  double m2;
  double m3;
  double m4;

  std::array<double, 4> coefficients() const { return {m1, m2, m3, m4}; }
};

struct OptResult {
  DecodingOrder order = DecodingOrder::D2;
  double alpha_hat = 0.0;
  double value = 0.0;
  KktCase winning_case = KktCase::NoneFeasible;
  std::vector<KktCandidate> candidates;
  /// Set when the Case-2 root expected to be negative came out positive.
  bool excluded_root_positive = false;
};

/// The max-min optimal secure decoding order. D2 dominates D4 for both
/// devices at every alpha, so the answer does not depend on the instance.
DecodingOrder optimal_order();

/// d rs2 / d alpha = 0 under D2. Returns the '-' branch root alpha_2*; the
/// '+' branch alpha_1* goes into `excluded`. b12 = 1 yields nothing; b12 = 0
/// leaves a linear equation whose single root is returned.
StationaryRoots case2_roots(const ChannelRealization& g, double rho_t, const RiMatrix& ri);

/// d rs1 / d alpha = 0 under D2: alpha_3* and alpha_4* when real.
/// b21 = 1 or a negative discriminant yields nothing; b21 = 0 leaves a
/// linear equation whose single root is returned as alpha_3*.
StationaryRoots case3_roots(const ChannelRealization& g, double rho_t, const RiMatrix& ri);

EqualRateCubic equal_rate_cubic(const ChannelRealization& g, double rho_t, const RiMatrix& ri);

/// Real roots alpha_5*..alpha_7* of the equal-rate cubic.
std::vector<KktCandidate> case4_cubic(const ChannelRealization& g, double rho_t,
                                      const RiMatrix& ri);

/// Closed-form max-min power allocation under D2: every KKT candidate strictly
/// inside the D2 joint interval is scored by min(rs1, rs2) and the best one is
/// kept (ties within 1e-12 go to the smaller alpha). Without a surviving
/// candidate the result is NoneFeasible with value 0.
OptResult optimize(const ChannelRealization& g, double rho_t, const RiMatrix& ri);

}  // namespace secnoma
