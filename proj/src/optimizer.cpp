#include "secnoma/optimizer.hpp"

#include <cmath>

#include "secnoma/feasibility.hpp"
#include "secnoma/polynomial.hpp"

namespace secnoma {

namespace {

constexpr double kTieTolerance = 1e-12;

// With perfect SIC (beta = 0) both stationarity quadratics lose their
// leading term and share the single root 1/2 + (g1 - g2) / (2 g1 g2 rho_t).
double perfect_sic_root(const ChannelRealization& g, double rho_t) {
  const double prod = g.g1() * g.g2() * rho_t;
  return (prod + g.g1() - g.g2()) / (2.0 * prod);
}

}  // namespace

std::string_view kkt_case_name(KktCase c) {
  switch (c) {
    case KktCase::Case2: return "case2";
    case KktCase::Case3: return "case3";
    case KktCase::Case4: return "case4";
    case KktCase::NoneFeasible: return "none-feasible";
  }
  return "?";
}

DecodingOrder optimal_order() { return DecodingOrder::D2; }

StationaryRoots case2_roots(const ChannelRealization& g, double rho_t, const RiMatrix& ri) {
  const double b = ri.b12;
  if (b >= 1.0) {
    return {};
  }
  if (b <= 0.0) {
    return {{{perfect_sic_root(g, rho_t), KktCase::Case2, 2}}, std::nullopt};
  }
  const double g1 = g.g1();
  const double g2 = g.g2();
  const double p = (1.0 - b) * g1;
  const double s = std::sqrt((1.0 - b) * g1 * (g1 - b * g2) * (b * g2 * rho_t + 1.0));
  const double denom = b * (b - 1.0) * g1 * g2 * rho_t;

  StationaryRoots out;
  out.excluded = (p + s) / denom;
  // (p - s) / denom cancels badly; rationalised with (p + s) the beta factors
  // drop out and both numerator terms are positive.
  const double alpha2 = ((g1 - g2) + g2 * rho_t * (g1 - b * g2)) / (g2 * rho_t * (p + s));
  out.candidates.push_back({alpha2, KktCase::Case2, 2});
  return out;
}

StationaryRoots case3_roots(const ChannelRealization& g, double rho_t, const RiMatrix& ri) {
  const double b = ri.b21;
  if (b >= 1.0) {
    return {};
  }
  if (b <= 0.0) {
    return {{{perfect_sic_root(g, rho_t), KktCase::Case3, 3}}, std::nullopt};
  }
  const double g1 = g.g1();
  const double g2 = g.g2();
  const double k = b * g1 * rho_t + 1.0;
  const double disc = (1.0 - b) * g2 * k * (g2 - b * g1);
  if (disc < 0.0) {
    return {};
  }
  const double q = (b - 1.0) * g2 * k;
  const double t = std::sqrt(disc);
  const double denom = b * (b - 1.0) * g1 * g2 * rho_t;
  // q < 0, so q - t is computed directly and q + t through q^2 - t^2.
  const double q2_minus_t2 = (1.0 - b) * g2 * k * b * (g1 * g2 * rho_t * (1.0 - b) + (g1 - g2));

  StationaryRoots out;
  out.candidates.push_back({q2_minus_t2 / ((q - t) * denom), KktCase::Case3, 3});
  out.candidates.push_back({(q - t) / denom, KktCase::Case3, 4});
  return out;
}

EqualRateCubic equal_rate_cubic(const ChannelRealization& g, double rho_t, const RiMatrix& ri) {
  const double g1 = g.g1();
  const double g2 = g.g2();
  const double a1 = ri.b21 * g1 * rho_t + 1.0;
  const double b1 = (g1 - ri.b21 * g1) * rho_t;
  const double c1 = -ri.b21 * g1 * rho_t;
  const double d1 = g2 * rho_t + 1.0;
  const double e1 = -g2 * rho_t;
  const double f1 = (ri.b12 - 1.0) * g2 * rho_t;
  const double g1c = ri.b12 * g2 * rho_t;
  const double h1 = g1 * rho_t;
  const double i1 = g1 * rho_t + 1.0;

  EqualRateCubic m{};
  m.m1 = b1 * e1 * g1c * i1 - f1 * h1 * c1 * d1;
  m.m2 = b1 * e1 * i1 + (a1 * e1 + b1 * d1) * g1c * i1 - f1 * h1 * a1 * d1 -
         (d1 * h1 + f1) * c1 * d1;
  m.m3 = (a1 * e1 + b1 * d1) * i1 + a1 * d1 * g1c * i1 - (d1 * h1 + f1) * a1 * d1 - c1 * d1 * d1;
  // a1 d1 i1 - a1 d1^2 with i1 - d1 folded to avoid cancelling the +1 terms.
  m.m4 = a1 * d1 * (g1 - g2) * rho_t;
  return m;
}

std::vector<KktCandidate> case4_cubic(const ChannelRealization& g, double rho_t,
                                      const RiMatrix& ri) {
  const auto coeffs = equal_rate_cubic(g, rho_t, ri).coefficients();
  std::vector<KktCandidate> out;
  int index = 5;
  for (const double r : poly::real_roots(coeffs)) {
    out.push_back({r, KktCase::Case4, index++});
  }
  return out;
}

OptResult optimize(const ChannelRealization& g, double rho_t, const RiMatrix& ri) {
  OptResult result;
  result.order = optimal_order();

  const auto c2 = case2_roots(g, rho_t, ri);
  const auto c3 = case3_roots(g, rho_t, ri);
  const auto c4 = case4_cubic(g, rho_t, ri);
  result.excluded_root_positive = c2.excluded && *c2.excluded > 0.0;
  result.candidates.insert(result.candidates.end(), c2.candidates.begin(), c2.candidates.end());
  result.candidates.insert(result.candidates.end(), c3.candidates.begin(), c3.candidates.end());
  result.candidates.insert(result.candidates.end(), c4.begin(), c4.end());

  const auto window = feasibility_d2(g, rho_t, ri).joint;
  bool found = false;
  for (const auto& cand : result.candidates) {
    if (!window.contains(cand.alpha)) {
      continue;
    }
    const double value = min_secrecy_rate(result.order, cand.alpha, ri, g, rho_t);
    const bool better = !found || value > result.value + kTieTolerance ||
                        (std::abs(value - result.value) <= kTieTolerance &&
                         cand.alpha < result.alpha_hat);
    if (better) {
      found = true;
      result.alpha_hat = cand.alpha;
      result.value = value;
      result.winning_case = cand.kkt_case;
    }
  }
  return result;
}

}  // namespace secnoma
