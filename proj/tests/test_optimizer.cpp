#include <doctest.h>

#include <cmath>

#include "secnoma/feasibility.hpp"
#include "secnoma/optimizer.hpp"
#include "secnoma/oracle.hpp"
#include "secnoma/polynomial.hpp"
#include "test_support.hpp"

using namespace secnoma;
using namespace secnoma::testing;

namespace {

double literal_case2_root(const Instance& in, double sign) {
  const double b = in.ri.b12, g1 = in.g.g1(), g2 = in.g.g2(), r = in.rho_t;
  const double root = std::sqrt((1 - b) * g1 * (g1 - b * g2) * (b * g2 * r + 1));
  return ((1 - b) * g1 + sign * root) / (b * (b - 1) * g1 * g2 * r);
}

double literal_case3_root(const Instance& in, double sign) {
  const double b = in.ri.b21, g1 = in.g.g1(), g2 = in.g.g2(), r = in.rho_t;
  const double root = std::sqrt((1 - b) * g2 * (b * g1 * r + 1) * (g2 - b * g1));
  return ((b - 1) * g2 * (b * g1 * r + 1) + sign * root) / (b * (b - 1) * g1 * g2 * r);
}

double rs2_stationarity(const Instance& in, double a) {
  const double g1 = in.g.g1(), g2 = in.g.g2(), r = in.rho_t, b = in.ri.b12;
  return relative_stationarity(
      [&](double x) { return std::log2(1 + (1 - x) * g2 / (x * b * g2 + 1 / r)); },
      [&](double x) { return std::log2(1 + (1 - x) * g1 / (x * g1 + 1 / r)); }, a);
}

double rs1_stationarity(const Instance& in, double a) {
  const double g1 = in.g.g1(), g2 = in.g.g2(), r = in.rho_t, b = in.ri.b21;
  return relative_stationarity(
      [&](double x) { return std::log2(1 + x * g1 / ((1 - x) * b * g1 + 1 / r)); },
      [&](double x) { return std::log2(1 + x * g2 / ((1 - x) * g2 + 1 / r)); }, a);
}

}  // namespace

TEST_CASE("optimal order is D2") { CHECK(optimal_order() == DecodingOrder::D2); }

TEST_CASE("D2 weakly dominates D4 with equal residual factors") {
  InstanceGenerator gen(31, 0.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    auto in = gen.next();
    in.ri.b21 = in.ri.b11;
    in.ri.b22 = in.ri.b12;
    for (int k = 1; k < 100; ++k) {
      const double a = k / 100.0;
      REQUIRE(min_secrecy_rate(DecodingOrder::D2, a, in.ri, in.g, in.rho_t) >=
              min_secrecy_rate(DecodingOrder::D4, a, in.ri, in.g, in.rho_t));
    }
  }
}

TEST_CASE("case 2: closed form matches the literal expression and is stationary") {
  InstanceGenerator gen(32);
  for (int i = 0; i < 500; ++i) {
    const auto in = gen.next();
    const auto roots = case2_roots(in.g, in.rho_t, in.ri);
    REQUIRE(roots.candidates.size() == 1);
    REQUIRE(roots.excluded.has_value());
    CHECK(*roots.excluded <= 0.0);
    CHECK(*roots.excluded == doctest::Approx(literal_case2_root(in, +1)).epsilon(1e-9));
    const double a2 = roots.candidates[0].alpha;
    CHECK(a2 == doctest::Approx(literal_case2_root(in, -1)).epsilon(1e-6));
    CHECK(roots.candidates[0].root_index == 2);
    if (a2 > 1e-6 && a2 < 1 - 1e-6) {
      CHECK(rs2_stationarity(in, a2) < 1e-6);
    }
  }
}

TEST_CASE("case 2 degenerate factors") {
  const ChannelRealization g(2e-5, 1e-5);
  RiMatrix ri{0.3, 1.0, 0.3, 0.3};
  CHECK(case2_roots(g, 1e7, ri).candidates.empty());
  ri.b12 = 0.0;
  const auto perfect = case2_roots(g, 1e7, ri);
  REQUIRE(perfect.candidates.size() == 1);
  CHECK_FALSE(perfect.excluded.has_value());
  const Instance in{g, 1e7, ri};
  CHECK(rs2_stationarity(in, perfect.candidates[0].alpha) < 1e-6);
  // The closed form approaches the same root as b12 -> 0.
  ri.b12 = 1e-9;
  CHECK(case2_roots(g, 1e7, ri).candidates[0].alpha ==
        doctest::Approx(perfect.candidates[0].alpha).epsilon(1e-6));
}

TEST_CASE("case 3: real roots are stationary") {
  // Real roots need g2 > b21 g1, so use small b21.
  InstanceGenerator gen(33, 0.01, 0.2);
  int found = 0;
  for (int i = 0; i < 2000; ++i) {
    const auto in = gen.next();
    const auto roots = case3_roots(in.g, in.rho_t, in.ri);
    if (roots.candidates.empty()) {
      CHECK(in.g.g2() < in.ri.b21 * in.g.g1());
      continue;
    }
    REQUIRE(roots.candidates.size() == 2);
    CHECK(roots.candidates[0].alpha == doctest::Approx(literal_case3_root(in, +1)).epsilon(1e-6));
    CHECK(roots.candidates[1].alpha == doctest::Approx(literal_case3_root(in, -1)).epsilon(1e-9));
    for (const auto& c : roots.candidates) {
      if (c.alpha > 1e-6 && c.alpha < 1 - 1e-6) {
        ++found;
        CHECK(rs1_stationarity(in, c.alpha) < 1e-6);
      }
    }
  }
  CHECK(found > 0);
}

TEST_CASE("case 3 degenerate inputs") {
  const ChannelRealization g(2e-5, 1e-5);
  RiMatrix ri{0.3, 0.3, 0.9, 0.3};  // g2 - b21 g1 < 0
  CHECK(case3_roots(g, 1e7, ri).candidates.empty());
  ri.b21 = 1.0;
  CHECK(case3_roots(g, 1e7, ri).candidates.empty());
  ri.b21 = 0.0;
  const auto perfect = case3_roots(g, 1e7, ri);
  REQUIRE(perfect.candidates.size() == 1);
  CHECK(rs1_stationarity(Instance{g, 1e7, ri}, perfect.candidates[0].alpha) < 1e-6);
}

TEST_CASE("case 4: cubic expansion and equal-rate roots") {
  InstanceGenerator gen(34);
  for (int i = 0; i < 500; ++i) {
    const auto in = gen.next();
    const auto m = equal_rate_cubic(in.g, in.rho_t, in.ri);
    const auto coeffs = m.coefficients();

    // Cross-multiplied product form of (1+G11)(1+G21) = (1+G22)(1+G12).
    const double r = in.rho_t, g1 = in.g.g1(), g2 = in.g.g2(), b12 = in.ri.b12, b21 = in.ri.b21;
    const auto product_form = [&](double a) {
      const double lhs = (1 + b21 * g1 * r - b21 * g1 * r * a + a * g1 * r) *
                         (1 + g2 * r - g2 * r * a) * (1 + b12 * g2 * r * a) * (1 + g1 * r);
      const double rhs = (1 + g2 * r + (b12 - 1) * g2 * r * a) * (1 + g1 * r * a) *
                         (1 + b21 * g1 * r - b21 * g1 * r * a) * (1 + g2 * r);
      return lhs - rhs;
    };
    for (const double a : {0.1, 0.4, 0.7, 0.95}) {
      const double scale = std::abs(product_form(a)) + std::abs(coeffs[0]) + std::abs(coeffs[3]);
      CHECK(std::abs(poly::evaluate(coeffs, a) - product_form(a)) <= 1e-9 * scale);
    }

    double norm = 0.0;
    for (const double c : coeffs) norm = std::max(norm, std::abs(c));
    const auto roots = case4_cubic(in.g, in.rho_t, in.ri);
    for (const auto& c : roots) {
      CHECK(std::abs(poly::evaluate(coeffs, c.alpha)) < 1e-9 * norm);
      if (c.alpha > 0.0 && c.alpha < 1.0) {
        const auto rs = secrecy_margins(DecodingOrder::D2, c.alpha, in.ri, in.g, in.rho_t);
        CHECK(std::abs(rs.rs1 - rs.rs2) < 1e-8 * std::max(1.0, std::abs(rs.rs1)));
      }
    }
  }
}

TEST_CASE("optimize never loses to a brute-force grid") {
  InstanceGenerator gen(35);
  for (int i = 0; i < 300; ++i) {
    const auto in = gen.next();
    const auto opt = optimize(in.g, in.rho_t, in.ri);
    CHECK_FALSE(opt.excluded_root_positive);
    const double brute = brute_force_d2(in, 10000);
    CHECK(opt.value >= brute - 1e-6);
    if (opt.winning_case != KktCase::NoneFeasible) {
      CHECK(opt.value > 0.0);
      CHECK(feasibility_d2(in.g, in.rho_t, in.ri).joint.contains(opt.alpha_hat));
      CHECK(opt.value == doctest::Approx(d2_min_rate(opt.alpha_hat, in.g.g1(), in.g.g2(),
                                                     in.rho_t, in.ri)));
    } else {
      CHECK(opt.value == 0.0);
      CHECK(brute < 1e-6);
    }
    for (const auto& c : opt.candidates) {
      CHECK(c.kkt_case != KktCase::NoneFeasible);
    }
  }
}

TEST_CASE("optimize with perfect SIC on either device") {
  InstanceGenerator gen(36);
  for (int i = 0; i < 300; ++i) {
    auto in = gen.next();
    if (i % 2 == 0) {
      in.ri.b12 = 0.0;
    } else {
      in.ri.b21 = 0.0;
    }
    CHECK(optimize(in.g, in.rho_t, in.ri).value >= brute_force_d2(in, 10000) - 1e-6);
  }
}

TEST_CASE("empty feasible window gives none-feasible") {
  const ChannelRealization g(2e-5, 1e-5);
  const RiMatrix ri{0.2, 1.0, 0.2, 0.2};
  const auto opt = optimize(g, 1e7, ri);
  CHECK(opt.winning_case == KktCase::NoneFeasible);
  CHECK(opt.value == 0.0);
  CHECK(opt.order == DecodingOrder::D2);
  // Low SNR: the lower bound exceeds 1.
  const auto low = optimize(g, 1e3, RiMatrix{0.2, 0.2, 0.2, 0.2});
  CHECK(low.winning_case == KktCase::NoneFeasible);
}

TEST_CASE("optimal split can exceed one half at 70 dB") {
  const RiMatrix ri{0.2, 0.2, 0.2, 0.2};
  int above_half = 0;
  for (std::uint64_t i = 0; i < 200; ++i) {
    const auto g = realization_at(SystemParams{}, 2024, i);
    const auto opt = optimize(g, 1e7, ri);
    if (opt.winning_case != KktCase::NoneFeasible && opt.alpha_hat > 0.5) ++above_half;
  }
  CHECK(above_half > 0);
}

TEST_CASE("regression: single connected near-optimal region") {
  for (const double beta : {0.2, 0.5}) {
    const RiMatrix ri{beta, beta, beta, beta};
    for (std::uint64_t i = 0; i < 20; ++i) {
      const auto g = realization_at(SystemParams{}, 77, i);
      const GridSpec spec{1e-4};
      double best = 0.0;
      std::vector<double> values;
      for (std::size_t k = 0; k <= spec.intervals(); ++k) {
        values.push_back(min_secrecy_rate(DecodingOrder::D2, spec.point(k), ri, g, 1e7));
        best = std::max(best, values.back());
      }
      if (best == 0.0) continue;
      int regions = 0;
      bool inside = false;
      for (const double v : values) {
        const bool near = v >= best - 1e-9;
        if (near && !inside) ++regions;
        inside = near;
      }
      CHECK(regions == 1);
    }
  }
}
