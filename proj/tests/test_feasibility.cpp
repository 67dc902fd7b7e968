#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "secnoma/feasibility.hpp"
#include "test_support.hpp"

using namespace secnoma;
using secnoma::testing::InstanceGenerator;

namespace {

const ChannelRealization kG(2e-5, 1e-5);

}  // namespace

TEST_CASE("interval helpers") {
  CHECK(FeasibleInterval::open(-1.0, 2.0).lower == 0.0);
  CHECK(FeasibleInterval::open(-1.0, 2.0).upper == 1.0);
  CHECK(FeasibleInterval::open(0.7, 0.7).empty);
  CHECK(FeasibleInterval::open(1.5, 3.0).empty);
  const auto iv = FeasibleInterval::open(0.2, 0.6);
  CHECK(iv.contains(0.3));
  CHECK_FALSE(iv.contains(0.2));
  CHECK_FALSE(iv.contains(0.6));
  CHECK(iv.intersect(FeasibleInterval::open(0.5, 1.0)).lower == 0.5);
  CHECK(iv.intersect(FeasibleInterval::none()).empty);
}

TEST_CASE("D1: strong device only") {
  // gap = (g1 - g2) / (g1 g2 rho) = 0.05 at rho = 1e6.
  RiMatrix ri{0.3, 0.3, 0.5, 0.2};
  const auto f = feasibility_d1(kG, 1e6, ri);
  CHECK_FALSE(f.secure);
  CHECK(f.interval_u2.empty);
  // b22 < b21 turns 1 + gap / (b22 - b21) = 1 - 1/6 into a lower bound.
  CHECK(f.interval_u1.lower == doctest::Approx(1.0 - 1.0 / 6.0).epsilon(1e-12));
  CHECK(f.interval_u1.upper == 1.0);

  ri.b22 = 0.5;
  ri.b21 = 0.2;
  const auto clipped = feasibility_d1(kG, 1e6, ri);
  CHECK(clipped.interval_u1.lower == 0.0);
  CHECK(clipped.interval_u1.upper == 1.0);

  ri.b22 = ri.b21;
  const auto equal = feasibility_d1(kG, 1e6, ri);
  CHECK(equal.interval_u1.lower == 0.0);
  CHECK(equal.interval_u1.upper == 1.0);
}

TEST_CASE("D2 bound") {
  const RiMatrix ri{0.5, 0.2, 0.2, 0.2};
  // (g1 - g2) / (g1 g2 rho (1 - b12)) = 1e-5 / (2e-10 * rho * 0.8)
  const auto high = feasibility_d2(kG, 1e10, ri);
  CHECK(high.secure);
  CHECK(high.joint.lower == doctest::Approx(6.25e-6).epsilon(1e-12));
  CHECK(high.joint.upper == 1.0);
  const auto mid = feasibility_d2(kG, 1e7, ri);
  CHECK(mid.joint.lower == doctest::Approx(0.00625).epsilon(1e-12));
  CHECK(mid.interval_u1.lower == 0.0);
  CHECK(mid.interval_u1.upper == 1.0);

  RiMatrix full = ri;
  full.b12 = 1.0;
  CHECK(feasibility_d2(kG, 1e10, full).interval_u2.empty);
  CHECK_FALSE(feasibility_d2(kG, 1e10, full).secure);
  full.b12 = 1.0 - 1e-12;
  CHECK_FALSE(feasibility_d2(kG, 1e7, full).secure);

  // Crossing of rs2 at the bound.
  const double lower = mid.joint.lower;
  CHECK(secrecy_rates(DecodingOrder::D2, lower * (1 + 1e-6), ri, kG, 1e7).rs2 > 0.0);
  CHECK(secrecy_rates(DecodingOrder::D2, lower * (1 - 1e-6), ri, kG, 1e7).rs2 == 0.0);
}

TEST_CASE("D3: strong device only") {
  const RiMatrix ri{0.5, 0.2, 0.2, 0.2};
  const auto f = feasibility_d3(kG, 1e6, ri);
  CHECK_FALSE(f.secure);
  CHECK(f.interval_u2.empty);
  // 1 - 0.05 / 0.8
  CHECK(f.interval_u1.lower == doctest::Approx(1.0 - 0.0625).epsilon(1e-12));
  // Vanishing window as g1 approaches g2.
  const ChannelRealization close(1e-5 * (1 + 1e-9), 1e-5);
  CHECK(feasibility_d3(close, 1e6, ri).interval_u1.lower > 1.0 - 1e-6);
  // Large rho pushes the bound towards 1 while rs1 stays positive inside.
  const auto big = feasibility_d3(kG, 1e12, ri);
  CHECK(big.interval_u1.lower > 0.99999);
  const double inside = 0.5 * (big.interval_u1.lower + 1.0);
  CHECK(secrecy_rates(DecodingOrder::D3, inside, ri, kG, 1e12).rs1 > 0.0);
}

TEST_CASE("D4 bound and the b11 <= b12 branch") {
  RiMatrix ri{0.5, 0.2, 0.2, 0.2};
  CHECK(feasibility_d4(kG, 1e10, ri).joint.lower == doctest::Approx(1e-5 / (2.0 * 0.3)).epsilon(1e-12));
  const auto mid = feasibility_d4(kG, 1e7, ri);
  CHECK(mid.secure);
  CHECK(mid.joint.lower == doctest::Approx(0.1 / 6.0).epsilon(1e-12));

  ri.b11 = ri.b12;
  CHECK_FALSE(feasibility_d4(kG, 1e7, ri).secure);
  ri.b11 = 0.1;
  CHECK_FALSE(feasibility_d4(kG, 1e7, ri).secure);
  CHECK(feasibility_d4(kG, 1e7, ri).interval_u2.empty);
}

TEST_CASE("secure set") {
  RiMatrix ri{0.5, 0.2, 0.2, 0.2};
  CHECK(secure_set(kG, 1e7, ri) == std::vector{DecodingOrder::D2, DecodingOrder::D4});
  ri.b11 = 0.1;
  CHECK(secure_set(kG, 1e7, ri) == std::vector{DecodingOrder::D2});
  ri.b12 = 1.0;
  CHECK(secure_set(kG, 1e7, ri).empty());
}

TEST_CASE("property: intervals agree with secrecy-rate signs on a 1e-3 grid") {
  InstanceGenerator gen(21, 0.0, 1.0);
  int checked = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto in = gen.next({30.0, 40.0, 50.0, 60.0, 70.0, 80.0});
    for (const auto order : kAllOrders) {
      const auto f = feasibility(order, in.g, in.rho_t, in.ri);
      REQUIRE(f.secure == !f.joint.empty);
      if (order == DecodingOrder::D1 || order == DecodingOrder::D3) {
        REQUIRE_FALSE(f.secure);
      }
      for (const auto* iv : {&f.interval_u1, &f.interval_u2, &f.joint}) {
        if (!iv->empty) {
          REQUIRE(iv->lower >= 0.0);
          REQUIRE(iv->upper <= 1.0);
          REQUIRE(iv->lower < iv->upper);
        }
      }
      const auto near_bound = [](const FeasibleInterval& iv, double a) {
        return !iv.empty && (std::abs(a - iv.lower) < 1e-6 || std::abs(a - iv.upper) < 1e-6);
      };
      for (int k = 0; k <= 1000; ++k) {
        const double a = k / 1000.0;
        if (k == 0 || k == 1000) continue;
        const auto rs = secrecy_rates(order, a, in.ri, in.g, in.rho_t);
        if (!near_bound(f.interval_u1, a)) {
          REQUIRE((rs.rs1 > 0.0) == f.interval_u1.contains(a));
        }
        if (!near_bound(f.interval_u2, a)) {
          REQUIRE((rs.rs2 > 0.0) == f.interval_u2.contains(a));
        }
        ++checked;
      }
    }
  }
  CHECK(checked > 3'000'000);
}
