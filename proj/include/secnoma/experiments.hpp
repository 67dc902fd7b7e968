#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "secnoma/channel.hpp"
#include "secnoma/execution.hpp"
#include "secnoma/optimizer.hpp"
#include "secnoma/rates.hpp"

namespace secnoma {

enum class AlphaRule { Optimal, Equal, Fixed };

struct BenchmarkScheme {
  std::string_view name;
  DecodingOrder order;
  AlphaRule rule;
  double alpha;  // used unless rule == Optimal
};

/// Joint optimum plus the four fixed benchmarks (order, alpha).
inline constexpr std::array<BenchmarkScheme, 5> kSchemes = {{
    {"JOINT", DecodingOrder::D2, AlphaRule::Optimal, 0.0},
    {"ODEP", DecodingOrder::D2, AlphaRule::Equal, 0.5},
    {"ODFP", DecodingOrder::D2, AlphaRule::Fixed, 0.33},
    {"FDEP", DecodingOrder::D4, AlphaRule::Equal, 0.5},
    {"FDFP", DecodingOrder::D4, AlphaRule::Fixed, 0.33},
}};

struct Series {
  std::string name;
  std::vector<double> mean;
  std::vector<double> stderr_of_mean;
};

/// Per-axis-point means over one shared realization set.
struct SweepResult {
  std::string axis_name;
  std::vector<double> axis;
  std::vector<Series> series;
  std::size_t realizations = 0;
  std::uint64_t seed = 0;
  /// Winning KKT case counts (case2, case3, case4, none-feasible) over every
  /// optimize() call made by the sweep; all zero when none was made.
  std::array<std::size_t, 4> case_counts{};

  const Series& find(std::string_view name) const;
};

struct SchemeSummary {
  std::string name;
  double mean_value;
  /// (joint - scheme) / joint * 100
  double gain_pct;
  /// (joint - scheme) / scheme * 100; infinite when the scheme mean is 0.
  double gain_over_scheme_pct;
  /// Realizations where the scheme beat the joint optimum by more than 1e-9.
  std::size_t dominance_violations;
};

struct BenchmarkResult {
  SweepResult per_rho;
  std::vector<SchemeSummary> summary;
};

struct MeanStat {
  double mean;
  double stderr_of_mean;
};

/// Ordered mean and standard error of the mean.
MeanStat mean_stat(std::span<const double> values);

/// Realizations 0..n-1 of stream family `seed`.
std::vector<ChannelRealization> draw_realizations(const SystemParams& params, std::size_t n,
                                                  std::uint64_t seed,
                                                  Execution exec = Execution::Parallel);

/// Mean rs1, rs2 and min(rs1, rs2) per order and alpha at params.rho_t_db.
/// Series are named "<order>_rs1", "<order>_rs2", "<order>_min".
SweepResult sweep_alpha(std::span<const DecodingOrder> orders, std::span<const double> alpha_grid,
                        const SystemParams& params, const RiMatrix& ri, std::size_t n_realizations,
                        std::uint64_t seed, Execution exec = Execution::Parallel);

/// Mean optimize().value per (rho_t, d2); one series per d2 named "d2_<value>".
SweepResult sweep_snr(const SystemParams& params, const RiMatrix& ri,
                      std::span<const double> rho_grid_db, std::span<const double> d2_values,
                      std::size_t n_realizations, std::uint64_t seed,
                      Execution exec = Execution::Parallel);

/// Per-rho means of every scheme plus pooled means and percentage gains.
/// Gains use pooled means (over realizations and the rho grid) in a single
/// ratio, so realizations where a scheme scores zero need no special case.
BenchmarkResult benchmark_gains(const SystemParams& params, const RiMatrix& ri,
                                std::span<const double> rho_grid_db, std::size_t n_realizations,
                                std::uint64_t seed, Execution exec = Execution::Parallel);

/// 40..80 dB in 5 dB steps.
std::vector<double> default_rho_grid_db();

/// 0, step, 2 step, ..., 1.
std::vector<double> alpha_grid(double step);

}  // namespace secnoma
