#include "secnoma/experiments.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include <fmt/format.h>

#include "secnoma/oracle.hpp"

namespace secnoma {

namespace {

constexpr double kDominanceSlack = 1e-9;

void require_realizations(std::size_t n) {
  if (n == 0) {
    throw std::invalid_argument("at least one realization is required");
  }
}

void require_nonempty(std::span<const double> grid, const char* name) {
  if (grid.empty()) {
    throw std::invalid_argument(std::string(name) + " must not be empty");
  }
}

std::size_t case_slot(KktCase c) {
  switch (c) {
    case KktCase::Case2: return 0;
    case KktCase::Case3: return 1;
    case KktCase::Case4: return 2;
    case KktCase::NoneFeasible: return 3;
  }
  return 3;
}

struct OptimalValues {
  std::vector<double> values;
  std::array<std::size_t, 4> case_counts{};
};

OptimalValues optimal_values(std::span<const ChannelRealization> gains, double rho_t,
                             const RiMatrix& ri, Execution exec) {
  const auto results = map_indexed<OptResult>(gains.size(), exec, [&](std::size_t i) {
    return optimize(gains[i], rho_t, ri);
  });
  OptimalValues out;
  out.values.reserve(results.size());
  for (const auto& r : results) {
    out.values.push_back(r.value);
    ++out.case_counts[case_slot(r.winning_case)];
  }
  return out;
}

void push_stat(Series& series, std::span<const double> values) {
  const auto stat = mean_stat(values);
  series.mean.push_back(stat.mean);
  series.stderr_of_mean.push_back(stat.stderr_of_mean);
}

}  // namespace

const Series& SweepResult::find(std::string_view name) const {
  for (const auto& s : series) {
    if (s.name == name) {
      return s;
    }
  }
  throw std::out_of_range("no series named '" + std::string(name) + "'");
}

MeanStat mean_stat(std::span<const double> values) {
  if (values.empty()) {
    return {0.0, 0.0};
  }
  const double n = static_cast<double>(values.size());
  double sum = 0.0;
  for (const double v : values) {
    sum += v;
  }
  const double mean = sum / n;
  if (values.size() < 2) {
    return {mean, 0.0};
  }
  double ss = 0.0;
  for (const double v : values) {
    ss += (v - mean) * (v - mean);
  }
  return {mean, std::sqrt(ss / (n - 1.0) / n)};
}

std::vector<ChannelRealization> draw_realizations(const SystemParams& params, std::size_t n,
                                                  std::uint64_t seed, Execution exec) {
  params.validate();
  // ChannelRealization has no default state, so draw into raw pairs first.
  const auto pairs = map_indexed<std::array<double, 2>>(n, exec, [&](std::size_t i) {
    const auto r = realization_at(params, seed, i);
    return std::array<double, 2>{r.g1(), r.g2()};
  });
  std::vector<ChannelRealization> out;
  out.reserve(n);
  for (const auto& [a, b] : pairs) {
    out.emplace_back(a, b);
  }
  return out;
}

SweepResult sweep_alpha(std::span<const DecodingOrder> orders, std::span<const double> alpha_grid,
                        const SystemParams& params, const RiMatrix& ri, std::size_t n_realizations,
                        std::uint64_t seed, Execution exec) {
  require_realizations(n_realizations);
  require_nonempty(alpha_grid, "alpha grid");
  if (orders.empty()) {
    throw std::invalid_argument("at least one decoding order is required");
  }
  ri.validate();
  const double rho_t = params.rho_t();
  const auto gains = draw_realizations(params, n_realizations, seed, exec);

  SweepResult out;
  out.axis_name = "alpha";
  out.axis.assign(alpha_grid.begin(), alpha_grid.end());
  out.realizations = n_realizations;
  out.seed = seed;
  for (const auto order : orders) {
    const std::string prefix(order_name(order));
    Series rs1{prefix + "_rs1", {}, {}};
    Series rs2{prefix + "_rs2", {}, {}};
    Series mn{prefix + "_min", {}, {}};
    for (const double alpha : alpha_grid) {
      const auto rates = map_indexed<SecrecyRates>(gains.size(), exec, [&](std::size_t i) {
        return secrecy_rates(order, alpha, ri, gains[i], rho_t);
      });
      std::vector<double> v1, v2, vm;
      v1.reserve(rates.size());
      v2.reserve(rates.size());
      vm.reserve(rates.size());
      for (const auto& r : rates) {
        v1.push_back(r.rs1);
        v2.push_back(r.rs2);
        vm.push_back(r.min());
      }
      push_stat(rs1, v1);
      push_stat(rs2, v2);
      push_stat(mn, vm);
    }
    out.series.push_back(std::move(rs1));
    out.series.push_back(std::move(rs2));
    out.series.push_back(std::move(mn));
  }
  return out;
}

SweepResult sweep_snr(const SystemParams& params, const RiMatrix& ri,
                      std::span<const double> rho_grid_db, std::span<const double> d2_values,
                      std::size_t n_realizations, std::uint64_t seed, Execution exec) {
  require_realizations(n_realizations);
  require_nonempty(rho_grid_db, "rho grid");
  require_nonempty(d2_values, "d2 values");
  ri.validate();
  for (const double d2 : d2_values) {
    if (!(d2 > params.d1)) {
      throw std::invalid_argument("every d2 value must exceed d1");
    }
  }

  SweepResult out;
  out.axis_name = "rho_t_db";
  out.axis.assign(rho_grid_db.begin(), rho_grid_db.end());
  out.realizations = n_realizations;
  out.seed = seed;
  for (const double d2 : d2_values) {
    SystemParams p = params;
    p.d2 = d2;
    // Same seed for every d2: realization i reuses stream i (paired sampling).
    const auto gains = draw_realizations(p, n_realizations, seed, exec);
    Series series{fmt::format("d2_{:g}", d2), {}, {}};
    for (const double rho_db : rho_grid_db) {
      const auto opt = optimal_values(gains, db_to_linear(rho_db), ri, exec);
      push_stat(series, opt.values);
      for (std::size_t k = 0; k < 4; ++k) {
        out.case_counts[k] += opt.case_counts[k];
      }
    }
    out.series.push_back(std::move(series));
  }
  return out;
}

BenchmarkResult benchmark_gains(const SystemParams& params, const RiMatrix& ri,
                                std::span<const double> rho_grid_db, std::size_t n_realizations,
                                std::uint64_t seed, Execution exec) {
  require_realizations(n_realizations);
  require_nonempty(rho_grid_db, "rho grid");
  ri.validate();
  const auto gains = draw_realizations(params, n_realizations, seed, exec);

  BenchmarkResult out;
  SweepResult& table = out.per_rho;
  table.axis_name = "rho_t_db";
  table.axis.assign(rho_grid_db.begin(), rho_grid_db.end());
  table.realizations = n_realizations;
  table.seed = seed;
  for (const auto& scheme : kSchemes) {
    table.series.push_back({std::string(scheme.name), {}, {}});
  }

  std::vector<double> pooled_sum(kSchemes.size(), 0.0);
  std::vector<std::size_t> violations(kSchemes.size(), 0);
  for (const double rho_db : rho_grid_db) {
    const double rho_t = db_to_linear(rho_db);
    const auto joint = optimal_values(gains, rho_t, ri, exec);
    for (std::size_t k = 0; k < 4; ++k) {
      table.case_counts[k] += joint.case_counts[k];
    }
    for (std::size_t s = 0; s < kSchemes.size(); ++s) {
      const auto& scheme = kSchemes[s];
      std::vector<double> values;
      if (scheme.rule == AlphaRule::Optimal) {
        values = joint.values;
      } else {
        values = map_indexed(gains.size(), exec, [&](std::size_t i) {
          return min_secrecy_rate(scheme.order, scheme.alpha, ri, gains[i], rho_t);
        });
      }
      for (std::size_t i = 0; i < values.size(); ++i) {
        pooled_sum[s] += values[i];
        if (values[i] > joint.values[i] + kDominanceSlack) {
          ++violations[s];
        }
      }
      push_stat(table.series[s], values);
    }
  }

  const double cells = static_cast<double>(n_realizations * rho_grid_db.size());
  const double joint_mean = pooled_sum[0] / cells;
  for (std::size_t s = 0; s < kSchemes.size(); ++s) {
    const double mean = pooled_sum[s] / cells;
    const double diff = joint_mean - mean;
    SchemeSummary summary{std::string(kSchemes[s].name), mean,
                          joint_mean > 0.0 ? diff / joint_mean * 100.0 : 0.0,
                          mean > 0.0 ? diff / mean * 100.0
                                     : (diff > 0.0 ? std::numeric_limits<double>::infinity() : 0.0),
                          violations[s]};
    out.summary.push_back(std::move(summary));
  }
  return out;
}

std::vector<double> default_rho_grid_db() {
  std::vector<double> grid;
  for (int db = 40; db <= 80; db += 5) {
    grid.push_back(db);
  }
  return grid;
}

std::vector<double> alpha_grid(double step) {
  const GridSpec spec{step, 0.0, 1.0};
  spec.validate();
  std::vector<double> grid;
  for (std::size_t k = 0; k <= spec.intervals(); ++k) {
    grid.push_back(spec.point(k));
  }
  return grid;
}

}  // namespace secnoma
