#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "secnoma/channel.hpp"
#include "secnoma/execution.hpp"
#include "secnoma/rates.hpp"

namespace secnoma::cli {

inline constexpr const char* kToolName = "secnoma";
inline constexpr const char* kToolVersion = "1.0.0";

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Command { SweepAlpha, SweepSnr, Benchmark, OptimizeOne, Feasibility };

std::string_view command_name(Command c);
Command parse_command(std::string_view name);

struct RunConfig {
  Command command = Command::OptimizeOne;
  SystemParams params;
  RiMatrix ri;
  std::uint64_t seed = 0;
  std::size_t realizations = 1000;
  double alpha_step = 0.01;
  std::vector<DecodingOrder> orders;
  std::vector<double> rho_grid_db;
  std::vector<double> d2_values;
  std::optional<double> g1;
  std::optional<double> g2;
  std::uint64_t realization_index = 0;
  Execution execution = Execution::Parallel;
  std::string out;
  /// Every result-affecting key after defaults and overrides, echoed into
  /// the CSV header. `out` and `execution` are left out: neither changes
  /// a single output byte.
  nlohmann::json echo;
};

/// Defaults for every recognised key. `seed` is absent on purpose.
nlohmann::json default_config();

/// Interprets a flag value: JSON when it parses as JSON, otherwise a string.
nlohmann::json parse_flag_value(const std::string& text);

/// Merges defaults <- file <- overrides (flags win) and validates the result.
/// Throws ConfigError with a one-line message on any problem.
RunConfig make_config(Command command, const nlohmann::json& file,
                      const std::vector<std::pair<std::string, std::string>>& overrides);

/// Runs the experiment, writes the CSV to config.out and, for optimize-one
/// and feasibility, a readable summary to `summary`.
void run(const RunConfig& config, std::ostream& summary);

/// Full command line entry point; returns the process exit status.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace secnoma::cli
