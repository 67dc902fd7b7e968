#include "secnoma/cli.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "secnoma/csv.hpp"
#include "secnoma/experiments.hpp"
#include "secnoma/feasibility.hpp"
#include "secnoma/optimizer.hpp"
#include "secnoma/oracle.hpp"

namespace secnoma::cli {

namespace {

using nlohmann::json;

constexpr std::array<Command, 5> kCommands = {Command::SweepAlpha, Command::SweepSnr,
                                              Command::Benchmark, Command::OptimizeOne,
                                              Command::Feasibility};

const std::vector<std::string>& known_keys() {
  static const std::vector<std::string> keys = {
      "d1",     "d2",          "lp",       "e",         "rho_t_db",          "b11",
      "b12",    "b21",         "b22",      "seed",      "realizations",      "alpha_step",
      "orders", "rho_grid_db", "d2_values", "g1",       "g2",                "realization_index",
      "out",    "execution"};
  return keys;
}

bool is_known(const std::string& key) {
  for (const auto& k : known_keys()) {
    if (k == key) return true;
  }
  return false;
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

double get_number(const json& cfg, const std::string& key) {
  const auto& v = cfg.at(key);
  if (!v.is_number()) {
    throw ConfigError(fmt::format("'{}' must be a number", key));
  }
  const double x = v.get<double>();
  if (!std::isfinite(x)) {
    throw ConfigError(fmt::format("'{}' must be finite", key));
  }
  return x;
}

std::uint64_t get_unsigned(const json& cfg, const std::string& key) {
  const auto& v = cfg.at(key);
  if (v.is_number_unsigned()) {
    return v.get<std::uint64_t>();
  }
  if (v.is_number_integer() && v.get<std::int64_t>() >= 0) {
    return static_cast<std::uint64_t>(v.get<std::int64_t>());
  }
  throw ConfigError(fmt::format("'{}' must be a non-negative integer", key));
}

std::vector<double> get_number_list(const json& cfg, const std::string& key) {
  const auto& v = cfg.at(key);
  std::vector<double> out;
  if (v.is_array()) {
    for (const auto& item : v) {
      if (!item.is_number()) {
        throw ConfigError(fmt::format("'{}' must contain only numbers", key));
      }
      out.push_back(item.get<double>());
    }
  } else if (v.is_string()) {
    for (const auto& part : split_commas(v.get<std::string>())) {
      try {
        std::size_t used = 0;
        out.push_back(std::stod(part, &used));
        if (used != part.size()) throw std::invalid_argument(part);
      } catch (const std::exception&) {
        throw ConfigError(fmt::format("'{}' has a non-numeric entry '{}'", key, part));
      }
    }
  } else if (v.is_number()) {
    out.push_back(v.get<double>());
  } else {
    throw ConfigError(fmt::format("'{}' must be a list of numbers", key));
  }
  if (out.empty()) {
    throw ConfigError(fmt::format("'{}' must not be empty", key));
  }
  return out;
}

std::vector<DecodingOrder> get_orders(const json& cfg) {
  const auto& v = cfg.at("orders");
  std::vector<std::string> names;
  if (v.is_array()) {
    for (const auto& item : v) {
      if (!item.is_string()) throw ConfigError("'orders' must contain order names");
      names.push_back(item.get<std::string>());
    }
  } else if (v.is_string()) {
    names = split_commas(v.get<std::string>());
  } else {
    throw ConfigError("'orders' must be a list of order names");
  }
  if (names.empty()) throw ConfigError("'orders' must not be empty");
  std::vector<DecodingOrder> orders;
  for (const auto& name : names) {
    try {
      orders.push_back(parse_order(name));
    } catch (const std::invalid_argument& ex) {
      throw ConfigError(ex.what());
    }
  }
  return orders;
}

std::optional<double> get_optional_number(const json& cfg, const std::string& key) {
  if (cfg.at(key).is_null()) return std::nullopt;
  return get_number(cfg, key);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    throw std::runtime_error("cannot open output file '" + path + "'");
  }
  file << content;
  if (!file) {
    throw std::runtime_error("failed writing output file '" + path + "'");
  }
}

csv::Metadata base_metadata(const RunConfig& config) {
  return {{"tool", kToolName},
          {"version", kToolVersion},
          {"command", std::string(command_name(config.command))},
          {"seed", std::to_string(config.seed)},
          {"config", config.echo.dump()}};
}

void append_case_counts(csv::Metadata& meta, const std::array<std::size_t, 4>& counts) {
  meta.emplace_back("winning_case_counts",
                    fmt::format("case2:{},case3:{},case4:{},none-feasible:{}", counts[0],
                                counts[1], counts[2], counts[3]));
}

ChannelRealization instance_gains(const RunConfig& config) {
  if (config.g1) {
    return ChannelRealization(*config.g1, *config.g2);
  }
  return realization_at(config.params, config.seed, config.realization_index);
}

std::string interval_text(const FeasibleInterval& iv) {
  if (iv.empty) return "empty";
  return fmt::format("({:.6g}, {:.6g})", iv.lower, iv.upper);
}

std::vector<std::string> interval_cells(const FeasibleInterval& iv) {
  if (iv.empty) return {"", "", "1"};
  return {csv::number(iv.lower), csv::number(iv.upper), "0"};
}

std::string run_sweep_alpha(const RunConfig& config, csv::Metadata meta) {
  const auto grid = alpha_grid(config.alpha_step);
  const auto result = sweep_alpha(config.orders, grid, config.params, config.ri,
                                  config.realizations, config.seed, config.execution);
  std::ostringstream os;
  csv::write_metadata(os, meta);
  csv::write_sweep(os, result);
  return os.str();
}

std::string run_sweep_snr(const RunConfig& config, csv::Metadata meta) {
  const auto result = sweep_snr(config.params, config.ri, config.rho_grid_db, config.d2_values,
                                config.realizations, config.seed, config.execution);
  append_case_counts(meta, result.case_counts);
  std::ostringstream os;
  csv::write_metadata(os, meta);
  csv::write_sweep(os, result);
  return os.str();
}

std::string run_benchmark(const RunConfig& config, csv::Metadata meta, std::ostream& summary) {
  const auto result = benchmark_gains(config.params, config.ri, config.rho_grid_db,
                                      config.realizations, config.seed, config.execution);
  meta.emplace_back("gain_convention",
                    "pooled means over realizations and rho grid; "
                    "gain_pct=(joint-scheme)/joint*100; "
                    "gain_over_scheme_pct=(joint-scheme)/scheme*100");
  for (const auto& s : result.summary) {
    meta.emplace_back(fmt::format("scheme_{}", s.name),
                      fmt::format("mean={} gain_pct={} gain_over_scheme_pct={} "
                                  "dominance_violations={}",
                                  csv::number(s.mean_value), csv::number(s.gain_pct),
                                  csv::number(s.gain_over_scheme_pct), s.dominance_violations));
  }
  append_case_counts(meta, result.per_rho.case_counts);
  std::ostringstream os;
  csv::write_metadata(os, meta);
  csv::write_sweep(os, result.per_rho);

  summary << fmt::format("{:<6} {:>14} {:>10} {:>16}\n", "scheme", "mean (b/s/Hz)", "gain %",
                         "gain % of scheme");
  for (const auto& s : result.summary) {
    summary << fmt::format("{:<6} {:>14.6f} {:>10.2f} {:>16.2f}\n", s.name, s.mean_value,
                           s.gain_pct, s.gain_over_scheme_pct);
  }
  return os.str();
}

std::string run_optimize_one(const RunConfig& config, csv::Metadata meta,
                             std::ostream& summary) {
  const auto g = instance_gains(config);
  const double rho_t = config.params.rho_t();
  const auto opt = optimize(g, rho_t, config.ri);
  const auto oracle = grid_max_min(opt.order, g, rho_t, config.ri, GridSpec{}, config.execution);
  const auto rates = secrecy_rates(opt.order, opt.alpha_hat, config.ri, g, rho_t);
  const auto window = feasibility_d2(g, rho_t, config.ri).joint;

  std::ostringstream os;
  csv::write_metadata(os, meta);
  csv::write_table(
      os,
      {"g1", "g2", "rho_t_db", "order", "alpha_hat", "value", "winning_case", "rs1", "rs2",
       "oracle_alpha", "oracle_value"},
      {{csv::number(g.g1()), csv::number(g.g2()), csv::number(config.params.rho_t_db),
        std::string(order_name(opt.order)), csv::number(opt.alpha_hat), csv::number(opt.value),
        std::string(kkt_case_name(opt.winning_case)), csv::number(rates.rs1),
        csv::number(rates.rs2), csv::number(oracle.alpha), csv::number(oracle.value)}});

  summary << fmt::format("channel gains   g1={:.6g} g2={:.6g} rho_t={} dB\n", g.g1(), g.g2(),
                         config.params.rho_t_db);
  summary << fmt::format("optimal order   {}\n", order_name(opt.order));
  summary << fmt::format("feasible alpha  {}\n", interval_text(window));
  summary << "candidates     ";
  for (const auto& c : opt.candidates) {
    summary << fmt::format(" a{}*={:.6g}", c.root_index, c.alpha);
  }
  summary << '\n';
  summary << fmt::format("alpha_hat       {:.9f}\n", opt.alpha_hat);
  summary << fmt::format("min secrecy     {:.9f} bits/s/Hz (rs1={:.9f}, rs2={:.9f})\n", opt.value,
                         rates.rs1, rates.rs2);
  summary << fmt::format("winning case    {}\n", kkt_case_name(opt.winning_case));
  summary << fmt::format("grid oracle     alpha={:.4f} value={:.9f}\n", oracle.alpha,
                         oracle.value);
  return os.str();
}

std::string run_feasibility(const RunConfig& config, csv::Metadata meta, std::ostream& summary) {
  const auto g = instance_gains(config);
  const double rho_t = config.params.rho_t();

  std::vector<std::vector<std::string>> rows;
  summary << fmt::format("channel gains g1={:.6g} g2={:.6g} rho_t={} dB\n", g.g1(), g.g2(),
                         config.params.rho_t_db);
  for (const auto order : kAllOrders) {
    const auto f = feasibility(order, g, rho_t, config.ri);
    std::vector<std::string> row{std::string(order_name(order))};
    for (const auto* iv : {&f.interval_u1, &f.interval_u2, &f.joint}) {
      const auto cells = interval_cells(*iv);
      row.insert(row.end(), cells.begin(), cells.end());
    }
    row.push_back(f.secure ? "1" : "0");
    rows.push_back(std::move(row));
    summary << fmt::format("{}  rs1>0: {:<28} rs2>0: {:<28} joint: {:<28} secure: {}\n",
                           order_name(order), interval_text(f.interval_u1),
                           interval_text(f.interval_u2), interval_text(f.joint),
                           f.secure ? "yes" : "no");
  }
  std::string set_text;
  for (const auto order : secure_set(g, rho_t, config.ri)) {
    if (!set_text.empty()) set_text += ", ";
    set_text += order_name(order);
  }
  summary << "secure set: {" << set_text << "}\n";

  meta.emplace_back("interval_convention", "open intervals (lower, upper); empty=1 when none");
  std::ostringstream os;
  csv::write_metadata(os, meta);
  csv::write_table(os,
                   {"order", "u1_lower", "u1_upper", "u1_empty", "u2_lower", "u2_upper",
                    "u2_empty", "joint_lower", "joint_upper", "joint_empty", "secure"},
                   rows);
  return os.str();
}

}  // namespace

std::string_view command_name(Command c) {
  switch (c) {
    case Command::SweepAlpha: return "sweep-alpha";
    case Command::SweepSnr: return "sweep-snr";
    case Command::Benchmark: return "benchmark";
    case Command::OptimizeOne: return "optimize-one";
    case Command::Feasibility: return "feasibility";
  }
  return "?";
}

Command parse_command(std::string_view name) {
  for (const auto c : kCommands) {
    if (command_name(c) == name) return c;
  }
  throw ConfigError("unknown subcommand '" + std::string(name) + "'");
}

json default_config() {
  json cfg = {
      {"d1", 50.0},
      {"d2", 100.0},
      {"lp", 1.0},
      {"e", 3.0},
      {"rho_t_db", 60.0},
      {"b11", 0.2},
      {"b12", 0.2},
      {"b21", 0.2},
      {"b22", 0.2},
      {"realizations", 1000},
      {"alpha_step", 0.01},
      {"orders", {"D1", "D2", "D3", "D4"}},
      {"rho_grid_db", default_rho_grid_db()},
      {"d2_values", {100.0, 150.0, 200.0}},
      {"g1", nullptr},
      {"g2", nullptr},
      {"realization_index", 0},
      {"execution", "parallel"},
  };
  return cfg;
}

json parse_flag_value(const std::string& text) {
  json parsed = json::parse(text, nullptr, false);
  if (parsed.is_discarded()) {
    return json(text);
  }
  return parsed;
}

RunConfig make_config(Command command, const json& file,
                      const std::vector<std::pair<std::string, std::string>>& overrides) {
  json merged = default_config();
  if (!file.is_null()) {
    if (!file.is_object()) throw ConfigError("config file must hold a flat JSON object");
    for (const auto& [key, value] : file.items()) {
      if (!is_known(key)) throw ConfigError("unknown config key '" + key + "'");
      merged[key] = value;
    }
  }
  for (const auto& [key, text] : overrides) {
    if (!is_known(key)) throw ConfigError("unknown option '--" + key + "'");
    merged[key] = parse_flag_value(text);
  }
  if (!merged.contains("seed") || merged["seed"].is_null()) {
    throw ConfigError("a seed is required (--seed N or \"seed\" in the config file)");
  }

  RunConfig cfg;
  cfg.command = command;
  try {
    cfg.params.d1 = get_number(merged, "d1");
    cfg.params.d2 = get_number(merged, "d2");
    cfg.params.lp = get_number(merged, "lp");
    cfg.params.e = get_number(merged, "e");
    cfg.params.rho_t_db = get_number(merged, "rho_t_db");
    cfg.ri = {get_number(merged, "b11"), get_number(merged, "b12"), get_number(merged, "b21"),
              get_number(merged, "b22")};
    cfg.seed = get_unsigned(merged, "seed");
    cfg.realizations = get_unsigned(merged, "realizations");
    cfg.alpha_step = get_number(merged, "alpha_step");
    cfg.orders = get_orders(merged);
    cfg.rho_grid_db = get_number_list(merged, "rho_grid_db");
    cfg.d2_values = get_number_list(merged, "d2_values");
    cfg.g1 = get_optional_number(merged, "g1");
    cfg.g2 = get_optional_number(merged, "g2");
    cfg.realization_index = get_unsigned(merged, "realization_index");
    if (!merged.at("execution").is_string()) throw ConfigError("'execution' must be a string");
    cfg.execution = parse_execution(merged.at("execution").get<std::string>());
    if (merged.contains("out")) {
      if (!merged["out"].is_string()) throw ConfigError("'out' must be a path");
      cfg.out = merged["out"].get<std::string>();
    }
    cfg.params.validate();
    cfg.ri.validate();
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& ex) {
    throw ConfigError(ex.what());
  }

  if (!(cfg.params.d2 > cfg.params.d1)) {
    throw ConfigError("d2 must exceed d1 (device 1 is the strong device)");
  }
  if (cfg.realizations == 0) throw ConfigError("'realizations' must be at least 1");
  if (!(cfg.alpha_step > 0.0 && cfg.alpha_step < 1.0)) {
    throw ConfigError("'alpha_step' must lie in (0, 1)");
  }
  if (command == Command::SweepSnr) {
    for (const double d2 : cfg.d2_values) {
      if (!(d2 > cfg.params.d1)) throw ConfigError("every 'd2_values' entry must exceed d1");
    }
  }
  if (cfg.g1.has_value() != cfg.g2.has_value()) {
    throw ConfigError("'g1' and 'g2' must be given together");
  }
  if (cfg.g1 && !(*cfg.g2 > 0.0 && *cfg.g1 > *cfg.g2)) {
    throw ConfigError("channel gains must satisfy g1 > g2 > 0");
  }
  if (cfg.out.empty()) {
    cfg.out = std::string(command_name(command)) + ".csv";
  }

  cfg.echo = merged;
  cfg.echo.erase("out");
  cfg.echo.erase("execution");
  // Lists may arrive as "a,b" strings; echo the parsed form.
  cfg.echo["rho_grid_db"] = cfg.rho_grid_db;
  cfg.echo["d2_values"] = cfg.d2_values;
  cfg.echo["orders"] = json::array();
  for (const auto o : cfg.orders) cfg.echo["orders"].push_back(std::string(order_name(o)));
  return cfg;
}

void run(const RunConfig& config, std::ostream& summary) {
  auto meta = base_metadata(config);
  std::string content;
  switch (config.command) {
    case Command::SweepAlpha: content = run_sweep_alpha(config, std::move(meta)); break;
    case Command::SweepSnr: content = run_sweep_snr(config, std::move(meta)); break;
    case Command::Benchmark: content = run_benchmark(config, std::move(meta), summary); break;
    case Command::OptimizeOne: content = run_optimize_one(config, std::move(meta), summary); break;
    case Command::Feasibility: content = run_feasibility(config, std::move(meta), summary); break;
  }
  write_file(config.out, content);
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Secrecy-fair power allocation for two-device untrusted NOMA under imperfect SIC"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", kToolVersion);

  std::string config_path;
  std::vector<std::pair<std::string, std::string>> overrides;
  std::string seed;
  std::string realizations;
  std::string out_path;

  for (const auto c : kCommands) {
    auto* sub = app.add_subcommand(std::string(command_name(c)));
    sub->allow_extras();
    sub->add_option("--config", config_path, "flat JSON config file");
    sub->add_option("--seed", seed, "random seed (required)");
    sub->add_option("--realizations", realizations, "number of channel realizations");
    sub->add_option("--out", out_path, "output CSV path");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  CLI::App* chosen = app.get_subcommands().front();
  try {
    const Command command = parse_command(chosen->get_name());

    // Remaining tokens are --key=value or --key value overrides.
    const auto extras = chosen->remaining();
    for (std::size_t i = 0; i < extras.size(); ++i) {
      const std::string& token = extras[i];
      if (token.rfind("--", 0) != 0 || token.size() <= 2) {
        throw ConfigError("unexpected argument '" + token + "'");
      }
      const auto eq = token.find('=');
      if (eq != std::string::npos) {
        overrides.emplace_back(token.substr(2, eq - 2), token.substr(eq + 1));
      } else if (i + 1 < extras.size()) {
        overrides.emplace_back(token.substr(2), extras[++i]);
      } else {
        throw ConfigError("option '" + token + "' needs a value");
      }
    }
    if (!seed.empty()) overrides.emplace_back("seed", seed);
    if (!realizations.empty()) overrides.emplace_back("realizations", realizations);
    if (!out_path.empty()) overrides.emplace_back("out", json(out_path).dump());

    json file_config;
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw ConfigError("cannot read config file '" + config_path + "'");
      file_config = json::parse(in, nullptr, false);
      if (file_config.is_discarded()) {
        throw ConfigError("config file '" + config_path + "' is not valid JSON");
      }
    }

    const RunConfig config = make_config(command, file_config, overrides);
    run(config, out);
    return 0;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return 2;
  }
}

}  // namespace secnoma::cli
