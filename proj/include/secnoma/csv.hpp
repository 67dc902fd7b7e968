#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "secnoma/experiments.hpp"

namespace secnoma::csv {

// Dialect: comma separated, '.' decimal point, '#'-prefixed metadata lines,
// then one header row, then data rows. Numbers use the shortest form that
// round-trips a double ("%.17g").

using Metadata = std::vector<std::pair<std::string, std::string>>;

std::string number(double value);

void write_metadata(std::ostream& os, const Metadata& meta);

void write_table(std::ostream& os, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows);

/// Axis column, then "<series>" and "<series>_se" per series.
void write_sweep(std::ostream& os, const SweepResult& result);

}  // namespace secnoma::csv
