#include "secnoma/csv.hpp"

#include <fmt/format.h>

namespace secnoma::csv {

std::string number(double value) { return fmt::format("{:.17g}", value); }

void write_metadata(std::ostream& os, const Metadata& meta) {
  for (const auto& [key, value] : meta) {
    os << "# " << key << '=' << value << '\n';
  }
}

void write_table(std::ostream& os, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
  const auto line = [&os](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) os << ',';
      os << cells[i];
    }
    os << '\n';
  };
  line(header);
  for (const auto& row : rows) {
    line(row);
  }
}

void write_sweep(std::ostream& os, const SweepResult& result) {
  std::vector<std::string> header{result.axis_name};
  for (const auto& s : result.series) {
    header.push_back(s.name);
    header.push_back(s.name + "_se");
  }
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < result.axis.size(); ++i) {
    std::vector<std::string> row{number(result.axis[i])};
    for (const auto& s : result.series) {
      row.push_back(number(s.mean[i]));
      row.push_back(number(s.stderr_of_mean[i]));
    }
    rows.push_back(std::move(row));
  }
  write_table(os, header, rows);
}

}  // namespace secnoma::csv
