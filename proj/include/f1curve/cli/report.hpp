#pragma once

// Tabular command output in three renderings: aligned text, CSV and JSON.
// Every command builds one Report; rendering is the only place that knows
// about formats, so all three stay in step.

#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

namespace f1curve::cli {

enum class Format { kTable, kCsv, kJson };

// "table", "csv" or "json"; ArgumentError otherwise.
[[nodiscard]] Format parse_format(std::string_view text);

// 12 significant digits, "%.12g".
[[nodiscard]] std::string format_number(double x);

// A JSON number that prints with at most 12 significant digits.
[[nodiscard]] nlohmann::json number(double x);

struct Report {
  std::vector<std::pair<std::string, nlohmann::json>> summary;
  std::vector<std::string> columns;
  std::vector<std::vector<nlohmann::json>> rows;

  void add_summary(std::string key, nlohmann::json value) {
    summary.emplace_back(std::move(key), std::move(value));
  }
  void render(Format format, std::ostream& out) const;
};

// Cell text as printed in table and CSV output.
[[nodiscard]] std::string cell_text(const nlohmann::json& value);

}  // namespace f1curve::cli
