#include "f1curve/cli/report.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>

#include "f1curve/errors.hpp"

namespace f1curve::cli {

namespace {

std::string csv_escape(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) {
    return text;
  }
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') {
      out += '"';
    }
    out += c;
  }
  return out + "\"";
}

void write_csv_line(std::ostream& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    out << (i == 0 ? "" : ",") << csv_escape(cells[i]);
  }
  out << '\n';
}

}  // namespace

Format parse_format(std::string_view text) {
  if (text == "table") {
    return Format::kTable;
  }
  if (text == "csv") {
    return Format::kCsv;
  }
  if (text == "json") {
    return Format::kJson;
  }
  throw ArgumentError("unknown format '" + std::string(text) +
                      "' (expected table, csv or json)");
}

std::string format_number(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.12g", x);
  return buffer;
}

nlohmann::json number(double x) { return std::strtod(format_number(x).c_str(), nullptr); }

std::string cell_text(const nlohmann::json& value) {
  if (value.is_string()) {
    return value.get<std::string>();
  }
  if (value.is_number_float()) {
    return format_number(value.get<double>());
  }
  if (value.is_null()) {
    return "";
  }
  return value.dump();
}

void Report::render(Format format, std::ostream& out) const {
  switch (format) {
    case Format::kJson: {
      nlohmann::ordered_json doc = nlohmann::ordered_json::object();
      for (const auto& [key, value] : summary) {
        doc[key] = value;
      }
      if (!columns.empty()) {
        auto& list = doc["rows"] = nlohmann::ordered_json::array();
        for (const auto& row : rows) {
          nlohmann::ordered_json item = nlohmann::ordered_json::object();
          for (std::size_t i = 0; i < columns.size(); ++i) {
            item[columns[i]] = row[i];
          }
          list.push_back(std::move(item));
        }
      }
      out << doc.dump(2) << '\n';
      return;
    }
    case Format::kCsv: {
      if (columns.empty()) {
        std::vector<std::string> keys;
        std::vector<std::string> values;
        for (const auto& [key, value] : summary) {
          keys.push_back(key);
          values.push_back(cell_text(value));
        }
        write_csv_line(out, keys);
        write_csv_line(out, values);
        return;
      }
      write_csv_line(out, columns);
      for (const auto& row : rows) {
        std::vector<std::string> cells;
        for (const auto& value : row) {
          cells.push_back(cell_text(value));
        }
        write_csv_line(out, cells);
      }
      return;
    }
    case Format::kTable:
      break;
  }
  std::size_t key_width = 0;
  for (const auto& entry : summary) {
    key_width = std::max(key_width, entry.first.size());
  }
  for (const auto& [key, value] : summary) {
    out << key << ':' << std::string(key_width - key.size() + 1, ' ')
        << cell_text(value) << '\n';
  }
  if (columns.empty()) {
    return;
  }
  if (!summary.empty()) {
    out << '\n';
  }
  std::vector<std::vector<std::string>> text;
  std::vector<std::size_t> width(columns.size());
  for (std::size_t i = 0; i < columns.size(); ++i) {
    width[i] = columns[i].size();
  }
  for (const auto& row : rows) {
    auto& line = text.emplace_back();
    for (std::size_t i = 0; i < row.size(); ++i) {
      line.push_back(cell_text(row[i]));
      width[i] = std::max(width[i], line.back().size());
    }
  }
  auto print = [&](const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      line += cells[i];
      if (i + 1 < cells.size()) {
        line += std::string(width[i] - cells[i].size() + 2, ' ');
      }
    }
    out << line << '\n';
  };
  print(columns);
  for (const auto& line : text) {
    print(line);
  }
}

}  // namespace f1curve::cli
