#pragma once

// Number formatting shared by JSON and CSV output: 10 significant digits.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <json.hpp>
#include <span>
#include <string>
#include <vector>

namespace wlanrr::cli {

inline std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

/// v rounded to 10 significant digits; non-finite values become null.
inline nlohmann::json json_number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return std::strtod(format_number(v).c_str(), nullptr);
}

inline nlohmann::json json_numbers(std::span<const double> values) {
  auto out = nlohmann::json::array();
  for (double v : values) out.push_back(json_number(v));
  return out;
}

/// RFC 4180 CSV table preceded by a "# schema=1" comment line.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

  void add_row(std::span<const double> values) {
    std::string line;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i) line += ',';
      line += format_number(values[i]);
    }
    rows_.push_back(std::move(line));
  }

  std::string str() const {
    std::string text = "# schema=1\r\n";
    for (std::size_t i = 0; i < header_.size(); ++i) {
      if (i) text += ',';
      text += header_[i];
    }
    text += "\r\n";
    for (const auto& row : rows_) text += row + "\r\n";
    return text;
  }

 private:
  std::vector<std::string> header_;
  std::vector<std::string> rows_;
};

}  // namespace wlanrr::cli
