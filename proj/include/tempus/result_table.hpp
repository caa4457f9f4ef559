#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tempus {

inline constexpr int kSchemaVersion = 1;

enum class OutputFormat { Csv, Json };

/// Columns of numbers plus an ordered key/value metadata block.
///
/// CSV layout: one "# key=value" line per metadata entry, a header line of
/// column names, then one comma-separated line per row. JSON layout:
/// {"meta":{...},"columns":[...],"rows":[[...],...]} with non-finite values
/// written as the strings "inf", "-inf" and "nan". Numbers use the shortest
/// decimal form that reads back to the same double.
class ResultTable {
 public:
  ResultTable() = default;
  explicit ResultTable(std::vector<std::string> columns);

  const std::vector<std::string>& columns() const noexcept { return columns_; }
  const std::vector<std::vector<double>>& rows() const noexcept { return rows_; }
  const std::vector<std::pair<std::string, std::string>>& meta() const noexcept { return meta_; }

  /// Throws Io if the row width differs from the column count.
  void add_row(std::vector<double> row);
  /// Appends, or replaces the value of an existing key in place.
  void set_meta(std::string key, std::string value);
  void set_meta(std::string key, double value);
  /// Empty string when absent.
  std::string meta_value(std::string_view key) const;

  std::vector<double> column(std::string_view name) const;

  std::string to_csv() const;
  std::string to_json() const;
  std::string render(OutputFormat format) const;

  static ResultTable parse_csv(std::string_view text);
  static ResultTable parse_json(std::string_view text);
  static ResultTable parse(std::string_view text, OutputFormat format);

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<double>> rows_;
  std::vector<std::pair<std::string, std::string>> meta_;
};

/// Shortest round-trip decimal form; "inf", "-inf", "nan" for non-finite.
std::string format_number(double value);
/// Inverse of format_number. Throws Io on malformed input.
double parse_number(std::string_view text);

}  // namespace tempus
