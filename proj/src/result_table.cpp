#include "tempus/result_table.hpp"

#include "tempus/error.hpp"

#include "json.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

namespace tempus {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string json_string(const std::string& s) { return nlohmann::json(s).dump(); }

}  // namespace

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) throw Error(ErrorKind::Io, "number formatting failed");
  return std::string(buf, end);
}

double parse_number(std::string_view text) {
  if (text == "nan") return std::numeric_limits<double>::quiet_NaN();
  if (text == "inf") return std::numeric_limits<double>::infinity();
  if (text == "-inf") return -std::numeric_limits<double>::infinity();
  double value = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || text.empty()) {
    throw Error(ErrorKind::Io, "malformed number '" + std::string(text) + "'");
  }
  return value;
}

ResultTable::ResultTable(std::vector<std::string> columns) : columns_(std::move(columns)) {
  for (const auto& c : columns_) {
    if (c.empty() || c.find_first_of(",\n\"") != std::string::npos) {
      throw Error(ErrorKind::Io, "invalid column name '" + c + "'");
    }
  }
}

void ResultTable::add_row(std::vector<double> row) {
  if (row.size() != columns_.size()) {
    throw Error(ErrorKind::Io, "row has " + std::to_string(row.size()) + " values for " +
                                   std::to_string(columns_.size()) + " columns");
  }
  rows_.push_back(std::move(row));
}

void ResultTable::set_meta(std::string key, std::string value) {
  if (key.empty() || key.find_first_of("=\n") != std::string::npos ||
      value.find('\n') != std::string::npos) {
    throw Error(ErrorKind::Io, "invalid metadata entry '" + key + "'");
  }
  for (auto& [k, v] : meta_) {
    if (k == key) {
      v = std::move(value);
      return;
    }
  }
  meta_.emplace_back(std::move(key), std::move(value));
}

void ResultTable::set_meta(std::string key, double value) {
  set_meta(std::move(key), format_number(value));
}

std::string ResultTable::meta_value(std::string_view key) const {
  for (const auto& [k, v] : meta_) {
    if (k == key) return v;
  }
  return {};
}

std::vector<double> ResultTable::column(std::string_view name) const {
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    if (columns_[j] == name) {
      std::vector<double> out;
      out.reserve(rows_.size());
      for (const auto& row : rows_) out.push_back(row[j]);
      return out;
    }
  }
  throw Error(ErrorKind::Io, "no column named '" + std::string(name) + "'");
}

std::string ResultTable::to_csv() const {
  std::ostringstream out;
  for (const auto& [k, v] : meta_) out << "# " << k << '=' << v << '\n';
  for (std::size_t j = 0; j < columns_.size(); ++j) out << (j ? "," : "") << columns_[j];
  out << '\n';
  for (const auto& row : rows_) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? "," : "") << format_number(row[j]);
    out << '\n';
  }
  return out.str();
}

std::string ResultTable::to_json() const {
  std::ostringstream out;
  out << "{\"meta\":{";
  for (std::size_t i = 0; i < meta_.size(); ++i) {
    out << (i ? "," : "") << json_string(meta_[i].first) << ':' << json_string(meta_[i].second);
  }
  out << "},\"columns\":[";
  for (std::size_t j = 0; j < columns_.size(); ++j) out << (j ? "," : "") << json_string(columns_[j]);
  out << "],\"rows\":[";
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    out << (i ? "," : "") << '[';
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      const double v = rows_[i][j];
      out << (j ? "," : "");
      if (std::isfinite(v)) {
        out << format_number(v);
      } else {
        out << '"' << format_number(v) << '"';
      }
    }
    out << ']';
  }
  out << "]}\n";
  return out.str();
}

std::string ResultTable::render(OutputFormat format) const {
  return format == OutputFormat::Csv ? to_csv() : to_json();
}

ResultTable ResultTable::parse_csv(std::string_view text) {
  ResultTable table;
  bool have_header = false;
  for (std::string_view line : split(text, '\n')) {
    if (line.empty()) continue;
    if (!have_header && line.starts_with("# ")) {
      const std::string_view entry = line.substr(2);
      const std::size_t eq = entry.find('=');
      if (eq == std::string_view::npos) throw Error(ErrorKind::Io, "metadata line without '='");
      table.set_meta(std::string(entry.substr(0, eq)), std::string(entry.substr(eq + 1)));
      continue;
    }
    if (!have_header) {
      std::vector<std::string> names;
      for (auto name : split(line, ',')) names.emplace_back(name);
      const auto meta = std::move(table.meta_);
      table = ResultTable(std::move(names));
      table.meta_ = meta;
      have_header = true;
      continue;
    }
    std::vector<double> row;
    for (auto cell : split(line, ',')) row.push_back(parse_number(cell));
    table.add_row(std::move(row));
  }
  if (!have_header) throw Error(ErrorKind::Io, "CSV has no header line");
  return table;
}

ResultTable ResultTable::parse_json(std::string_view text) {
  nlohmann::ordered_json doc;
  try {
    doc = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Io, std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("meta") || !doc.contains("columns") ||
      !doc.contains("rows")) {
    throw Error(ErrorKind::Io, "JSON result needs meta, columns and rows");
  }
  try {
    ResultTable table(doc["columns"].get<std::vector<std::string>>());
    for (const auto& [k, v] : doc["meta"].items()) table.set_meta(k, v.get<std::string>());
    for (const auto& json_row : doc["rows"]) {
      std::vector<double> row;
      for (const auto& cell : json_row) {
        row.push_back(cell.is_string() ? parse_number(cell.get<std::string>()) : cell.get<double>());
      }
      table.add_row(std::move(row));
    }
    return table;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Io, std::string("unexpected JSON layout: ") + e.what());
  }
}

ResultTable ResultTable::parse(std::string_view text, OutputFormat format) {
  return format == OutputFormat::Csv ? parse_csv(text) : parse_json(text);
}

}  // namespace tempus
