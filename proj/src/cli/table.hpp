#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace skewlab::cli {

using Json = nlohmann::ordered_json;
using Cell = std::variant<double, std::string, bool, std::uint64_t>;

/// Shortest decimal that reads back to the same double; "nan", "inf" and
/// "-inf" for the non-finite values. Locale independent.
std::string format_real(double v);

/// Doubles become JSON numbers, non-finite ones null.
Json real_json(double v);

enum class Format { Csv, Json };

/// Column-named rows written either as RFC-4180 CSV with a header line or as
/// a JSON array of objects keyed by column.
class Table {
 public:
  explicit Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

  void add(std::vector<Cell> row) { rows_.push_back(std::move(row)); }
  std::size_t size() const noexcept { return rows_.size(); }

  void write_csv(std::ostream& out) const;
  Json to_json() const;
  void write(std::ostream& out, Format format) const;

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
};

std::string csv_field(const std::string& text);

}  // namespace skewlab::cli
