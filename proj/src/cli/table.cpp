#include "table.hpp"

#include <charconv>
#include <cmath>

namespace skewlab::cli {

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

Json real_json(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\r\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (const char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

namespace {

std::string cell_text(const Cell& cell) {
  struct Visitor {
    std::string operator()(double v) const { return format_real(v); }
    std::string operator()(const std::string& s) const { return csv_field(s); }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(std::uint64_t n) const { return std::to_string(n); }
  };
  return std::visit(Visitor{}, cell);
}

Json cell_json(const Cell& cell) {
  struct Visitor {
    Json operator()(double v) const { return real_json(v); }
    Json operator()(const std::string& s) const { return s; }
    Json operator()(bool b) const { return b; }
    Json operator()(std::uint64_t n) const { return n; }
  };
  return std::visit(Visitor{}, cell);
}

}  // namespace

void Table::write_csv(std::ostream& out) const {
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    out << (c ? "," : "") << csv_field(columns_[c]);
  }
  out << '\n';
  for (const auto& row : rows_) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << cell_text(row[c]);
    out << '\n';
  }
}

Json Table::to_json() const {
  Json arr = Json::array();
  for (const auto& row : rows_) {
    Json obj = Json::object();
    for (std::size_t c = 0; c < row.size(); ++c) obj[columns_[c]] = cell_json(row[c]);
    arr.push_back(std::move(obj));
  }
  return arr;
}

void Table::write(std::ostream& out, Format format) const {
  if (format == Format::Csv) {
    write_csv(out);
  } else {
    out << to_json().dump(2) << '\n';
  }
}

}  // namespace skewlab::cli
