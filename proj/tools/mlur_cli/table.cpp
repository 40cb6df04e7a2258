#include "mlur_cli/table.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace mlur::cli {

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) throw std::logic_error("table row width does not match header");
  rows.push_back(std::move(row));
}

std::string format_double(double value) {
  if (value == 0.0) value = 0.0;  // drop the sign of negative zero
  if (std::isnan(value)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

nlohmann::ordered_json to_json(const Cell& cell) {
  if (const auto* d = std::get_if<double>(&cell)) {
    if (!std::isfinite(*d)) return nullptr;
    return std::stod(format_double(*d));
  }
  if (const auto* i = std::get_if<std::int64_t>(&cell)) return *i;
  return std::get<std::string>(cell);
}

}  // namespace

void write_table(std::ostream& out, const Table& table, Format format, bool as_records) {
  if (format == Format::Csv) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) out << (c ? "," : "") << table.columns[c];
    out << '\n';
    for (const auto& row : table.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c) out << ',';
        std::visit(
            [&](const auto& v) {
              using T = std::decay_t<decltype(v)>;
              if constexpr (std::is_same_v<T, double>) {
                out << format_double(v);
              } else if constexpr (std::is_same_v<T, std::string>) {
                out << csv_escape(v);
              } else {
                out << v;
              }
            },
            row[c]);
      }
      out << '\n';
    }
    return;
  }

  const auto record = [&](const std::vector<Cell>& row) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t c = 0; c < row.size(); ++c) obj[table.columns[c]] = to_json(row[c]);
    return obj;
  };
  if (!as_records && table.rows.size() == 1) {
    out << record(table.rows.front()).dump(2) << '\n';
    return;
  }
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) arr.push_back(record(row));
  out << arr.dump(2) << '\n';
}

}  // namespace mlur::cli
