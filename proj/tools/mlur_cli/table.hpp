#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace mlur::cli {

enum class Format { Csv, Json };

using Cell = std::variant<double, std::int64_t, std::string>;

/// Column-ordered table rendered as CSV (header row always present) or JSON.
/// Doubles are rendered with 12 significant digits in both formats.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

/// `as_records` selects a JSON array of objects; otherwise a single-row
/// table is written as one JSON object.
void write_table(std::ostream& out, const Table& table, Format format, bool as_records);

std::string format_double(double value);

}  // namespace mlur::cli
