#include "mlur_cli/count_io.hpp"

#include <charconv>
#include <string>
#include <string_view>

#include "mlur/error.hpp"

namespace mlur::cli {

namespace {

constexpr std::string_view kHeader = "basis,n_pp,n_pm,n_mp,n_mm,shots";

std::uint64_t parse_count(std::string_view text) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw InputError("bad count '" + std::string(text) + "'");
  }
  return value;
}

Basis parse_basis(std::string_view text) {
  for (Basis b : kAllBases) {
    if (to_string(b) == text) return b;
  }
  throw InputError("unknown basis '" + std::string(text) + "'");
}

}  // namespace

void write_count_tables_csv(std::ostream& out, std::span<const CountTable> tables) {
  out << kHeader << '\n';
  for (const auto& t : tables) {
    out << to_string(t.basis);
    for (auto c : t.counts) out << ',' << c;
    out << ',' << t.shots << '\n';
  }
}

std::vector<CountTable> read_count_tables_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kHeader) throw InputError("count table CSV: missing or wrong header");

  std::vector<CountTable> tables;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string_view> fields;
    std::string_view rest = line;
    for (std::size_t comma; (comma = rest.find(',')) != std::string_view::npos; rest.remove_prefix(comma + 1)) {
      fields.push_back(rest.substr(0, comma));
    }
    fields.push_back(rest);
    if (fields.size() != 6) throw InputError("count table CSV: expected 6 fields, got " + std::to_string(fields.size()));

    CountTable t;
    t.basis = parse_basis(fields[0]);
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < 4; ++i) sum += (t.counts[i] = parse_count(fields[i + 1]));
    t.shots = parse_count(fields[5]);
    if (sum != t.shots) throw InputError("count table CSV: counts do not sum to shots");
    tables.push_back(t);
  }
  return tables;
}

}  // namespace mlur::cli
