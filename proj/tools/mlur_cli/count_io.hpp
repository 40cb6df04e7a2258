#pragma once

#include <istream>
#include <ostream>
#include <span>
#include <vector>

#include "mlur/experiment.hpp"

namespace mlur::cli {

/// CSV layout: basis,n_pp,n_pm,n_mp,n_mm,shots with basis one of
/// "0/90", "45/135", "R/L".
void write_count_tables_csv(std::ostream& out, std::span<const CountTable> tables);

/// Throws InputError on a malformed header, unknown basis or inconsistent
/// shot total.
std::vector<CountTable> read_count_tables_csv(std::istream& in);

}  // namespace mlur::cli
