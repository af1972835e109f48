#pragma once

#include <string>

#include "tefields/config.hpp"
#include "tefields/grid.hpp"
#include "tefields/nse_check.hpp"

namespace tefields {

/// Serializes a table.
///
/// csv: header naming every column, values with 17 significant digits, LF
/// line endings. matrix: gnuplot blocks over exactly two free axes, one
/// line per row with the two free coordinates first, a blank line whenever
/// the slower axis advances. Throws FormatError for matrix output with a
/// free-axis count other than two.
std::string export_table(const Table& table, OutputFormat format);

/// Comparison report: the formula header and summary statistics as `#`
/// comment lines, then one csv row per point.
std::string export_report(const NSEReport& report);

/// "%.17g" rendering shared by every text output.
std::string format_number(double v);

}  // namespace tefields
