#include "tefields/export.hpp"

#include <cstdio>
#include <optional>
#include <sstream>

#include "tefields/errors.hpp"

namespace tefields {

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c == '\n' ? ' ' : c;
  }
  return out + "\"";
}

std::string to_csv(const Table& table) {
  std::ostringstream os;
  bool first = true;
  auto cell = [&](const std::string& s) {
    if (!first) os << ',';
    os << s;
    first = false;
  };
  for (const auto& n : table.coord_names) cell(n);
  for (const auto& n : table.value_names) cell(n);
  if (table.error_column) cell("error");
  os << '\n';
  for (const Row& row : table.rows) {
    first = true;
    for (double v : row.coords) cell(format_number(v));
    for (double v : row.values) cell(format_number(v));
    if (table.error_column) cell(csv_escape(row.error));
    os << '\n';
  }
  return os.str();
}

std::string to_matrix(const Table& table) {
  if (table.free_coords.size() != 2)
    throw FormatError("matrix output needs exactly 2 free axes, got " +
                      std::to_string(table.free_coords.size()));
  const int slow = table.free_coords[0];
  const int fast = table.free_coords[1];

  std::ostringstream os;
  os << "# " << table.coord_names[slow] << ' ' << table.coord_names[fast];
  for (const auto& n : table.value_names) os << ' ' << n;
  os << '\n';
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const Row& row = table.rows[i];
    if (i > 0 && row.coords[slow] != table.rows[i - 1].coords[slow]) os << '\n';
    os << format_number(row.coords[slow]) << ' ' << format_number(row.coords[fast]);
    for (double v : row.values) os << ' ' << format_number(v);
    os << '\n';
  }
  return os.str();
}

}  // namespace

std::string export_table(const Table& table, OutputFormat format) {
  return format == OutputFormat::csv ? to_csv(table) : to_matrix(table);
}

std::string export_report(const NSEReport& report) {
  const auto optional = [](const std::optional<double>& v) {
    return v ? format_number(*v) : std::string("none");
  };
  std::ostringstream os;
  os << report.header();
  os << "# t = " << format_number(report.t) << '\n'
     << "# points = " << report.points.size() << '\n'
     << "# sign_match_fraction = " << format_number(report.sign_match_fraction) << '\n'
     << "# correlation = " << format_number(report.correlation) << '\n'
     << "# reduced_sign_match_fraction = " << format_number(report.reduced_sign_match_fraction)
     << '\n'
     << "# reduced_correlation = " << format_number(report.reduced_correlation) << '\n'
     << "# max_divergence_interior = " << optional(report.max_divergence_interior) << '\n'
     << "# max_divergence_boundary = " << optional(report.max_divergence_boundary) << '\n';
  os << "x,y,z,t,te_dpdx,nse_dpdx,nse_dpdx_reduced,divergence,interior\n";
  for (const NSEComparisonPoint& p : report.points) {
    os << format_number(p.point.x) << ',' << format_number(p.point.y) << ','
       << format_number(p.point.z) << ',' << format_number(report.t) << ','
       << format_number(p.te_grad_px) << ',' << format_number(p.nse_grad_px) << ','
       << format_number(p.reduced_nse_grad_px) << ',' << format_number(p.divergence) << ','
       << (p.interior ? 1 : 0) << '\n';
  }
  return os.str();
}

}  // namespace tefields
