#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tefields/params.hpp"
#include "tefields/quadrature.hpp"

namespace tefields {

/// Closed range sampled at count evenly spaced points (endpoints included).
/// A single-point axis is fixed at min.
struct AxisRange {
  double min = 0.0;
  double max = 0.0;
  int count = 1;

  static AxisRange fixed(double v) { return {v, v, 1}; }
  bool free() const { return count > 1; }
  double at(int i) const;
  std::vector<double> values() const;

  friend bool operator==(const AxisRange&, const AxisRange&) = default;
};

enum class Geometry { cartesian, toroid };

/// Spatial scan window plus the list of evaluation times. Cartesian scans
/// use x, y, z; toroid scans use the angles theta, phi, omega in [0, pi].
struct GridSpec {
  Geometry geometry = Geometry::cartesian;
  std::array<AxisRange, 3> cartesian{AxisRange{0.0, 10.0, 21}, AxisRange::fixed(0.0),
                                     AxisRange::fixed(0.0)};
  std::array<AxisRange, 3> toroid{AxisRange{0.0, 3.141592653589793, 21},
                                  AxisRange{0.0, 3.141592653589793, 21},
                                  AxisRange::fixed(0.0)};
  std::vector<double> times{0.1};

  const std::array<AxisRange, 3>& axes() const {
    return geometry == Geometry::cartesian ? cartesian : toroid;
  }
  void validate() const;

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

enum class FieldSelection { momentum, energy, pressure, divergence, nse, compare };
enum class OutputFormat { csv, matrix };

struct RunConfig {
  PhysParams phys;
  QuadratureSpec quad;
  GridSpec grid;
  FieldSelection field = FieldSelection::momentum;
  OutputFormat format = OutputFormat::csv;
  std::optional<double> fd_step;  ///< defaults to L / 200

  double step() const { return fd_step.value_or(phys.L / 200.0); }
  void validate() const;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

std::string_view to_string(FieldSelection f);
std::string_view to_string(OutputFormat f);
std::string_view to_string(Geometry g);

/// Parses line-oriented `key = value` text with `#` comments into a
/// validated configuration. Omitted keys keep their defaults.
/// Throws ParseError for malformed text, ValidationError for unknown keys
/// or values that violate a constraint.
RunConfig parse_config(std::string_view text);

/// Applies one setting to cfg without validating the whole configuration.
/// Throws ValidationError (unknown key or unparseable value).
void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value);

/// Every key with its current value, in parse_config syntax.
std::string render_config(const RunConfig& cfg);

/// Keys accepted by parse_config, in render order.
const std::vector<std::string>& config_keys();

}  // namespace tefields
