#pragma once

#include <string>
#include <vector>

#include "tefields/config.hpp"
#include "tefields/params.hpp"

namespace tefields {

/// Angles of the periodic embedding, each in [0, pi].
class ToroidAngles {
 public:
  /// Throws ValidationError when an angle is outside [0, pi].
  ToroidAngles(double theta, double phi, double omega);

  double theta() const { return theta_; }
  double phi() const { return phi_; }
  double omega() const { return omega_; }

 private:
  double theta_;
  double phi_;
  double omega_;
};

/// (L sin theta, L sin phi, L sin omega).
Point3 toroid_map(const ToroidAngles& angles, double L);

struct Row {
  std::vector<double> coords;  ///< grid coordinates followed by x, y, z (toroid) and t
  std::vector<double> values;
  std::string error;  ///< set only under keep-going when evaluation failed
};

struct Table {
  std::vector<std::string> coord_names;
  std::vector<std::string> value_names;
  /// Indices into coords of the axes that vary across rows.
  std::vector<int> free_coords;
  bool error_column = false;
  std::vector<Row> rows;
};

struct SampleOptions {
  unsigned workers = 1;
  bool keep_going = false;
};

/// Evaluates the selected field at every grid point and time. Rows are
/// ordered with the first spatial axis slowest and time fastest, whatever
/// the worker count. Fail-fast rethrows the lowest-index row failure;
/// keep-going records NaN values and the error text instead.
Table sample_grid(const RunConfig& config, const SampleOptions& options = {});

/// Cartesian evaluation points of a grid, in row order (times excluded).
std::vector<Point3> grid_points(const GridSpec& grid, double L);

}  // namespace tefields
