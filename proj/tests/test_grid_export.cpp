#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "tefields/config.hpp"
#include "tefields/errors.hpp"
#include "tefields/export.hpp"
#include "tefields/grid.hpp"

using namespace tefields;

namespace {

int count_lines(const std::string& s) {
  return static_cast<int>(std::count(s.begin(), s.end(), '\n'));
}

RunConfig small_config() {
  RunConfig cfg;
  cfg.grid.cartesian = {AxisRange{0.0, 10.0, 3}, AxisRange{0.0, 5.0, 2}, AxisRange::fixed(1.0)};
  cfg.grid.times = {0.0, 0.3};
  return cfg;
}

}  // namespace

TEST(ToroidMap, Examples) {
  const double pi = std::numbers::pi;
  EXPECT_EQ(toroid_map(ToroidAngles(0, 0, 0), 10.0), (Point3{0, 0, 0}));
  const Point3 p = toroid_map(ToroidAngles(pi / 2, pi / 6, pi), 10.0);
  EXPECT_EQ(p.x, 10.0);
  EXPECT_NEAR(p.y, 5.0, 1e-14);
  EXPECT_NEAR(p.z, 0.0, 1e-14);
}

TEST(ToroidMap, AnglesOutsideRangeRejected) {
  EXPECT_THROW(ToroidAngles(-0.1, 0, 0), ValidationError);
  EXPECT_THROW(ToroidAngles(0, 3.2, 0), ValidationError);
  EXPECT_THROW(ToroidAngles(0, 0, std::nan("")), ValidationError);
}

TEST(GridPoints, CartesianOrderFirstAxisSlowest) {
  const std::vector<Point3> pts = grid_points(small_config().grid, 10.0);
  ASSERT_EQ(pts.size(), 6u);
  EXPECT_EQ(pts[0], (Point3{0, 0, 1}));
  EXPECT_EQ(pts[1], (Point3{0, 5, 1}));
  EXPECT_EQ(pts[2], (Point3{5, 0, 1}));
  EXPECT_EQ(pts[5], (Point3{10, 5, 1}));
}

TEST(GridPoints, ToroidMapsAngles) {
  GridSpec g;
  g.geometry = Geometry::toroid;
  g.toroid = {AxisRange{0.0, std::numbers::pi / 2, 2}, AxisRange::fixed(0.0), AxisRange::fixed(0.0)};
  const std::vector<Point3> pts = grid_points(g, 4.0);
  ASSERT_EQ(pts.size(), 2u);
  EXPECT_EQ(pts[1], (Point3{4.0, 0.0, 0.0}));
}

TEST(SampleGrid, SinglePointSingleTime) {
  RunConfig cfg;
  cfg.grid.cartesian = {AxisRange::fixed(2.0), AxisRange::fixed(3.0), AxisRange::fixed(4.0)};
  cfg.grid.times = {0.0};
  const Table t = sample_grid(cfg);
  ASSERT_EQ(t.rows.size(), 1u);
  EXPECT_TRUE(t.free_coords.empty());
  EXPECT_EQ(t.rows[0].coords, (std::vector<double>{2, 3, 4, 0}));
  EXPECT_EQ(t.rows[0].values, (std::vector<double>{10, 0, 0}));
}

TEST(SampleGrid, RowOrderTimeFastest) {
  const Table t = sample_grid(small_config());
  ASSERT_EQ(t.rows.size(), 12u);
  EXPECT_EQ(t.coord_names, (std::vector<std::string>{"x", "y", "z", "t"}));
  EXPECT_EQ(t.free_coords, (std::vector<int>{0, 1, 3}));
  EXPECT_EQ(t.rows[0].coords, (std::vector<double>{0, 0, 1, 0}));
  EXPECT_EQ(t.rows[1].coords, (std::vector<double>{0, 0, 1, 0.3}));
  EXPECT_EQ(t.rows[2].coords, (std::vector<double>{0, 5, 1, 0}));
  EXPECT_EQ(t.rows[11].coords, (std::vector<double>{10, 5, 1, 0.3}));
}

TEST(SampleGrid, ToroidColumns) {
  RunConfig cfg;
  cfg.grid.geometry = Geometry::toroid;
  cfg.grid.toroid = {AxisRange{0.0, std::numbers::pi, 3}, AxisRange::fixed(std::numbers::pi / 2),
                     AxisRange::fixed(0.0)};
  const Table t = sample_grid(cfg);
  EXPECT_EQ(t.coord_names.size(), 7u);
  ASSERT_EQ(t.rows.size(), 3u);
  EXPECT_EQ(t.rows[1].coords[3], 10.0);
  EXPECT_EQ(t.rows[1].coords[4], 10.0);
}

TEST(SampleGrid, WorkerCountDoesNotChangeBytes) {
  RunConfig cfg = small_config();
  cfg.field = FieldSelection::energy;
  const std::string one = export_table(sample_grid(cfg, {1, false}), OutputFormat::csv);
  const std::string four = export_table(sample_grid(cfg, {4, false}), OutputFormat::csv);
  EXPECT_EQ(one, four);
}

TEST(SampleGrid, KeepGoingRecordsFailures) {
  RunConfig cfg = small_config();
  cfg.quad.max_panels = 1;
  cfg.grid.times = {0.0, 2.0};
  cfg.grid.cartesian[0] = AxisRange::fixed(5.0);
  const Table t = sample_grid(cfg, {2, true});
  ASSERT_EQ(t.rows.size(), 4u);
  EXPECT_TRUE(t.error_column);
  EXPECT_TRUE(t.rows[0].error.empty());
  EXPECT_EQ(t.rows[0].values[0], 10.0);
  EXPECT_FALSE(t.rows[1].error.empty());
  EXPECT_TRUE(std::isnan(t.rows[1].values[0]));
  const std::string csv = export_table(t, OutputFormat::csv);
  EXPECT_NE(csv.find(",error\n"), std::string::npos);
  EXPECT_NE(csv.find("did not converge"), std::string::npos);
}

TEST(SampleGrid, FailFastRethrows) {
  RunConfig cfg = small_config();
  cfg.quad.max_panels = 1;
  cfg.grid.times = {2.0};
  EXPECT_THROW(sample_grid(cfg), NoConvergence);
  EXPECT_THROW(sample_grid(cfg, {3, false}), NoConvergence);
}

TEST(SampleGrid, PressureNeedsUnitMass) {
  RunConfig cfg = small_config();
  cfg.field = FieldSelection::pressure;
  cfg.phys.m = 2.0;
  EXPECT_THROW(sample_grid(cfg), UnsupportedMass);
}

TEST(SampleGrid, ValidatesConfig) {
  RunConfig cfg = small_config();
  cfg.phys.L = -1.0;
  EXPECT_THROW(sample_grid(cfg), ValidationError);
}

TEST(ExportCsv, EmptyTableIsHeaderOnly) {
  Table t;
  t.coord_names = {"x", "t"};
  t.value_names = {"px"};
  EXPECT_EQ(export_table(t, OutputFormat::csv), "x,t,px\n");
}

TEST(ExportCsv, OneRowSeventeenDigits) {
  Table t;
  t.coord_names = {"x"};
  t.value_names = {"v"};
  t.rows.push_back({{0.1}, {1.0 / 3.0}, ""});
  const std::string csv = export_table(t, OutputFormat::csv);
  EXPECT_EQ(count_lines(csv), 2);
  EXPECT_EQ(csv, "x,v\n0.10000000000000001,0.33333333333333331\n");
}

TEST(ExportCsv, ErrorTextIsQuotedWhenNeeded) {
  Table t;
  t.coord_names = {"x"};
  t.value_names = {"v"};
  t.error_column = true;
  t.rows.push_back({{1.0}, {std::nan("")}, "bad, \"value\""});
  EXPECT_EQ(export_table(t, OutputFormat::csv), "x,v,error\n1,nan,\"bad, \"\"value\"\"\"\n");
}

TEST(ExportMatrix, BlankLineBetweenBlocks) {
  RunConfig cfg = small_config();
  cfg.grid.times = {0.0};
  const std::string m = export_table(sample_grid(cfg), OutputFormat::matrix);
  EXPECT_EQ(m,
            "# x y px py pz\n"
            "0 0 10 0 0\n0 5 10 0 0\n\n"
            "5 0 10 0 0\n5 5 10 0 0\n\n"
            "10 0 10 0 0\n10 5 10 0 0\n");
}

TEST(ExportMatrix, RequiresTwoFreeAxes) {
  const Table t = sample_grid(small_config());
  EXPECT_THROW(export_table(t, OutputFormat::matrix), FormatError);
  RunConfig line;
  line.grid.times = {0.0};
  EXPECT_THROW(export_table(sample_grid(line), OutputFormat::matrix), FormatError);
}

TEST(ExportReport, LayoutAndStatistics) {
  NSEReport r;
  r.t = 0.5;
  r.points.push_back({{1, 2, 3}, 0.25, -0.5, 0.75, 1e-3, true});
  r.max_divergence_interior = 1e-3;
  const std::string text = export_report(r);
  EXPECT_EQ(text.rfind(r.header(), 0), 0u);
  EXPECT_NE(text.find("# t = 0.5\n# points = 1\n"), std::string::npos);
  EXPECT_NE(text.find("# max_divergence_interior = 0.001\n"), std::string::npos);
  EXPECT_NE(text.find("# max_divergence_boundary = none\n"), std::string::npos);
  EXPECT_NE(text.find("x,y,z,t,te_dpdx,nse_dpdx,nse_dpdx_reduced,divergence,interior\n"
                      "1,2,3,0.5,0.25,-0.5,0.75,0.001,1\n"),
            std::string::npos);
}

TEST(FormatNumber, RoundTrips) {
  for (double v : {0.1, -1e-300, 123456789.123456789, 5e-324}) {
    EXPECT_EQ(std::strtod(format_number(v).c_str(), nullptr), v);
  }
}
