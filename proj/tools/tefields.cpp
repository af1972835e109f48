// Command-line driver: evaluates field grids, divergence and NSE checks,
// and runs the oracle self-check.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "tefields/config.hpp"
#include "tefields/errors.hpp"
#include "tefields/export.hpp"
#include "tefields/grid.hpp"
#include "tefields/nse_check.hpp"
#include "tefields/selfcheck.hpp"

namespace {

using namespace tefields;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitNoConvergence = 2;

struct Invocation {
  std::string config_path;
  std::string output_path;
  unsigned workers = 1;
  bool keep_going = false;
  bool show_config = false;
  std::map<std::string, std::string> settings;  // config key -> flag value
};

// grid.x -> --x, nodes_per_panel -> --nodes-per-panel
std::string flag_for_key(const std::string& key) {
  std::string name = key.rfind("grid.", 0) == 0 ? key.substr(5) : key;
  for (char& c : name) {
    if (c == '_') c = '-';
  }
  return "--" + name;
}

void add_run_options(CLI::App* sub, Invocation& inv) {
  sub->add_option("-c,--config", inv.config_path, "key = value configuration file");
  sub->add_option("-o,--output", inv.output_path, "write output here instead of stdout");
  sub->add_option("-j,--workers", inv.workers, "parallel evaluation workers")
      ->check(CLI::Range(1u, 1024u));
  sub->add_flag("--keep-going", inv.keep_going,
                "record failed rows as NaN with an error column instead of stopping");
  sub->add_flag("--show-config", inv.show_config,
                "print the effective configuration and exit");
  for (const std::string& key : config_keys()) {
    sub->add_option_function<std::string>(
           flag_for_key(key), [&inv, key](const std::string& v) { inv.settings[key] = v; },
           "config key " + key)
        ->type_name("VALUE");
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("config", "cannot read file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

RunConfig build_config(const Invocation& inv,
                       const std::map<std::string, std::string>& forced) {
  RunConfig cfg = inv.config_path.empty() ? RunConfig{} : parse_config(read_file(inv.config_path));
  for (const auto& [key, value] : inv.settings) apply_setting(cfg, key, value);
  for (const auto& [key, value] : forced) apply_setting(cfg, key, value);
  cfg.validate();
  return cfg;
}

void emit(const Invocation& inv, const std::string& text) {
  if (inv.output_path.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(inv.output_path, std::ios::binary | std::ios::trunc);
  if (!out) throw ValidationError("output", "cannot write file '" + inv.output_path + "'");
  out << text;
}

int run_grid(const Invocation& inv, const std::map<std::string, std::string>& forced) {
  const RunConfig cfg = build_config(inv, forced);
  if (inv.show_config) {
    emit(inv, render_config(cfg));
    return kExitOk;
  }
  SampleOptions options;
  options.workers = inv.workers;
  options.keep_going = inv.keep_going;
  const Table table = sample_grid(cfg, options);
  emit(inv, export_table(table, cfg.format));
  if (table.error_column) {
    std::size_t failed = 0;
    for (const Row& row : table.rows) failed += row.error.empty() ? 0 : 1;
    if (failed > 0) std::cerr << "warning: " << failed << " row(s) failed and hold NaN\n";
  }
  return kExitOk;
}

int run_compare(const Invocation& inv) {
  const RunConfig cfg = build_config(inv, {{"field", "compare"}});
  if (inv.show_config) {
    emit(inv, render_config(cfg));
    return kExitOk;
  }
  const std::vector<Point3> points = grid_points(cfg.grid, cfg.phys.L);
  std::string text;
  for (double t : cfg.grid.times) {
    text += export_report(compare_te_nse(points, t, cfg.phys, cfg.quad, cfg.step()));
  }
  emit(inv, text);
  return kExitOk;
}

int run_selfcheck(const Invocation& inv) {
  std::ostringstream os;
  const bool ok = tefields::run_selfcheck(os);
  emit(inv, os.str());
  return ok ? kExitOk : kExitInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Time-evolved momentum, energy and pressure fields of a jet crossing a cube"};
  app.require_subcommand(1);

  Invocation inv;
  CLI::App* fields = app.add_subcommand("fields", "sample the selected field on a grid");
  CLI::App* toroid = app.add_subcommand("toroid", "sample on the toroid embedding");
  CLI::App* divergence = app.add_subcommand("divergence", "sample div u on a grid");
  CLI::App* nse = app.add_subcommand("nse", "sample the NSE x-pressure gradient terms");
  CLI::App* compare = app.add_subcommand("compare", "compare TE and NSE pressure gradients");
  CLI::App* selfcheck = app.add_subcommand("selfcheck", "run the oracle self-check suite");
  for (CLI::App* sub : {fields, toroid, divergence, nse, compare}) add_run_options(sub, inv);
  selfcheck->add_option("-o,--output", inv.output_path, "write output here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*fields) return run_grid(inv, {});
    if (*toroid) return run_grid(inv, {{"grid.geometry", "toroid"}});
    if (*divergence) return run_grid(inv, {{"field", "divergence"}});
    if (*nse) return run_grid(inv, {{"field", "nse"}});
    if (*compare) return run_compare(inv);
    if (*selfcheck) return run_selfcheck(inv);
  } catch (const NoConvergence& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNoConvergence;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}
