#include "tefields/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "tefields/errors.hpp"

namespace tefields {

namespace {

constexpr double kPi = 3.141592653589793;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Thrown by value parsers; positioned by the caller.
struct BadValue {
  std::string what;
};

double parse_double(std::string_view s) {
  s = trim(s);
  if (s == "pi") return kPi;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    throw BadValue{"expected a number, got '" + std::string(s) + "'"};
  return v;
}

int parse_int(std::string_view s) {
  s = trim(s);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    throw BadValue{"expected an integer, got '" + std::string(s) + "'"};
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

AxisRange parse_axis(std::string_view s) {
  const auto parts = split(s, ':');
  if (parts.size() == 1) return AxisRange::fixed(parse_double(parts[0]));
  if (parts.size() != 3) throw BadValue{"expected 'value' or 'min:max:count'"};
  return {parse_double(parts[0]), parse_double(parts[1]), parse_int(parts[2])};
}

std::string render_axis(const AxisRange& r) {
  if (r.count == 1 && r.min == r.max) return format_double(r.min);
  return format_double(r.min) + ":" + format_double(r.max) + ":" + std::to_string(r.count);
}

std::vector<double> parse_times(std::string_view s) {
  if (s.find(':') != std::string_view::npos) {
    const AxisRange r = parse_axis(s);
    if (r.count < 1) throw BadValue{"time count must be >= 1"};
    return r.values();
  }
  std::vector<double> out;
  for (auto part : split(s, ',')) out.push_back(parse_double(part));
  return out;
}

std::string render_times(const std::vector<double>& times) {
  std::string out;
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (i) out += ", ";
    out += format_double(times[i]);
  }
  return out;
}

template <typename Enum, std::size_t N>
Enum parse_enum(std::string_view s, const std::array<Enum, N>& all) {
  s = trim(s);
  for (Enum e : all)
    if (to_string(e) == s) return e;
  std::string options;
  for (Enum e : all) options += (options.empty() ? "" : " | ") + std::string(to_string(e));
  throw BadValue{"expected one of " + options};
}

constexpr std::array kFields{FieldSelection::momentum, FieldSelection::energy,
                             FieldSelection::pressure, FieldSelection::divergence,
                             FieldSelection::nse,      FieldSelection::compare};
constexpr std::array kFormats{OutputFormat::csv, OutputFormat::matrix};
constexpr std::array kGeometries{Geometry::cartesian, Geometry::toroid};

struct KeyHandler {
  std::function<void(RunConfig&, std::string_view)> set;
  std::function<std::string(const RunConfig&)> get;
};

KeyHandler number(double PhysParams::*field) {
  return {[field](RunConfig& c, std::string_view v) { c.phys.*field = parse_double(v); },
          [field](const RunConfig& c) { return format_double(c.phys.*field); }};
}

const std::vector<std::pair<std::string, KeyHandler>>& handlers() {
  static const std::vector<std::pair<std::string, KeyHandler>> table = [] {
    std::vector<std::pair<std::string, KeyHandler>> t;
    t.emplace_back("a", number(&PhysParams::a));
    t.emplace_back("g", number(&PhysParams::g));
    t.emplace_back("m", number(&PhysParams::m));
    t.emplace_back("L", number(&PhysParams::L));
    t.emplace_back("p0", number(&PhysParams::p0));
    t.emplace_back("nu", number(&PhysParams::nu));
    t.emplace_back("nodes_per_panel",
                   KeyHandler{[](RunConfig& c, std::string_view v) {
                                c.quad.nodes_per_panel = parse_int(v);
                              },
                              [](const RunConfig& c) {
                                return std::to_string(c.quad.nodes_per_panel);
                              }});
    t.emplace_back("max_panels",
                   KeyHandler{[](RunConfig& c, std::string_view v) {
                                c.quad.max_panels = parse_int(v);
                              },
                              [](const RunConfig& c) {
                                return std::to_string(c.quad.max_panels);
                              }});
    t.emplace_back("rel_tol", KeyHandler{[](RunConfig& c, std::string_view v) {
                                           c.quad.rel_tol = parse_double(v);
                                         },
                                         [](const RunConfig& c) {
                                           return format_double(c.quad.rel_tol);
                                         }});
    t.emplace_back("abs_tol", KeyHandler{[](RunConfig& c, std::string_view v) {
                                           c.quad.abs_tol = parse_double(v);
                                         },
                                         [](const RunConfig& c) {
                                           return format_double(c.quad.abs_tol);
                                         }});
    t.emplace_back("grid.geometry",
                   KeyHandler{[](RunConfig& c, std::string_view v) {
                                c.grid.geometry = parse_enum(v, kGeometries);
                              },
                              [](const RunConfig& c) {
                                return std::string(to_string(c.grid.geometry));
                              }});
    const char* cart[] = {"grid.x", "grid.y", "grid.z"};
    const char* tor[] = {"grid.theta", "grid.phi", "grid.omega"};
    for (int i = 0; i < 3; ++i) {
      t.emplace_back(cart[i], KeyHandler{[i](RunConfig& c, std::string_view v) {
                                           c.grid.cartesian[i] = parse_axis(v);
                                         },
                                         [i](const RunConfig& c) {
                                           return render_axis(c.grid.cartesian[i]);
                                         }});
    }
    for (int i = 0; i < 3; ++i) {
      t.emplace_back(tor[i], KeyHandler{[i](RunConfig& c, std::string_view v) {
                                          c.grid.toroid[i] = parse_axis(v);
                                        },
                                        [i](const RunConfig& c) {
                                          return render_axis(c.grid.toroid[i]);
                                        }});
    }
    t.emplace_back("times", KeyHandler{[](RunConfig& c, std::string_view v) {
                                         c.grid.times = parse_times(v);
                                       },
                                       [](const RunConfig& c) {
                                         return render_times(c.grid.times);
                                       }});
    t.emplace_back("field", KeyHandler{[](RunConfig& c, std::string_view v) {
                                         c.field = parse_enum(v, kFields);
                                       },
                                       [](const RunConfig& c) {
                                         return std::string(to_string(c.field));
                                       }});
    t.emplace_back("format", KeyHandler{[](RunConfig& c, std::string_view v) {
                                          c.format = parse_enum(v, kFormats);
                                        },
                                        [](const RunConfig& c) {
                                          return std::string(to_string(c.format));
                                        }});
    t.emplace_back("fd_step", KeyHandler{[](RunConfig& c, std::string_view v) {
                                           if (trim(v) == "default")
                                             c.fd_step.reset();
                                           else
                                             c.fd_step = parse_double(v);
                                         },
                                         [](const RunConfig& c) {
                                           return c.fd_step ? format_double(*c.fd_step)
                                                            : std::string("default");
                                         }});
    return t;
  }();
  return table;
}

const KeyHandler* find_handler(std::string_view key) {
  for (const auto& [name, h] : handlers())
    if (name == key) return &h;
  return nullptr;
}

}  // namespace

double AxisRange::at(int i) const {
  if (count <= 1) return min;
  if (i == count - 1) return max;
  return min + (max - min) * static_cast<double>(i) / static_cast<double>(count - 1);
}

std::vector<double> AxisRange::values() const {
  std::vector<double> v;
  v.reserve(std::max(count, 0));
  for (int i = 0; i < count; ++i) v.push_back(at(i));
  return v;
}

void GridSpec::validate() const {
  const char* cart[] = {"grid.x", "grid.y", "grid.z"};
  const char* tor[] = {"grid.theta", "grid.phi", "grid.omega"};
  for (int i = 0; i < 3; ++i) {
    for (const auto& [r, name] : {std::pair{cartesian[i], cart[i]}, std::pair{toroid[i], tor[i]}}) {
      if (r.count < 1) throw ValidationError(name, "count >= 1");
      if (!std::isfinite(r.min) || !std::isfinite(r.max))
        throw ValidationError(name, "bounds must be finite");
      if (!(r.min <= r.max)) throw ValidationError(name, "min <= max");
    }
    if (toroid[i].min < 0.0 || toroid[i].max > kPi)
      throw ValidationError(tor[i], "angles must lie in [0, pi]");
  }
  if (times.empty()) throw ValidationError("times", "at least one time");
  for (double t : times)
    if (!(t >= 0) || !std::isfinite(t)) throw ValidationError("times", "t >= 0");
}

void RunConfig::validate() const {
  phys.validate();
  quad.validate();
  grid.validate();
  if (fd_step && (!(*fd_step > 0) || !std::isfinite(*fd_step)))
    throw ValidationError("fd_step", "fd_step > 0");
}

std::string_view to_string(FieldSelection f) {
  switch (f) {
    case FieldSelection::momentum: return "momentum";
    case FieldSelection::energy: return "energy";
    case FieldSelection::pressure: return "pressure";
    case FieldSelection::divergence: return "divergence";
    case FieldSelection::nse: return "nse";
    case FieldSelection::compare: return "compare";
  }
  return "?";
}

std::string_view to_string(OutputFormat f) {
  return f == OutputFormat::csv ? "csv" : "matrix";
}

std::string_view to_string(Geometry g) {
  return g == Geometry::cartesian ? "cartesian" : "toroid";
}

void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value) {
  const KeyHandler* h = find_handler(key);
  if (!h) throw ValidationError(std::string(key), "unknown key");
  try {
    h->set(cfg, trim(value));
  } catch (const BadValue& e) {
    throw ValidationError(std::string(key), e.what);
  }
}

RunConfig parse_config(std::string_view text) {
  RunConfig cfg;
  std::set<std::string, std::less<>> seen;
  int line_no = 0;
  for (std::string_view line : split(text, '\n')) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    if (trim(line).empty()) continue;

    const auto eq = line.find('=');
    const int key_col = static_cast<int>(line.find_first_not_of(" \t")) + 1;
    if (eq == std::string_view::npos) throw ParseError(line_no, key_col, "expected 'key = value'");
    const std::string_view key = trim(line.substr(0, eq));
    if (key.empty()) throw ParseError(line_no, key_col, "missing key before '='");
    const std::string_view raw_value = line.substr(eq + 1);
    const std::string_view value = trim(raw_value);
    const int value_col = static_cast<int>(eq + 1 + raw_value.find_first_not_of(" \t")) + 1;
    if (value.empty()) throw ParseError(line_no, static_cast<int>(eq) + 2, "missing value");
    if (!seen.emplace(key).second)
      throw ParseError(line_no, key_col, "duplicate key '" + std::string(key) + "'");

    const KeyHandler* h = find_handler(key);
    if (!h) throw ValidationError(std::string(key), "unknown key");
    try {
      h->set(cfg, value);
    } catch (const BadValue& e) {
      throw ParseError(line_no, value_col, std::string(key) + ": " + e.what);
    }
  }
  cfg.validate();
  return cfg;
}

std::string render_config(const RunConfig& cfg) {
  std::ostringstream os;
  for (const auto& [name, h] : handlers()) os << name << " = " << h.get(cfg) << '\n';
  return os.str();
}

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> k;
    for (const auto& [name, h] : handlers()) k.push_back(name);
    return k;
  }();
  return keys;
}

}  // namespace tefields
