#include "tefields/selfcheck.hpp"

#include <vector>

#include "tefields/checks.hpp"

namespace tefields {

bool run_selfcheck(std::ostream& out) {
  using namespace checks;
  constexpr std::uint64_t seed = 20240611;
  const std::vector<CheckResult> results = {
      closed_form_h(5, seed),
      h_partials(10, seed + 1),
      time_reduction(3, seed + 2),
      initial_data(5, seed + 3),
      mirror_symmetry(5, seed + 4),
      g2_scaling({5.0, 0.0, 0.0}, 0.5),
      px_plateau({5.0, 0.0, 0.0}, 200.0, 400.0),
  };
  bool ok = true;
  for (const CheckResult& r : results) {
    out << format_check(r) << '\n';
    ok = ok && r.passed;
  }
  out << (ok ? "selfcheck passed" : "selfcheck FAILED") << '\n';
  return ok;
}

}  // namespace tefields
