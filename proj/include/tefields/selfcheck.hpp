#pragma once

#include <ostream>

namespace tefields {

/// Runs a reduced oracle suite (closed form vs brute force, derivative
/// consistency, reduced vs nested time integrals, initial data, mirror
/// symmetry, g^2 scaling) and prints one PASS/FAIL line per check.
/// Returns true when every check passes.
bool run_selfcheck(std::ostream& out);

}  // namespace tefields
