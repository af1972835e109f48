#include "tefields/params.hpp"

#include <string>

namespace tefields {

namespace {

void require_finite(const char* key, double v) {
  if (!std::isfinite(v)) throw ValidationError(key, "must be finite");
}

}  // namespace

void PhysParams::validate() const {
  require_finite("a", a);
  require_finite("g", g);
  require_finite("m", m);
  require_finite("L", L);
  require_finite("p0", p0);
  require_finite("nu", nu);
  if (!(a > 0)) throw ValidationError("a", "a > 0");
  if (!(m > 0)) throw ValidationError("m", "m > 0");
  if (!(L > 0)) throw ValidationError("L", "L > 0");
  if (!(nu >= 0)) throw ValidationError("nu", "nu >= 0");
}

}  // namespace tefields
