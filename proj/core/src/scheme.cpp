#include "mixflow/scheme.hpp"

#include <cmath>
#include <string>

#include "mixflow/error.hpp"

namespace mixflow {

std::string_view to_string(Integrator i) {
  switch (i) {
    case Integrator::ExplicitRK2: return "explicit-rk2";
    case Integrator::ExplicitRK4: return "explicit-rk4";
    case Integrator::SemiImplicitViscosity: return "semi-implicit-viscosity";
  }
  return "?";
}

std::string_view to_string(Advection a) {
  return a == Advection::FirstOrderUpwind ? "first-order-upwind" : "central-2";
}

Integrator integrator_from_string(std::string_view s) {
  if (s == "explicit-rk2" || s == "rk2") return Integrator::ExplicitRK2;
  if (s == "explicit-rk4" || s == "rk4") return Integrator::ExplicitRK4;
  if (s == "semi-implicit-viscosity" || s == "semi-implicit") return Integrator::SemiImplicitViscosity;
  throw Error(ErrorCode::InvalidArgument, "unknown time integrator '" + std::string(s) + "'");
}

Advection advection_from_string(std::string_view s) {
  if (s == "first-order-upwind" || s == "upwind") return Advection::FirstOrderUpwind;
  if (s == "central-2" || s == "central") return Advection::Central2;
  throw Error(ErrorCode::InvalidArgument, "unknown advection scheme '" + std::string(s) + "'");
}

SchemeConfig validate_scheme(const SchemeConfig& cfg) {
  if (!(cfg.cfl > 0.0 && cfg.cfl <= 1.0))
    throw Error(ErrorCode::InvalidArgument, "cfl must lie in (0, 1]");
  if (!(cfg.density_floor >= 0.0) || !std::isfinite(cfg.density_floor))
    throw Error(ErrorCode::InvalidArgument, "density floor must be non-negative");
  return cfg;
}

}  // namespace mixflow
