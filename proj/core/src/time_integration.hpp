#pragma once

// Internal: explicit Runge-Kutta and IMEX drivers shared by the Eulerian and
// Lagrangian solvers. The density slot holds rho (Eulerian) or the specific
// volume 1/rho (Lagrangian); the integrators only see linear combinations.

#include <cmath>
#include <functional>
#include <vector>

#include "mixflow/scheme.hpp"

namespace mixflow::detail {

struct Fields {
  std::vector<double> density;
  std::vector<std::vector<double>> velocity;
};

using Velocities = std::vector<std::vector<double>>;

struct SpatialOperator {
  /// Rates of every field at time t. The viscous term is omitted when
  /// `with_viscosity` is false (IMEX explicit part).
  std::function<Fields(const Fields&, double t, bool with_viscosity)> rates;
  /// Solves u - theta_dt * Visc(u; stage density) = rhs for interior nodes.
  std::function<Velocities(const Fields& stage, double theta_dt, const Velocities& rhs)> viscous_solve;
  /// Visc(u; stage density).
  std::function<Velocities(const Fields& stage)> viscous_apply;
  /// Throws DensityFloor / NonFinite on an unusable intermediate stage.
  std::function<void(const Fields&)> check;
};

/// y + sum_k c_k r_k
inline Fields combine(const Fields& y, std::initializer_list<std::pair<double, const Fields*>> terms) {
  Fields out = y;
  for (const auto& [c, r] : terms) {
    for (std::size_t k = 0; k < out.density.size(); ++k) out.density[k] += c * r->density[k];
    for (std::size_t i = 0; i < out.velocity.size(); ++i)
      for (std::size_t k = 0; k < out.velocity[i].size(); ++k)
        out.velocity[i][k] += c * r->velocity[i][k];
  }
  return out;
}

inline Fields advance(const Fields& y, double t, double dt, Integrator integrator,
                      const SpatialOperator& op) {
  switch (integrator) {
    case Integrator::ExplicitRK2: {
      const Fields k1 = op.rates(y, t, true);
      const Fields y1 = combine(y, {{dt, &k1}});
      op.check(y1);
      const Fields k2 = op.rates(y1, t + dt, true);
      return combine(y, {{0.5 * dt, &k1}, {0.5 * dt, &k2}});
    }
    case Integrator::ExplicitRK4: {
      const Fields k1 = op.rates(y, t, true);
      const Fields y1 = combine(y, {{0.5 * dt, &k1}});
      op.check(y1);
      const Fields k2 = op.rates(y1, t + 0.5 * dt, true);
      const Fields y2 = combine(y, {{0.5 * dt, &k2}});
      op.check(y2);
      const Fields k3 = op.rates(y2, t + 0.5 * dt, true);
      const Fields y3 = combine(y, {{dt, &k3}});
      op.check(y3);
      const Fields k4 = op.rates(y3, t + dt, true);
      return combine(y, {{dt / 6.0, &k1}, {dt / 3.0, &k2}, {dt / 3.0, &k3}, {dt / 6.0, &k4}});
    }
    case Integrator::SemiImplicitViscosity: {
      // ARS(2,2,2): L-stable, stiffly accurate implicit part; second order overall.
      const double g = 1.0 - 1.0 / std::sqrt(2.0);
      const double delta = 1.0 - 1.0 / (2.0 * g);

      const Fields e1 = op.rates(y, t, false);
      Fields u2 = combine(y, {{g * dt, &e1}});
      op.check(u2);
      u2.velocity = op.viscous_solve(u2, g * dt, u2.velocity);
      Fields i2{std::vector<double>(y.density.size(), 0.0), op.viscous_apply(u2)};

      const Fields e2 = op.rates(u2, t + g * dt, false);
      Fields u3 = combine(y, {{delta * dt, &e1}, {(1.0 - delta) * dt, &e2}, {(1.0 - g) * dt, &i2}});
      op.check(u3);
      u3.velocity = op.viscous_solve(u3, g * dt, u3.velocity);
      return u3;
    }
  }
  return y;
}

}  // namespace mixflow::detail
