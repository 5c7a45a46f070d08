#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "mixflow/state.hpp"

namespace mixflow {

enum class Integrator { ExplicitRK2, ExplicitRK4, SemiImplicitViscosity };
enum class Advection { FirstOrderUpwind, Central2 };

std::string_view to_string(Integrator i);
std::string_view to_string(Advection a);
Integrator integrator_from_string(std::string_view s);
Advection advection_from_string(std::string_view s);

struct SchemeConfig {
  Integrator integrator = Integrator::ExplicitRK2;
  double cfl = 0.4;
  Advection advection = Advection::FirstOrderUpwind;
  double density_floor = 1e-12;

  bool operator==(const SchemeConfig&) const = default;
};

/// Throws InvalidArgument unless cfl is in (0, 1] and the floor is >= 0.
SchemeConfig validate_scheme(const SchemeConfig& cfg);

/// Time derivatives of every field at one instant.
struct StateRates {
  std::vector<double> rho;
  std::vector<std::vector<double>> velocity;
};

/// Source terms added to the tendencies (used by manufactured-solution runs).
using Forcing = std::function<void(const State&, StateRates&)>;

/// Controls shared by the Eulerian and Lagrangian drivers.
struct RunControls {
  std::size_t snapshot_every = 1;  // store every k-th step (the final state is always stored)
  double snapshot_interval = 0.0;  // if > 0, store the first state at or past each multiple instead
  std::size_t diag_every = 1;      // record diagnostics every k-th step
  bool record_diagnostics = true;
  std::optional<double> fixed_dt;  // overrides stable_dt (still clipped at t_end)
  Forcing forcing;
  std::function<void(const State&)> on_snapshot;
  std::function<void(const State& before, const State& after)> on_step;
};

}  // namespace mixflow
