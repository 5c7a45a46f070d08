#pragma once

#include <vector>

#include "mixflow/model.hpp"
#include "mixflow/scheme.hpp"
#include "mixflow/state.hpp"
#include "mixflow/trajectory.hpp"

/// Mass-coordinate formulation on (0,d), d the total mass, and the maps
/// between the two frames.
///
/// The solver advances the specific volume tau = 1/rho with
/// tau_t = v_y (central inside, one-sided at the walls), which keeps the
/// trapezoid value of int tau dy, the Eulerian domain length, fixed exactly.
/// Momentum uses the central pressure gradient and the flux-form viscous
/// operator d/dy(rho_face du/dy) with harmonic face densities.
namespace mixflow::lagrange {

/// y(x) = int_0^x rho and its inverse, both as monotone cubic interpolants
/// through the trapezoid values at the Eulerian nodes.
struct MassGridMap {
  std::vector<double> x;  // Eulerian nodes
  std::vector<double> y;  // mass coordinate of each node

  double total_mass() const { return y.back(); }
  double y_of_x(double xv) const;
  double x_of_y(double yv) const;
};

/// Throws WrongFrame or DensityFloor.
MassGridMap make_mass_map(const State& eulerian);

/// Resamples rho and u_i onto the uniform mass grid with the same cell count.
/// The resampled density is rescaled so that the trapezoid value of
/// int dy/rho is exactly 1. Throws WrongFrame, DensityFloor.
State euler_to_lagrange(const State& s);

/// Rebuilds x(y) = int_0^y dy/rho and resamples onto the uniform grid of
/// (0,1). Throws WrongFrame, or DomainLengthDrift if |x(d) - 1| > drift_tol.
State lagrange_to_euler(const State& s, double drift_tol = 1e-4);

/// rho_t = -rho^2 v_y and u_i,t; velocity tendencies vanish at the walls.
StateRates rhs_lagrangian(const State& s, const MixtureParams& p, const DerivedMatrices& d,
                          const SchemeConfig& cfg = {});

/// cfl * min(h / max(rho c), h^2 / (2 lambda_max(M) max(rho))); the viscous
/// bound is dropped for the semi-implicit integrator.
double stable_dt(const State& s, const MixtureParams& p, const DerivedMatrices& d,
                 const SchemeConfig& cfg);

State step_lagrangian(const State& s, const MixtureParams& p, const DerivedMatrices& d,
                      const SchemeConfig& cfg, double dt, const Forcing& forcing = {});
State step_lagrangian(const State& s, const MixtureParams& p, const DerivedMatrices& d,
                      const SchemeConfig& cfg);

/// |rho v_y + d(ln rho)/dt|_2 over one step, with the time derivative taken
/// as the difference quotient and rho v_y averaged over the two ends.
double identity_residual(const State& before, const State& after);

/// Integrates to t_end. When `identity_residuals` is given, the residual of
/// every step is appended to it. Throws SolverFailure on blow-up.
Trajectory run_lagrangian(const State& initial, const MixtureParams& p, const DerivedMatrices& d,
                          const SchemeConfig& cfg, double t_end, const RunControls& controls = {},
                          std::vector<double>* identity_residuals = nullptr);

}  // namespace mixflow::lagrange
