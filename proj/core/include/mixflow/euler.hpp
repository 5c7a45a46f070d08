#pragma once

#include <vector>

#include "mixflow/model.hpp"
#include "mixflow/scheme.hpp"
#include "mixflow/state.hpp"
#include "mixflow/trajectory.hpp"

/// Finite-difference solver for the mixture in Eulerian coordinates on (0,1).
///
/// Collocated nodes. Mass moves through face fluxes
///   F = (rho_k v_k + rho_{k+1} v_{k+1}) / 2  [- |v_f| (rho_{k+1} - rho_k) / 2 upwind],
/// with half cells at the walls, so the trapezoid mass is conserved exactly.
/// The momentum equations are advanced in velocity form; the convective term
/// reuses the same mass fluxes and the pressure gradient is the central
/// difference of the enthalpy K gamma/(gamma-1) rho^(gamma-1). With these
/// choices the semi-discrete kinetic plus potential energy obeys the same
/// balance as the continuum, minus non-negative upwind dissipation.
namespace mixflow::euler {

/// -d(rho v)/dx for the configured advection scheme.
std::vector<double> rhs_continuity(const State& s, const SchemeConfig& cfg = {});

/// du_i/dt for every component; zero at the walls. Throws DensityFloor.
std::vector<std::vector<double>> rhs_momentum(const State& s, const MixtureParams& p,
                                              const DerivedMatrices& d,
                                              const SchemeConfig& cfg = {});

/// Both tendencies at once.
StateRates rates(const State& s, const MixtureParams& p, const DerivedMatrices& d,
                 const SchemeConfig& cfg = {});

/// cfl * min(h / max(|v| + c), h^2 min(rho) / (2 lambda_max(M))); the viscous
/// bound is dropped for the semi-implicit integrator.
double stable_dt(const State& s, const MixtureParams& p, const DerivedMatrices& d,
                 const SchemeConfig& cfg);

/// One step of size dt. Throws DensityFloor or NonFinite.
State step(const State& s, const MixtureParams& p, const DerivedMatrices& d,
           const SchemeConfig& cfg, double dt, const Forcing& forcing = {});

/// One step of size stable_dt.
State step(const State& s, const MixtureParams& p, const DerivedMatrices& d,
           const SchemeConfig& cfg);

/// Integrates from initial.time to t_end. Throws SolverFailure on blow-up.
Trajectory run(const State& initial, const MixtureParams& p, const DerivedMatrices& d,
               const SchemeConfig& cfg, double t_end, const RunControls& controls = {});

}  // namespace mixflow::euler
