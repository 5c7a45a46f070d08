#pragma once

#include <vector>

#include "mixflow/scheme.hpp"
#include "mixflow/state.hpp"
#include "mixflow/trajectory.hpp"

namespace mixflow {

/// Classical single-component barotropic Navier-Stokes:
///   rho_t + (rho u)_x = 0,  rho (u_t + u u_x) + K (rho^gamma)_x = mu u_xx.
/// Written independently of the mixture solver but with the same
/// discretization, so that a mixture whose components all start with the
/// same velocity and has M = mu I must reproduce it.
struct SingleFluid {
  double pressure_coeff = 1.0;  // K
  double gamma = 1.4;
  double viscosity = 0.1;       // mu
  double t_final = 1.0;
};

/// Eulerian trajectory with one velocity component. Throws InvalidArgument
/// for non-positive mu, SolverFailure on blow-up.
Trajectory single_fluid_reference(const std::vector<double>& rho0, const std::vector<double>& u0,
                                  const Grid1D& grid, const SingleFluid& fluid,
                                  const SchemeConfig& cfg, double t_end,
                                  const RunControls& controls = {});

}  // namespace mixflow
