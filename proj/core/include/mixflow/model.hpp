#pragma once

#include <cstddef>
#include <vector>

#include "mixflow/matrix.hpp"

namespace mixflow {

/// Physical constants of the N-velocity polytropic mixture.
///
/// Pressure is K * rho^gamma. `viscosity` couples the component velocities
/// through sum_j mu_ij u_j,xx; `friction` exchanges momentum through
/// sum_j a_ij (u_j - u_i). The diagonal of `friction` never enters the
/// equations and is accepted as-is.
struct MixtureParams {
  std::size_t n_components = 2;
  double pressure_coeff = 1.0;  // K
  double gamma = 1.4;
  Matrix viscosity;  // M
  Matrix friction;   // A
  double t_final = 1.0;

  bool operator==(const MixtureParams&) const = default;
};

/// Quantities derived once from a validated MixtureParams.
struct DerivedMatrices {
  Matrix viscosity_inverse;       // M^{-1}
  double coercivity = 0.0;        // C0, smallest eigenvalue of M
  double viscosity_max = 0.0;     // largest eigenvalue of M
  double k_tilde = 0.0;           // (K/N) sum_ij (M^{-1})_ij
  std::vector<double> v_weights;  // w_j = (1/N) sum_i (M^{-1})_ij, so V = sum_j w_j u_j
  SymmetricEigen viscosity_eigen;
};

/// Checks every hypothesis the solvability theory places on the data and
/// returns the params unchanged. Throws NotSymmetric, NotPositiveDefinite,
/// NonPositiveEntry or BadDimension.
MixtureParams validate_params(const MixtureParams& p, double symmetry_tol = 1e-12);

/// Inverse viscosity, C0, K~ and the V weights. Expects validated params.
DerivedMatrices derive_matrices(const MixtureParams& p);

}  // namespace mixflow
