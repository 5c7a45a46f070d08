#include "mixflow/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mixflow/error.hpp"

namespace mixflow {
namespace {

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw Error(ErrorCode::NonPositiveEntry, std::string(name) + " must be positive, got " +
                                                 std::to_string(value));
  }
}

}  // namespace

MixtureParams validate_params(const MixtureParams& p, double symmetry_tol) {
  const std::size_t n = p.n_components;
  if (n < 2) throw Error(ErrorCode::BadDimension, "mixture needs at least two components");
  if (p.viscosity.size() != n)
    throw Error(ErrorCode::BadDimension, "viscosity matrix is not N x N");
  if (p.friction.size() != n) throw Error(ErrorCode::BadDimension, "friction matrix is not N x N");

  require_positive(p.pressure_coeff, "K");
  require_positive(p.gamma - 1.0, "gamma - 1");
  require_positive(p.t_final, "T_final");

  if (!is_symmetric(p.viscosity, symmetry_tol))
    throw Error(ErrorCode::NotSymmetric, "viscosity matrix is not symmetric");
  if (!is_symmetric(p.friction, symmetry_tol))
    throw Error(ErrorCode::NotSymmetric, "friction matrix is not symmetric");

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) {
        const std::string name = "a_" + std::to_string(i + 1) + std::to_string(j + 1);
        require_positive(p.friction(i, j), name.c_str());
      }

  for (double x : p.viscosity.data())
    if (!std::isfinite(x)) throw Error(ErrorCode::NonFinite, "viscosity matrix has non-finite entries");
  if (!cholesky(p.viscosity))
    throw Error(ErrorCode::NotPositiveDefinite, "viscosity matrix is not positive definite");

  return p;
}

DerivedMatrices derive_matrices(const MixtureParams& p) {
  const std::size_t n = p.n_components;
  DerivedMatrices d;
  d.viscosity_inverse = spd_inverse(p.viscosity);

  const Matrix residual = p.viscosity * d.viscosity_inverse - Matrix::identity(n);
  if (!(residual.frobenius_norm() <= 1e-12 * std::sqrt(double(n)) *
                                         std::max(1.0, p.viscosity.frobenius_norm() *
                                                           d.viscosity_inverse.frobenius_norm()))) {
    throw Error(ErrorCode::SingularMatrix, "viscosity inverse failed the identity check");
  }

  d.viscosity_eigen = jacobi_eigen(p.viscosity);
  d.coercivity = d.viscosity_eigen.values.front();
  d.viscosity_max = d.viscosity_eigen.values.back();
  if (!(d.coercivity > 0.0))
    throw Error(ErrorCode::SingularMatrix, "smallest viscosity eigenvalue is not positive");

  double total = 0.0;
  d.v_weights.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      total += d.viscosity_inverse(i, j);
      d.v_weights[j] += d.viscosity_inverse(i, j) / double(n);
    }
  d.k_tilde = p.pressure_coeff / double(n) * total;
  return d;
}

}  // namespace mixflow
