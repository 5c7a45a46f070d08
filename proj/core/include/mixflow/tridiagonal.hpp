#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mixflow/error.hpp"

namespace mixflow {

/// Thomas algorithm for lower[k] x[k-1] + diag[k] x[k] + upper[k] x[k+1] = rhs[k].
/// lower[0] and upper[n-1] are ignored. No pivoting: intended for the
/// diagonally dominant systems produced by implicit diffusion steps.
inline std::vector<double> solve_tridiagonal(std::span<const double> lower,
                                             std::span<const double> diag,
                                             std::span<const double> upper,
                                             std::span<const double> rhs) {
  const std::size_t n = diag.size();
  if (lower.size() != n || upper.size() != n || rhs.size() != n)
    throw Error(ErrorCode::LengthMismatch, "tridiagonal bands differ in length");
  std::vector<double> c(n), x(n);
  double beta = diag[0];
  if (beta == 0.0) throw Error(ErrorCode::SingularMatrix, "zero pivot in tridiagonal solve");
  x[0] = rhs[0] / beta;
  for (std::size_t k = 1; k < n; ++k) {
    c[k - 1] = upper[k - 1] / beta;
    beta = diag[k] - lower[k] * c[k - 1];
    if (beta == 0.0) throw Error(ErrorCode::SingularMatrix, "zero pivot in tridiagonal solve");
    x[k] = (rhs[k] - lower[k] * x[k - 1]) / beta;
  }
  for (std::size_t k = n - 1; k-- > 0;) x[k] -= c[k] * x[k + 1];
  return x;
}

}  // namespace mixflow
