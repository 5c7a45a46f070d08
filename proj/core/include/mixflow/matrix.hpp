#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace mixflow {

/// Small dense square matrix, row-major. Sized for component counts (N <= ~16).
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n, double fill = 0.0) : n_(n), a_(n * n, fill) {}

  static Matrix identity(std::size_t n);
  /// Throws BadDimension unless `rows` is square.
  static Matrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t size() const noexcept { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  std::vector<std::vector<double>> rows() const;
  std::span<const double> data() const noexcept { return a_; }

  Matrix transposed() const;
  double frobenius_norm() const;
  double max_abs() const;

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> a_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(double s, const Matrix& a);
std::vector<double> operator*(const Matrix& a, std::span<const double> x);

bool is_symmetric(const Matrix& a, double rel_tol);

/// Lower-triangular L with A = L L^T, or nullopt when A is not positive definite.
std::optional<Matrix> cholesky(const Matrix& a);

/// Solves A x = b given the Cholesky factor of A.
std::vector<double> cholesky_solve(const Matrix& lower, std::span<const double> b);

struct SymmetricEigen {
  std::vector<double> values;  // ascending
  Matrix vectors;              // column k pairs with values[k]
};

/// Cyclic Jacobi rotations; converges quadratically for symmetric input.
SymmetricEigen jacobi_eigen(const Matrix& a, double tol = 1e-15, int max_sweeps = 100);

/// Inverse of a symmetric positive definite matrix. Throws SingularMatrix.
Matrix spd_inverse(const Matrix& a);

}  // namespace mixflow
