#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <random>

#include "mixflow/error.hpp"
#include "mixflow/matrix.hpp"
#include "mixflow/model.hpp"

using namespace mixflow;

namespace {

MixtureParams two_component(Matrix m, double k = 1.0) {
  MixtureParams p;
  p.n_components = m.size();
  p.pressure_coeff = k;
  p.gamma = 1.4;
  p.viscosity = std::move(m);
  p.friction = Matrix(p.n_components, 1.0);
  return p;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::InvalidArgument;
}

Eigen::MatrixXd to_eigen(const Matrix& m) {
  Eigen::MatrixXd e(m.size(), m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) e(i, j) = m(i, j);
  return e;
}

Matrix random_spd(std::mt19937_64& gen, std::size_t n) {
  std::normal_distribution<double> normal;
  Eigen::MatrixXd b(n, n);
  for (Eigen::Index i = 0; i < b.rows(); ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j) b(i, j) = normal(gen);
  const Eigen::MatrixXd a = b.transpose() * b + 1e-3 * Eigen::MatrixXd::Identity(n, n);
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = 0.5 * (a(i, j) + a(j, i));
  return m;
}

}  // namespace

TEST(ValidateParams, AcceptsIdentityViscosity) {
  auto p = two_component(Matrix::identity(2));
  p.friction = Matrix::from_rows({{0, 1}, {1, 0}});
  EXPECT_EQ(validate_params(p), p);
}

TEST(ValidateParams, IsIdempotent) {
  const auto p = two_component(Matrix::from_rows({{2, 1}, {1, 2}}));
  EXPECT_EQ(validate_params(validate_params(p)), validate_params(p));
}

TEST(ValidateParams, RejectsIndefiniteViscosity) {
  const auto p = two_component(Matrix::from_rows({{1, 2}, {2, 1}}));
  EXPECT_EQ(code_of([&] { validate_params(p); }), ErrorCode::NotPositiveDefinite);
}

TEST(ValidateParams, RejectsGammaOne) {
  auto p = two_component(Matrix::identity(2));
  p.gamma = 1.0;
  EXPECT_EQ(code_of([&] { validate_params(p); }), ErrorCode::NonPositiveEntry);
}

TEST(ValidateParams, RejectsNonPositiveScalars) {
  for (auto mutate : std::vector<std::function<void(MixtureParams&)>>{
           [](MixtureParams& p) { p.pressure_coeff = 0.0; },
           [](MixtureParams& p) { p.t_final = -1.0; },
           [](MixtureParams& p) { p.friction(0, 1) = p.friction(1, 0) = 0.0; }}) {
    auto p = two_component(Matrix::identity(2));
    mutate(p);
    EXPECT_EQ(code_of([&] { validate_params(p); }), ErrorCode::NonPositiveEntry);
  }
}

TEST(ValidateParams, RejectsAsymmetry) {
  auto p = two_component(Matrix::from_rows({{2, 1}, {0.5, 2}}));
  EXPECT_EQ(code_of([&] { validate_params(p); }), ErrorCode::NotSymmetric);
  p = two_component(Matrix::identity(2));
  p.friction = Matrix::from_rows({{0, 1}, {2, 0}});
  EXPECT_EQ(code_of([&] { validate_params(p); }), ErrorCode::NotSymmetric);
}

TEST(ValidateParams, RejectsWrongSizes) {
  auto p = two_component(Matrix::identity(3));
  p.n_components = 2;
  EXPECT_EQ(code_of([&] { validate_params(p); }), ErrorCode::BadDimension);
  p = two_component(Matrix::identity(1));
  EXPECT_EQ(code_of([&] { validate_params(p); }), ErrorCode::BadDimension);
}

TEST(ValidateParams, IgnoresFrictionDiagonal) {
  auto p = two_component(Matrix::identity(2));
  p.friction = Matrix::from_rows({{-5, 1}, {1, 0}});
  EXPECT_NO_THROW(validate_params(p));
}

TEST(DeriveMatrices, Identity) {
  for (std::size_t n : {2u, 3u, 5u}) {
    const auto d = derive_matrices(validate_params(two_component(Matrix::identity(n))));
    EXPECT_NEAR(d.coercivity, 1.0, 1e-14);
    EXPECT_NEAR(d.k_tilde, 1.0, 1e-14);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) EXPECT_NEAR(d.viscosity_inverse(i, j), i == j ? 1.0 : 0.0, 1e-14);
  }
}

TEST(DeriveMatrices, TwoByTwoExample) {
  const auto d = derive_matrices(validate_params(two_component(Matrix::from_rows({{2, 1}, {1, 2}}), 3.0)));
  EXPECT_NEAR(d.viscosity_inverse(0, 0), 2.0 / 3.0, 1e-14);
  EXPECT_NEAR(d.viscosity_inverse(0, 1), -1.0 / 3.0, 1e-14);
  EXPECT_NEAR(d.viscosity_inverse(1, 0), -1.0 / 3.0, 1e-14);
  EXPECT_NEAR(d.viscosity_inverse(1, 1), 2.0 / 3.0, 1e-14);
  EXPECT_NEAR(d.coercivity, 1.0, 1e-13);
  EXPECT_NEAR(d.viscosity_max, 3.0, 1e-13);
  EXPECT_NEAR(d.k_tilde, 1.0, 1e-13);
  ASSERT_EQ(d.v_weights.size(), 2u);
  EXPECT_NEAR(d.v_weights[0], 1.0 / 6.0, 1e-14);
  EXPECT_NEAR(d.v_weights[1], 1.0 / 6.0, 1e-14);
}

TEST(DeriveMatrices, AgreesWithEigenOnRandomSpd) {
  std::mt19937_64 gen(7);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 2 + trial % 6;
    const Matrix m = random_spd(gen, n);
    const auto d = derive_matrices(validate_params(two_component(m), 1e-12));
    const Eigen::MatrixXd e = to_eigen(m);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(e);
    const double lmin = es.eigenvalues().minCoeff();
    EXPECT_NEAR(d.coercivity, lmin, 1e-10 * es.eigenvalues().maxCoeff());
    const Eigen::MatrixXd prod = e * to_eigen(d.viscosity_inverse);
    EXPECT_LT((prod - Eigen::MatrixXd::Identity(n, n)).norm(), 1e-8 * e.norm() * to_eigen(d.viscosity_inverse).norm());
    for (int k = 0; k < 100; ++k) {
      Eigen::VectorXd xi(n);
      for (Eigen::Index i = 0; i < xi.size(); ++i) xi(i) = normal(gen);
      EXPECT_GE(xi.dot(e * xi), d.coercivity * xi.squaredNorm() * (1.0 - 1e-9));
    }
  }
}

TEST(DeriveMatrices, ScalingProperties) {
  std::mt19937_64 gen(11);
  const Matrix m = random_spd(gen, 3);
  const auto d1 = derive_matrices(validate_params(two_component(m)));
  const auto d2 = derive_matrices(validate_params(two_component(4.0 * m)));
  EXPECT_NEAR(d2.coercivity, 4.0 * d1.coercivity, 1e-10 * d2.coercivity);
  EXPECT_NEAR(d2.k_tilde, d1.k_tilde / 4.0, 1e-10 * std::abs(d1.k_tilde));
}

TEST(Matrix, JacobiEigenReconstructs) {
  std::mt19937_64 gen(3);
  const Matrix m = random_spd(gen, 6);
  const auto es = jacobi_eigen(m);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < 6; ++k) s += es.vectors(i, k) * es.values[k] * es.vectors(j, k);
      EXPECT_NEAR(s, m(i, j), 1e-11 * m.max_abs());
    }
}

TEST(Matrix, CholeskyDetectsIndefinite) {
  EXPECT_FALSE(cholesky(Matrix::from_rows({{1, 2}, {2, 1}})).has_value());
  EXPECT_TRUE(cholesky(Matrix::from_rows({{2, 1}, {1, 2}})).has_value());
}

TEST(Matrix, FromRowsRejectsRagged) {
  EXPECT_EQ(code_of([] { Matrix::from_rows({{1, 2}, {3}}); }), ErrorCode::BadDimension);
}
