#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <numbers>

#include "mixflow/error.hpp"
#include "mixflow/initial.hpp"
#include "mixflow/io.hpp"

using namespace mixflow;
using std::numbers::pi;

namespace {

InitialData two_zero() {
  InitialData d;
  d.u0.resize(2);
  return d;
}

}  // namespace

TEST(RandomCoefficients, DeterministicAndBounded) {
  const auto a = random_sine_coefficients(7, 8, 0.4);
  EXPECT_EQ(a, random_sine_coefficients(7, 8, 0.4));
  EXPECT_NE(a, random_sine_coefficients(8, 8, 0.4));
  ASSERT_EQ(a.size(), 8u);
  for (std::size_t k = 0; k < a.size(); ++k) EXPECT_LE(std::abs(a[k]), 0.4 / (k + 1.0));
  for (double c : random_sine_coefficients(7, 3, 0.0)) EXPECT_EQ(c, 0.0);
}

TEST(MakeInitial, ConstantAndAffine) {
  const auto g = Grid1D::make(1.0, 10);
  InitialData d = two_zero();
  d.rho0.base = 2.5;
  State s = make_initial(d, g);
  for (double r : s.rho) EXPECT_EQ(r, 2.5);
  EXPECT_EQ(s.frame, Frame::Eulerian);
  EXPECT_EQ(s.time, 0.0);
  d.rho0.kind = DensityProfile::Kind::Affine;
  d.rho0.base = 1.0;
  d.rho0.slope = 0.5;
  s = make_initial(d, g);
  EXPECT_DOUBLE_EQ(s.rho.back(), 1.5);
  EXPECT_DOUBLE_EQ(s.rho[4], 1.2);
}

TEST(MakeInitial, GaussianAndCosine) {
  const auto g = Grid1D::make(1.0, 20);
  InitialData d = two_zero();
  d.rho0.kind = DensityProfile::Kind::Gaussian;
  d.rho0.amplitude = 0.5;
  d.rho0.center = 0.5;
  d.rho0.width = 0.1;
  State s = make_initial(d, g);
  EXPECT_DOUBLE_EQ(s.rho[10], 1.5);
  EXPECT_NEAR(s.rho[12], 1.0 + 0.5 * std::exp(-0.5), 1e-15);
  d.rho0.kind = DensityProfile::Kind::CosineModes;
  d.rho0.modes = {{1.0, 0.2}, {2.0, 0.1}};
  s = make_initial(d, g);
  EXPECT_NEAR(s.rho[0], 1.3, 1e-15);
  EXPECT_NEAR(s.rho[10], 0.9, 1e-15);
}

TEST(MakeInitial, VelocitiesVanishAtWalls) {
  const auto g = Grid1D::make(1.0, 16);
  InitialData d = two_zero();
  d.u0[0].kind = VelocityProfile::Kind::Sine;
  d.u0[0].modes = {{1.0, 0.3}};
  d.u0[1].kind = VelocityProfile::Kind::Random;
  d.u0[1].seed = 3;
  d.u0[1].amplitude = 1.0;
  const State s = make_initial(d, g);
  for (const auto& u : s.velocity) {
    EXPECT_EQ(u.front(), 0.0);
    EXPECT_EQ(u.back(), 0.0);
  }
  EXPECT_NEAR(s.velocity[0][8], 0.3, 1e-15);
  EXPECT_NEAR(s.velocity[0][4], 0.3 * std::sin(pi / 4), 1e-15);
  const auto c = random_sine_coefficients(3, d.u0[1].n_modes, 1.0);
  double expect = 0.0;
  for (std::size_t k = 0; k < c.size(); ++k) expect += c[k] * std::sin((k + 1.0) * pi * 0.25);
  EXPECT_NEAR(s.velocity[1][4], expect, 1e-14);
}

TEST(MakeInitial, NonPositiveDensityRejected) {
  InitialData d = two_zero();
  d.rho0.kind = DensityProfile::Kind::Gaussian;
  d.rho0.amplitude = -1.0;
  d.rho0.center = 0.5;
  try {
    make_initial(d, Grid1D::make(1.0, 16));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonPositiveDensity);
  }
}

TEST(MakeInitial, TableRoundTrip) {
  const auto g = Grid1D::make(1.0, 16);
  InitialData d = two_zero();
  d.rho0.kind = DensityProfile::Kind::CosineModes;
  d.rho0.modes = {{1.0, 0.25}};
  d.u0[1].kind = VelocityProfile::Kind::Sine;
  d.u0[1].modes = {{2.0, 0.1}};
  const State s = make_initial(d, g);
  const auto path = (std::filesystem::temp_directory_path() / "mixflow_initial_table.csv").string();
  io::write_snapshot_csv(path, s);

  InitialData t = two_zero();
  t.rho0.kind = DensityProfile::Kind::Table;
  t.rho0.table = path;
  t.u0[1].kind = VelocityProfile::Kind::Table;
  t.u0[1].table = path;
  const State r = make_initial(t, g);
  EXPECT_EQ(r.rho, s.rho);
  EXPECT_EQ(r.velocity[1], s.velocity[1]);

  t.rho0.table = path + ".missing";
  EXPECT_THROW(make_initial(t, g), Error);
}
