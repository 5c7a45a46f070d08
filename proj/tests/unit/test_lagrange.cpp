#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "mixflow/calculus.hpp"
#include "mixflow/error.hpp"
#include "mixflow/euler.hpp"
#include "mixflow/interpolation.hpp"
#include "mixflow/lagrange.hpp"

using namespace mixflow;
using std::numbers::pi;

namespace {

MixtureParams params() {
  MixtureParams p;
  p.n_components = 2;
  p.pressure_coeff = 1.0;
  p.gamma = 1.4;
  p.viscosity = Matrix::from_rows({{0.02, 0.005}, {0.005, 0.015}});
  p.friction = Matrix::from_rows({{0, 0.8}, {0.8, 0}});
  p.t_final = 5.0;
  return validate_params(p);
}

State eulerian(std::size_t cells, double (*rho)(double)) {
  State s;
  s.grid = Grid1D::make(1.0, cells);
  const auto x = s.grid.nodes();
  s.rho.resize(x.size());
  s.velocity.assign(2, std::vector<double>(x.size()));
  for (std::size_t k = 0; k < x.size(); ++k) {
    s.rho[k] = rho(x[k]);
    s.velocity[0][k] = 0.3 * std::sin(pi * x[k]);
    s.velocity[1][k] = -0.1 * std::sin(2.0 * pi * x[k]);
  }
  apply_wall_conditions(s);
  return s;
}

double smooth_rho(double x) { return 1.0 + 0.3 * std::cos(pi * x); }

double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

SchemeConfig central() {
  SchemeConfig c;
  c.advection = Advection::Central2;
  return c;
}

}  // namespace

TEST(EulerToLagrange, UnitDensityIsIdentity) {
  const State e = eulerian(64, [](double) { return 1.0; });
  const State l = lagrange::euler_to_lagrange(e);
  EXPECT_EQ(l.frame, Frame::Lagrangian);
  EXPECT_NEAR(l.grid.length, 1.0, 1e-14);
  EXPECT_LE(max_diff(l.rho, e.rho), 1e-10);
  for (std::size_t i = 0; i < 2; ++i) EXPECT_LE(max_diff(l.velocity[i], e.velocity[i]), 1e-10);
}

TEST(EulerToLagrange, ConstantDensityStretches) {
  const State e = eulerian(64, [](double) { return 2.0; });
  const State l = lagrange::euler_to_lagrange(e);
  EXPECT_NEAR(l.grid.length, 2.0, 1e-14);
  for (double r : l.rho) EXPECT_NEAR(r, 2.0, 1e-12);
  // u(y) = u_e(y / 2) and the nodes correspond one to one.
  EXPECT_LE(max_diff(l.velocity[0], e.velocity[0]), 1e-12);
  const State back = lagrange::lagrange_to_euler(l);
  EXPECT_LE(max_diff(back.rho, e.rho), 1e-12);
}

TEST(EulerToLagrange, MassMapIsMonotone) {
  const auto map = lagrange::make_mass_map(eulerian(64, smooth_rho));
  for (std::size_t k = 1; k < map.y.size(); ++k) EXPECT_GT(map.y[k], map.y[k - 1]);
  EXPECT_NEAR(map.x_of_y(map.y_of_x(0.37)), 0.37, 1e-6);
}

TEST(EulerToLagrange, RoundTripSecondOrder) {
  std::vector<double> err_rho;
  for (std::size_t n : {64u, 128u, 256u}) {
    const State e = eulerian(n, smooth_rho);
    const State back = lagrange::lagrange_to_euler(lagrange::euler_to_lagrange(e));
    err_rho.push_back(max_diff(back.rho, e.rho));
    // The monotone interpolant flattens extrema, so the velocity error is not a
    // clean power law; it stays below h^2.
    const double h = 1.0 / double(n);
    EXPECT_LT(max_diff(back.velocity[0], e.velocity[0]), h * h);
    EXPECT_LT(max_diff(back.velocity[1], e.velocity[1]), h * h);
  }
  EXPECT_LT(err_rho[0], 1e-3);
  EXPECT_GT(err_rho[0] / err_rho[1], 3.0);
  EXPECT_GT(err_rho[1] / err_rho[2], 3.0);
}

TEST(EulerToLagrange, PreservesKineticEnergyAndDomainLength) {
  const State e = eulerian(256, smooth_rho);
  const State l = lagrange::euler_to_lagrange(e);
  std::vector<double> inv(l.rho.size());
  for (std::size_t k = 0; k < inv.size(); ++k) inv[k] = 1.0 / l.rho[k];
  EXPECT_NEAR(integrate(inv, l.grid), 1.0, 1e-12);
  EXPECT_NEAR(l.grid.length, total_mass(e), 1e-14);
  std::vector<double> ke_e(e.n_nodes()), ke_l(l.n_nodes());
  for (std::size_t k = 0; k < ke_e.size(); ++k) ke_e[k] = e.rho[k] * e.velocity[0][k] * e.velocity[0][k];
  for (std::size_t k = 0; k < ke_l.size(); ++k) ke_l[k] = l.velocity[0][k] * l.velocity[0][k];
  EXPECT_NEAR(integrate(ke_e, e.grid), integrate(ke_l, l.grid), 1e-4);
}

TEST(LagrangeToEuler, RejectsDomainDrift) {
  State l;
  l.frame = Frame::Lagrangian;
  l.grid = Grid1D::make(1.0, 32);
  l.rho.assign(33, 1.0 / 0.9);  // int dy / rho = 0.9
  l.velocity.assign(2, std::vector<double>(33, 0.0));
  try {
    lagrange::lagrange_to_euler(l);
    FAIL() << "expected DomainLengthDrift";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DomainLengthDrift);
  }
}

TEST(LagrangeToEuler, ConstantDensityMap) {
  State l;
  l.frame = Frame::Lagrangian;
  l.grid = Grid1D::make(3.0, 30);
  l.rho.assign(31, 3.0);
  l.velocity.assign(2, std::vector<double>(31, 0.0));
  const State e = lagrange::lagrange_to_euler(l);
  EXPECT_NEAR(e.grid.length, 1.0, 1e-15);
  for (double r : e.rho) EXPECT_NEAR(r, 3.0, 1e-14);
}

TEST(Transforms, RejectWrongFrame) {
  const State e = eulerian(16, smooth_rho);
  EXPECT_THROW(lagrange::lagrange_to_euler(e), Error);
  EXPECT_THROW(lagrange::euler_to_lagrange(lagrange::euler_to_lagrange(e)), Error);
}

TEST(LagrangianRhs, RestStateIsSteady) {
  const auto p = params();
  State l;
  l.frame = Frame::Lagrangian;
  l.grid = Grid1D::make(1.5, 32);
  l.rho.assign(33, 1.5);
  l.velocity.assign(2, std::vector<double>(33, 0.0));
  const auto r = lagrange::rhs_lagrangian(l, p, derive_matrices(p));
  for (double x : r.rho) EXPECT_EQ(x, 0.0);
  for (const auto& u : r.velocity) for (double x : u) EXPECT_EQ(x, 0.0);
}

TEST(LagrangianRhs, DensityRateIsMinusRhoSquaredDv) {
  const auto p = params();
  State l;
  l.frame = Frame::Lagrangian;
  l.grid = Grid1D::make(1.0, 256);
  const auto y = l.grid.nodes();
  l.rho.resize(y.size());
  l.velocity.assign(2, std::vector<double>(y.size()));
  for (std::size_t k = 0; k < y.size(); ++k) {
    l.rho[k] = 1.0 + 0.2 * std::cos(pi * y[k]);
    l.velocity[0][k] = l.velocity[1][k] = std::sin(pi * y[k]);
  }
  const auto r = lagrange::rhs_lagrangian(l, p, derive_matrices(p), central());
  for (std::size_t k = 1; k + 1 < y.size(); ++k)
    EXPECT_NEAR(r.rho[k], -l.rho[k] * l.rho[k] * pi * std::cos(pi * y[k]), 1e-3);
}

TEST(LagrangianRhs, BothFramesMatchAnalyticMaterialRates) {
  // rho = 1 + 0.3 cos(pi x) has unit mass, so y(x) = x + 0.3 sin(pi x) / pi maps
  // (0,1) onto (0,1). The Lagrangian state is sampled through the exact inverse map.
  const auto p = params();
  const auto d = derive_matrices(p);
  auto rho = [](double x) { return smooth_rho(x); };
  auto u = [](std::size_t i, double x) { return i == 0 ? 0.3 * std::sin(pi * x) : -0.1 * std::sin(2.0 * pi * x); };
  auto u_xx = [](std::size_t i, double x) {
    return i == 0 ? -0.3 * pi * pi * std::sin(pi * x) : 0.4 * pi * pi * std::sin(2.0 * pi * x);
  };
  auto material = [&](double x) {
    const double r = rho(x), r_x = -0.3 * pi * std::sin(pi * x);
    const double v_x = 0.5 * (0.3 * pi * std::cos(pi * x) - 0.2 * pi * std::cos(2.0 * pi * x));
    std::vector<double> out{-r * v_x};
    for (std::size_t i = 0; i < 2; ++i) {
      double force = 0.0;
      for (std::size_t j = 0; j < 2; ++j) {
        force += p.viscosity(i, j) * u_xx(j, x);
        if (j != i) force += p.friction(i, j) * (u(j, x) - u(i, x));
      }
      out.push_back(force / r - p.pressure_coeff * p.gamma * std::pow(r, p.gamma - 2.0) * r_x);
    }
    return out;
  };
  auto x_of_y = [](double y) {
    double x = y;
    for (int it = 0; it < 60; ++it) x -= (x + 0.3 * std::sin(pi * x) / pi - y) / smooth_rho(x);
    return x;
  };

  std::vector<double> err_e, err_l;
  for (std::size_t n : {64u, 128u, 256u}) {
    const State e = eulerian(n, smooth_rho);
    const auto re = euler::rates(e, p, d, central());
    State l;
    l.frame = Frame::Lagrangian;
    l.grid = Grid1D::make(1.0, n);
    const auto y = l.grid.nodes();
    std::vector<double> x(y.size());
    l.rho.resize(y.size());
    l.velocity.assign(2, std::vector<double>(y.size()));
    for (std::size_t k = 0; k < y.size(); ++k) {
      x[k] = x_of_y(y[k]);
      l.rho[k] = rho(x[k]);
      for (std::size_t i = 0; i < 2; ++i) l.velocity[i][k] = u(i, x[k]);
    }
    apply_wall_conditions(l);
    const auto rl = lagrange::rhs_lagrangian(l, p, d, central());

    const auto xe = e.grid.nodes();
    double ee = 0.0, el = 0.0;
    for (std::size_t k = 1; k < n; ++k) {
      const auto me = material(xe[k]);
      // Eulerian rates are at fixed x: add the transport term v d/dx.
      const double v = 0.5 * (u(0, xe[k]) + u(1, xe[k]));
      const double rho_x = -0.3 * pi * std::sin(pi * xe[k]);
      ee = std::max(ee, std::abs(re.rho[k] + v * rho_x - me[0]));
      const double u0_x = 0.3 * pi * std::cos(pi * xe[k]);
      ee = std::max(ee, std::abs(re.velocity[0][k] + v * u0_x - me[1]));
      const auto ml = material(x[k]);
      for (std::size_t c = 0; c < 3; ++c)
        el = std::max(el, std::abs((c == 0 ? rl.rho[k] : rl.velocity[c - 1][k]) - ml[c]));
    }
    err_e.push_back(ee);
    err_l.push_back(el);
  }
  for (const auto* errs : {&err_e, &err_l}) {
    EXPECT_LT((*errs)[0], 2e-2);
    EXPECT_GT((*errs)[0] / (*errs)[1], 3.0);
    EXPECT_GT((*errs)[1] / (*errs)[2], 3.0);
  }
}

TEST(LagrangianRun, RestFixedPointAndConstantLength) {
  const auto p = params();
  const auto d = derive_matrices(p);
  const State l0 = lagrange::euler_to_lagrange(eulerian(64, [](double) { return 1.2; }));
  State rest = l0;
  for (auto& u : rest.velocity) std::fill(u.begin(), u.end(), 0.0);
  const auto tr = lagrange::run_lagrangian(rest, p, d, {}, 0.5);
  for (std::size_t k = 0; k < rest.n_nodes(); ++k) EXPECT_NEAR(tr.back().rho[k], rest.rho[k], 1e-13);

  const auto moving = lagrange::run_lagrangian(l0, p, d, {}, 0.5);
  for (const auto& s : moving.states) {
    EXPECT_EQ(s.grid, l0.grid);
    std::vector<double> inv(s.rho.size());
    for (std::size_t k = 0; k < inv.size(); ++k) inv[k] = 1.0 / s.rho[k];
    EXPECT_NEAR(integrate(inv, s.grid), 1.0, 1e-12);
    EXPECT_LE(*std::min_element(s.rho.begin(), s.rho.end()), s.grid.length * (1.0 + 1e-12));
    EXPECT_GE(*std::max_element(s.rho.begin(), s.rho.end()), s.grid.length * (1.0 - 1e-12));
  }
}

TEST(LagrangianRun, IdentityResidualShrinks) {
  const auto p = params();
  const auto d = derive_matrices(p);
  std::vector<double> worst;
  for (std::size_t n : {64u, 128u}) {
    const State l = lagrange::euler_to_lagrange(eulerian(n, smooth_rho));
    RunControls c;
    c.fixed_dt = 0.1 * l.grid.spacing();
    c.record_diagnostics = false;
    std::vector<double> res;
    lagrange::run_lagrangian(l, p, d, central(), 0.2, c, &res);
    ASSERT_FALSE(res.empty());
    worst.push_back(*std::max_element(res.begin(), res.end()));
  }
  EXPECT_GT(worst[0] / worst[1], 2.0);
}

TEST(LagrangianRun, DualFormulationAgreement) {
  const auto p = params();
  const auto d = derive_matrices(p);
  std::vector<double> dist;
  for (std::size_t n : {64u, 128u}) {
    const State e0 = eulerian(n, smooth_rho);
    RunControls c;
    c.record_diagnostics = false;
    const State e = euler::run(e0, p, d, central(), 0.3, c).back();
    const State l = lagrange::lagrange_to_euler(
        lagrange::run_lagrangian(lagrange::euler_to_lagrange(e0), p, d, central(), 0.3, c).back());
    dist.push_back(std::max(max_diff(e.rho, l.rho), max_diff(e.velocity[0], l.velocity[0])));
  }
  EXPECT_GT(dist[0] / dist[1], 2.0);
}

TEST(MonotoneCubic, NoOvershootAndLinearExactness) {
  const std::vector<double> x{0, 1, 2, 3, 4}, f{0, 0, 1, 1, 1};
  const MonotoneCubic m(x, f);
  for (double t = 0.0; t <= 4.0; t += 0.01) {
    EXPECT_GE(m(t), -1e-15);
    EXPECT_LE(m(t), 1.0 + 1e-15);
  }
  const MonotoneCubic lin(x, {1, 3, 5, 7, 9});
  for (double t = 0.0; t <= 4.0; t += 0.1) EXPECT_NEAR(lin(t), 1.0 + 2.0 * t, 1e-13);
  EXPECT_EQ(lin(-1.0), 1.0);
  EXPECT_EQ(lin(5.0), 9.0);
  EXPECT_THROW(MonotoneCubic({0, 0, 1}, {1, 2, 3}), Error);
}
