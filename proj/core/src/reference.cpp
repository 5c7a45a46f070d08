#include "mixflow/reference.hpp"

#include <algorithm>
#include <cmath>

#include "mixflow/error.hpp"
#include "mixflow/model.hpp"
#include "mixflow/tridiagonal.hpp"
#include "run_loop.hpp"
#include "time_integration.hpp"

namespace mixflow {
namespace {

using detail::Fields;

std::vector<double> fluxes(const std::vector<double>& rho, const std::vector<double>& u, Advection adv) {
  std::vector<double> f(rho.size() - 1);
  for (std::size_t k = 0; k < f.size(); ++k) {
    f[k] = 0.5 * (rho[k] * u[k] + rho[k + 1] * u[k + 1]);
    if (adv == Advection::FirstOrderUpwind)
      f[k] -= 0.25 * std::abs(u[k] + u[k + 1]) * (rho[k + 1] - rho[k]);
  }
  return f;
}

Fields scalar_rates(const Fields& y, double h, const SingleFluid& fl, Advection adv, bool with_viscosity) {
  const auto& rho = y.density;
  const auto& u = y.velocity[0];
  const std::size_t n = rho.size();
  const auto f = fluxes(rho, u, adv);

  Fields r;
  r.density.resize(n);
  r.density[0] = -2.0 * f[0] / h;
  r.density[n - 1] = 2.0 * f[n - 2] / h;
  for (std::size_t k = 1; k + 1 < n; ++k) r.density[k] = -(f[k] - f[k - 1]) / h;

  const double hc = fl.pressure_coeff * fl.gamma / (fl.gamma - 1.0);
  r.velocity.assign(1, std::vector<double>(n, 0.0));
  for (std::size_t k = 1; k + 1 < n; ++k) {
    const double conv = adv == Advection::Central2
                            ? 0.5 * (f[k] * (u[k + 1] - u[k]) + f[k - 1] * (u[k] - u[k - 1]))
                            : (f[k] < 0.0 ? f[k] * (u[k + 1] - u[k]) : 0.0) +
                                  (f[k - 1] > 0.0 ? f[k - 1] * (u[k] - u[k - 1]) : 0.0);
    const double visc = with_viscosity ? fl.viscosity * (u[k + 1] - 2.0 * u[k] + u[k - 1]) / (h * h) : 0.0;
    const double grad_h =
        hc * (std::pow(rho[k + 1], fl.gamma - 1.0) - std::pow(rho[k - 1], fl.gamma - 1.0)) / (2.0 * h);
    r.velocity[0][k] = (visc - conv / h) / rho[k] - grad_h;
  }
  return r;
}

}  // namespace

Trajectory single_fluid_reference(const std::vector<double>& rho0, const std::vector<double>& u0,
                                  const Grid1D& grid, const SingleFluid& fl,
                                  const SchemeConfig& cfg, double t_end, const RunControls& controls) {
  if (!(fl.viscosity > 0.0)) throw Error(ErrorCode::InvalidArgument, "viscosity must be positive");
  validate_scheme(cfg);
  const double h = grid.spacing();

  // Parameters used only for the per-step diagnostics records.
  MixtureParams p;
  p.n_components = 1;
  p.pressure_coeff = fl.pressure_coeff;
  p.gamma = fl.gamma;
  p.viscosity = Matrix(1, fl.viscosity);
  p.friction = Matrix(1, 0.0);
  p.t_final = fl.t_final;
  DerivedMatrices d;
  d.viscosity_inverse = Matrix(1, 1.0 / fl.viscosity);
  d.coercivity = d.viscosity_max = fl.viscosity;
  d.k_tilde = fl.pressure_coeff / fl.viscosity;
  d.v_weights = {1.0 / fl.viscosity};

  detail::SpatialOperator op;
  op.rates = [&](const Fields& y, double, bool wv) { return scalar_rates(y, h, fl, cfg.advection, wv); };
  op.check = [&](const Fields& y) {
    for (double r : y.density) {
      if (!std::isfinite(r)) throw Error(ErrorCode::NonFinite, "density became non-finite");
      if (!(r > cfg.density_floor)) throw Error(ErrorCode::DensityFloor, "density fell below the floor");
    }
    for (double x : y.velocity[0])
      if (!std::isfinite(x)) throw Error(ErrorCode::NonFinite, "velocity became non-finite");
  };
  op.viscous_solve = [&](const Fields& stage, double theta_dt, const detail::Velocities& rhs) {
    const std::size_t n = stage.density.size(), m = n - 2;
    const double c = theta_dt * fl.viscosity / (h * h);
    std::vector<double> lo(m, -c), di(m), up(m, -c), b(m);
    for (std::size_t k = 0; k < m; ++k) {
      di[k] = stage.density[k + 1] + 2.0 * c;
      b[k] = stage.density[k + 1] * rhs[0][k + 1];
    }
    const auto w = solve_tridiagonal(lo, di, up, b);
    detail::Velocities out(1, std::vector<double>(n, 0.0));
    std::copy(w.begin(), w.end(), out[0].begin() + 1);
    return out;
  };
  op.viscous_apply = [&](const Fields& stage) {
    const auto& u = stage.velocity[0];
    detail::Velocities out(1, std::vector<double>(u.size(), 0.0));
    for (std::size_t k = 1; k + 1 < u.size(); ++k)
      out[0][k] = fl.viscosity * (u[k + 1] - 2.0 * u[k] + u[k - 1]) / (h * h * stage.density[k]);
    return out;
  };

  State init{0.0, grid, Frame::Eulerian, rho0, {u0}};
  apply_wall_conditions(init);

  auto dt_fn = [&](const State& s) {
    const double rmin = *std::min_element(s.rho.begin(), s.rho.end());
    double wave = 0.0;
    for (std::size_t k = 0; k < s.rho.size(); ++k)
      wave = std::max(wave, std::abs(s.velocity[0][k]) +
                                std::sqrt(fl.pressure_coeff * fl.gamma * std::pow(s.rho[k], fl.gamma - 1.0)));
    double dt = h / wave;
    if (cfg.integrator != Integrator::SemiImplicitViscosity)
      dt = std::min(dt, h * h * rmin / (2.0 * fl.viscosity));
    return cfg.cfl * dt;
  };
  auto step_fn = [&](const State& s, double dt) {
    Fields y = detail::advance(Fields{s.rho, s.velocity}, s.time, dt, cfg.integrator, op);
    op.check(y);
    State next{s.time + dt, s.grid, Frame::Eulerian, std::move(y.density), std::move(y.velocity)};
    apply_wall_conditions(next);
    return next;
  };
  auto rates_fn = [&](const State& s) {
    Fields r = scalar_rates(Fields{s.rho, s.velocity}, h, fl, cfg.advection, true);
    return StateRates{std::move(r.density), std::move(r.velocity)};
  };
  return detail::run_loop(init, p, d, t_end, cfg.density_floor, controls, dt_fn, step_fn, rates_fn);
}

}  // namespace mixflow
