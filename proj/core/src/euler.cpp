#include "mixflow/euler.hpp"

#include <algorithm>
#include <cmath>

#include "mixflow/calculus.hpp"
#include "mixflow/error.hpp"
#include "mixflow/tridiagonal.hpp"
#include "run_loop.hpp"
#include "time_integration.hpp"

namespace mixflow::euler {
namespace {

using detail::Fields;
using detail::Velocities;

/// Face mass fluxes F_{k+1/2}, k = 0..n-2.
std::vector<double> mass_fluxes(std::span<const double> rho, std::span<const double> v,
                                Advection advection) {
  const std::size_t n = rho.size();
  std::vector<double> f(n - 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    f[k] = 0.5 * (rho[k] * v[k] + rho[k + 1] * v[k + 1]);
    if (advection == Advection::FirstOrderUpwind) {
      const double vf = 0.5 * (v[k] + v[k + 1]);
      f[k] -= 0.5 * std::abs(vf) * (rho[k + 1] - rho[k]);
    }
  }
  return f;
}

std::vector<double> continuity_rate(std::span<const double> flux, double h) {
  const std::size_t n = flux.size() + 1;
  std::vector<double> r(n);
  r[0] = -2.0 * flux[0] / h;
  r[n - 1] = 2.0 * flux[n - 2] / h;
  for (std::size_t k = 1; k + 1 < n; ++k) r[k] = -(flux[k] - flux[k - 1]) / h;
  return r;
}

double min_density(std::span<const double> rho) { return *std::min_element(rho.begin(), rho.end()); }

void check_fields(const Fields& y, double floor) {
  for (double r : y.density) {
    if (!std::isfinite(r)) throw Error(ErrorCode::NonFinite, "density became non-finite");
    if (!(r > floor)) throw Error(ErrorCode::DensityFloor, "density fell below the floor");
  }
  for (const auto& u : y.velocity)
    for (double x : u)
      if (!std::isfinite(x)) throw Error(ErrorCode::NonFinite, "velocity became non-finite");
}

/// Rates of the Eulerian system for raw fields.
Fields eulerian_rates(const Fields& y, const Grid1D& grid, const MixtureParams& p,
                      const SchemeConfig& cfg, bool with_viscosity) {
  const std::size_t n = y.density.size();
  const std::size_t nc = y.velocity.size();
  const double h = grid.spacing();
  const auto& rho = y.density;

  std::vector<double> v(n, 0.0);
  for (const auto& u : y.velocity)
    for (std::size_t k = 0; k < n; ++k) v[k] += u[k];
  for (double& x : v) x /= double(nc);

  const auto flux = mass_fluxes(rho, v, cfg.advection);

  Fields r;
  r.density = continuity_rate(flux, h);

  const double enthalpy_coeff = p.pressure_coeff * p.gamma / (p.gamma - 1.0);
  std::vector<double> enthalpy(n);
  for (std::size_t k = 0; k < n; ++k) enthalpy[k] = enthalpy_coeff * std::pow(rho[k], p.gamma - 1.0);

  Velocities lap;
  if (with_viscosity) {
    lap.assign(nc, std::vector<double>(n, 0.0));
    for (std::size_t j = 0; j < nc; ++j) {
      const auto& u = y.velocity[j];
      for (std::size_t k = 1; k + 1 < n; ++k) lap[j][k] = (u[k + 1] - 2.0 * u[k] + u[k - 1]) / (h * h);
    }
  }

  r.velocity.assign(nc, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < nc; ++i) {
    const auto& u = y.velocity[i];
    auto& du = r.velocity[i];
    for (std::size_t k = 1; k + 1 < n; ++k) {
      double conv;
      if (cfg.advection == Advection::Central2) {
        conv = 0.5 * (flux[k] * (u[k + 1] - u[k]) + flux[k - 1] * (u[k] - u[k - 1]));
      } else {
        conv = (flux[k] < 0.0 ? flux[k] * (u[k + 1] - u[k]) : 0.0) +
               (flux[k - 1] > 0.0 ? flux[k - 1] * (u[k] - u[k - 1]) : 0.0);
      }
      double force = 0.0;
      for (std::size_t j = 0; j < nc; ++j) {
        if (with_viscosity) force += p.viscosity(i, j) * lap[j][k];
        if (j != i) force += p.friction(i, j) * (y.velocity[j][k] - u[k]);
      }
      du[k] = (force - conv / h) / rho[k] - (enthalpy[k + 1] - enthalpy[k - 1]) / (2.0 * h);
    }
  }
  return r;
}

Fields to_fields(const State& s) { return Fields{s.rho, s.velocity}; }

State to_state(Fields y, const State& like, double time) {
  State s{time, like.grid, Frame::Eulerian, std::move(y.density), std::move(y.velocity)};
  apply_wall_conditions(s);
  return s;
}

detail::SpatialOperator make_operator(const State& like, const MixtureParams& p,
                                      const DerivedMatrices& d, const SchemeConfig& cfg,
                                      const Forcing& forcing) {
  const Grid1D grid = like.grid;
  detail::SpatialOperator op;
  op.rates = [&, grid](const Fields& y, double t, bool with_viscosity) {
    Fields r = eulerian_rates(y, grid, p, cfg, with_viscosity);
    if (forcing) {
      State stage{t, grid, Frame::Eulerian, y.density, y.velocity};
      StateRates sr{std::move(r.density), std::move(r.velocity)};
      forcing(stage, sr);
      r.density = std::move(sr.rho);
      r.velocity = std::move(sr.velocity);
      for (auto& du : r.velocity) du.front() = du.back() = 0.0;
    }
    return r;
  };
  op.check = [floor = cfg.density_floor](const Fields& y) { check_fields(y, floor); };

  // rho_k u_k - theta dt M L u = rho_k rhs_k, decoupled in the eigenbasis of M.
  op.viscous_solve = [&, grid](const Fields& stage, double theta_dt, const Velocities& rhs) {
    const std::size_t n = stage.density.size();
    const std::size_t nc = rhs.size();
    const std::size_t m = n - 2;
    const double h2 = grid.spacing() * grid.spacing();
    const Matrix& q = d.viscosity_eigen.vectors;

    Velocities out(nc, std::vector<double>(n, 0.0));
    std::vector<double> lower(m), diag(m), upper(m), b(m);
    for (std::size_t mode = 0; mode < nc; ++mode) {
      const double c = theta_dt * d.viscosity_eigen.values[mode] / h2;
      for (std::size_t k = 0; k < m; ++k) {
        const double rho = stage.density[k + 1];
        lower[k] = -c;
        upper[k] = -c;
        diag[k] = rho + 2.0 * c;
        double proj = 0.0;
        for (std::size_t i = 0; i < nc; ++i) proj += q(i, mode) * rhs[i][k + 1];
        b[k] = rho * proj;
      }
      const auto w = solve_tridiagonal(lower, diag, upper, b);
      for (std::size_t i = 0; i < nc; ++i)
        for (std::size_t k = 0; k < m; ++k) out[i][k + 1] += q(i, mode) * w[k];
    }
    return out;
  };
  op.viscous_apply = [&, grid](const Fields& stage) {
    const std::size_t n = stage.density.size();
    const std::size_t nc = stage.velocity.size();
    const double h2 = grid.spacing() * grid.spacing();
    Velocities out(nc, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < nc; ++i)
      for (std::size_t j = 0; j < nc; ++j) {
        const double mu = p.viscosity(i, j);
        const auto& u = stage.velocity[j];
        for (std::size_t k = 1; k + 1 < n; ++k)
          out[i][k] += mu * (u[k + 1] - 2.0 * u[k] + u[k - 1]) / (h2 * stage.density[k]);
      }
    return out;
  };
  return op;
}

}  // namespace

std::vector<double> rhs_continuity(const State& s, const SchemeConfig& cfg) {
  require_frame(s, Frame::Eulerian, "rhs_continuity");
  const auto v = average_velocity(s);
  return continuity_rate(mass_fluxes(s.rho, v, cfg.advection), s.grid.spacing());
}

std::vector<std::vector<double>> rhs_momentum(const State& s, const MixtureParams& p,
                                              const DerivedMatrices& d, const SchemeConfig& cfg) {
  return rates(s, p, d, cfg).velocity;
}

StateRates rates(const State& s, const MixtureParams& p, const DerivedMatrices&,
                 const SchemeConfig& cfg) {
  require_frame(s, Frame::Eulerian, "euler::rates");
  if (!(min_density(s.rho) > cfg.density_floor))
    throw Error(ErrorCode::DensityFloor, "density below the floor");
  Fields r = eulerian_rates(to_fields(s), s.grid, p, cfg, true);
  return StateRates{std::move(r.density), std::move(r.velocity)};
}

double stable_dt(const State& s, const MixtureParams& p, const DerivedMatrices& d,
                 const SchemeConfig& cfg) {
  require_frame(s, Frame::Eulerian, "stable_dt");
  const double rho_min = min_density(s.rho);
  if (!(rho_min > cfg.density_floor)) throw Error(ErrorCode::DensityFloor, "density below the floor");
  const double h = s.grid.spacing();
  const auto v = average_velocity(s);
  double wave = 0.0;
  for (std::size_t k = 0; k < s.rho.size(); ++k) {
    const double c = std::sqrt(p.pressure_coeff * p.gamma * std::pow(s.rho[k], p.gamma - 1.0));
    wave = std::max(wave, std::abs(v[k]) + c);
  }
  double dt = h / wave;
  if (cfg.integrator != Integrator::SemiImplicitViscosity)
    dt = std::min(dt, h * h * rho_min / (2.0 * d.viscosity_max));
  return cfg.cfl * dt;
}

State step(const State& s, const MixtureParams& p, const DerivedMatrices& d,
           const SchemeConfig& cfg, double dt, const Forcing& forcing) {
  require_frame(s, Frame::Eulerian, "euler::step");
  const auto op = make_operator(s, p, d, cfg, forcing);
  op.check(to_fields(s));
  Fields y = detail::advance(to_fields(s), s.time, dt, cfg.integrator, op);
  op.check(y);
  return to_state(std::move(y), s, s.time + dt);
}

State step(const State& s, const MixtureParams& p, const DerivedMatrices& d,
           const SchemeConfig& cfg) {
  return step(s, p, d, cfg, stable_dt(s, p, d, cfg));
}

Trajectory run(const State& initial, const MixtureParams& p, const DerivedMatrices& d,
               const SchemeConfig& cfg, double t_end, const RunControls& controls) {
  require_frame(initial, Frame::Eulerian, "euler::run");
  validate_scheme(cfg);
  return detail::run_loop(
      initial, p, d, t_end, cfg.density_floor, controls,
      [&](const State& s) { return stable_dt(s, p, d, cfg); },
      [&](const State& s, double dt) { return step(s, p, d, cfg, dt, controls.forcing); },
      [&](const State& s) { return rates(s, p, d, cfg); });
}

}  // namespace mixflow::euler
