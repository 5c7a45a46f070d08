#include "mixflow/lagrange.hpp"

#include <algorithm>
#include <cmath>

#include "mixflow/calculus.hpp"
#include "mixflow/error.hpp"
#include "mixflow/interpolation.hpp"
#include "mixflow/tridiagonal.hpp"
#include "run_loop.hpp"
#include "time_integration.hpp"

namespace mixflow::lagrange {
namespace {

using detail::Fields;
using detail::Velocities;

void require_positive(std::span<const double> rho, double floor, const char* what) {
  for (double r : rho) {
    if (!std::isfinite(r)) throw Error(ErrorCode::NonFinite, std::string(what) + ": non-finite density");
    if (!(r > floor)) throw Error(ErrorCode::DensityFloor, std::string(what) + ": density below the floor");
  }
}

/// v_y with the closure that makes sum_k w_k (v_y)_k vanish.
std::vector<double> volume_rate(std::span<const double> v, double h) {
  const std::size_t n = v.size();
  std::vector<double> r(n);
  r[0] = (v[1] - v[0]) / h;
  r[n - 1] = (v[n - 1] - v[n - 2]) / h;
  for (std::size_t k = 1; k + 1 < n; ++k) r[k] = (v[k + 1] - v[k - 1]) / (2.0 * h);
  return r;
}

std::vector<double> invert(std::span<const double> a) {
  std::vector<double> out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = 1.0 / a[k];
  return out;
}

/// sum_j coeff_ij d/dy(rho_face du_j/dy) at interior nodes.
Velocities viscous_term(const Velocities& u, std::span<const double> face, const Matrix& coeff,
                        double h) {
  const std::size_t nc = u.size();
  const std::size_t n = u.front().size();
  const double h2 = h * h;
  Velocities out(nc, std::vector<double>(n, 0.0));
  for (std::size_t j = 0; j < nc; ++j) {
    const auto& uj = u[j];
    for (std::size_t k = 1; k + 1 < n; ++k) {
      const double op = (face[k] * (uj[k + 1] - uj[k]) - face[k - 1] * (uj[k] - uj[k - 1])) / h2;
      for (std::size_t i = 0; i < nc; ++i) out[i][k] += coeff(i, j) * op;
    }
  }
  return out;
}

/// Local Lax-Friedrichs face dissipation, d/dy(a_f h/2 dq/dy) with a_f the larger
/// Lagrangian sound speed rho c of the two nodes. Zero flux through the walls.
void add_face_dissipation(std::vector<double>& rate, std::span<const double> q,
                          std::span<const double> speed, double h, bool walls) {
  const std::size_t n = q.size();
  std::vector<double> flux(n - 1);
  for (std::size_t k = 0; k + 1 < n; ++k)
    flux[k] = 0.5 * std::max(speed[k], speed[k + 1]) * (q[k + 1] - q[k]) / h;
  for (std::size_t k = 1; k + 1 < n; ++k) rate[k] += flux[k] - flux[k - 1];
  if (walls) {
    rate[0] += 2.0 * flux[0];
    rate[n - 1] -= 2.0 * flux[n - 2];
  }
}

/// Rates for (tau, u).
Fields lagrangian_rates(const Fields& y, const Grid1D& grid, const MixtureParams& p,
                        Advection advection, bool with_viscosity) {
  const std::size_t n = y.density.size();
  const std::size_t nc = y.velocity.size();
  const double h = grid.spacing();
  const auto rho = invert(y.density);

  std::vector<double> v(n, 0.0);
  for (const auto& u : y.velocity)
    for (std::size_t k = 0; k < n; ++k) v[k] += u[k];
  for (double& x : v) x /= double(nc);

  Fields r;
  r.density = volume_rate(v, h);

  std::vector<double> pres(n);
  for (std::size_t k = 0; k < n; ++k) pres[k] = p.pressure_coeff * std::pow(rho[k], p.gamma);

  if (with_viscosity) r.velocity = viscous_term(y.velocity, harmonic_face_average(rho), p.viscosity, h);
  else r.velocity.assign(nc, std::vector<double>(n, 0.0));

  for (std::size_t i = 0; i < nc; ++i) {
    auto& du = r.velocity[i];
    for (std::size_t k = 1; k + 1 < n; ++k) {
      double fric = 0.0;
      for (std::size_t j = 0; j < nc; ++j)
        if (j != i) fric += p.friction(i, j) * (y.velocity[j][k] - y.velocity[i][k]);
      du[k] += -(pres[k + 1] - pres[k - 1]) / (2.0 * h) + fric / rho[k];
    }
    du.front() = du.back() = 0.0;
  }

  if (advection == Advection::FirstOrderUpwind) {
    std::vector<double> speed(n);
    for (std::size_t k = 0; k < n; ++k)
      speed[k] = std::sqrt(p.pressure_coeff * p.gamma * std::pow(rho[k], p.gamma + 1.0));
    add_face_dissipation(r.density, y.density, speed, h, true);
    for (std::size_t i = 0; i < nc; ++i) add_face_dissipation(r.velocity[i], y.velocity[i], speed, h, false);
  }
  return r;
}

Fields to_fields(const State& s) { return Fields{invert(s.rho), s.velocity}; }

State to_state(Fields y, const State& like, double time) {
  State s{time, like.grid, Frame::Lagrangian, invert(y.density), std::move(y.velocity)};
  apply_wall_conditions(s);
  return s;
}

detail::SpatialOperator make_operator(const State& like, const MixtureParams& p,
                                      const DerivedMatrices& d, const SchemeConfig& cfg,
                                      const Forcing& forcing) {
  const Grid1D grid = like.grid;
  detail::SpatialOperator op;
  op.rates = [&, grid](const Fields& y, double t, bool with_viscosity) {
    Fields r = lagrangian_rates(y, grid, p, cfg.advection, with_viscosity);
    if (forcing) {
      State stage{t, grid, Frame::Lagrangian, invert(y.density), y.velocity};
      StateRates sr;
      sr.rho.resize(r.density.size());
      for (std::size_t k = 0; k < sr.rho.size(); ++k)
        sr.rho[k] = -stage.rho[k] * stage.rho[k] * r.density[k];
      sr.velocity = std::move(r.velocity);
      forcing(stage, sr);
      for (std::size_t k = 0; k < sr.rho.size(); ++k)
        r.density[k] = -y.density[k] * y.density[k] * sr.rho[k];
      r.velocity = std::move(sr.velocity);
      for (auto& du : r.velocity) du.front() = du.back() = 0.0;
    }
    return r;
  };
  op.check = [floor = cfg.density_floor](const Fields& y) {
    for (double tau : y.density) {
      if (!std::isfinite(tau)) throw Error(ErrorCode::NonFinite, "specific volume became non-finite");
      if (!(tau > 0.0) || !(1.0 / tau > floor))
        throw Error(ErrorCode::DensityFloor, "density left the admissible range");
    }
    for (const auto& u : y.velocity)
      for (double x : u)
        if (!std::isfinite(x)) throw Error(ErrorCode::NonFinite, "velocity became non-finite");
  };

  // (I - theta dt lambda L_rho) w = rhs per eigenmode of M.
  op.viscous_solve = [&, grid](const Fields& stage, double theta_dt, const Velocities& rhs) {
    const std::size_t n = stage.density.size();
    const std::size_t nc = rhs.size();
    const std::size_t m = n - 2;
    const double h2 = grid.spacing() * grid.spacing();
    const auto face = harmonic_face_average(invert(stage.density));
    const Matrix& q = d.viscosity_eigen.vectors;

    Velocities out(nc, std::vector<double>(n, 0.0));
    std::vector<double> lower(m), diag(m), upper(m), b(m);
    for (std::size_t mode = 0; mode < nc; ++mode) {
      const double c = theta_dt * d.viscosity_eigen.values[mode] / h2;
      for (std::size_t k = 0; k < m; ++k) {
        const double fl = face[k], fr = face[k + 1];
        lower[k] = -c * fl;
        upper[k] = -c * fr;
        diag[k] = 1.0 + c * (fl + fr);
        double proj = 0.0;
        for (std::size_t i = 0; i < nc; ++i) proj += q(i, mode) * rhs[i][k + 1];
        b[k] = proj;
      }
      const auto w = solve_tridiagonal(lower, diag, upper, b);
      for (std::size_t i = 0; i < nc; ++i)
        for (std::size_t k = 0; k < m; ++k) out[i][k + 1] += q(i, mode) * w[k];
    }
    return out;
  };
  op.viscous_apply = [&, grid](const Fields& stage) {
    return viscous_term(stage.velocity, harmonic_face_average(invert(stage.density)), p.viscosity,
                        grid.spacing());
  };
  return op;
}

}  // namespace

double MassGridMap::y_of_x(double xv) const { return MonotoneCubic(x, y)(xv); }
double MassGridMap::x_of_y(double yv) const { return MonotoneCubic(y, x)(yv); }

MassGridMap make_mass_map(const State& s) {
  require_frame(s, Frame::Eulerian, "make_mass_map");
  require_positive(s.rho, 0.0, "make_mass_map");
  return MassGridMap{s.grid.nodes(), cumulative_integral(s.rho, s.grid)};
}

State euler_to_lagrange(const State& s) {
  const MassGridMap map = make_mass_map(s);
  const Grid1D gy = Grid1D::make(map.total_mass(), s.grid.n_cells);
  const auto y = gy.nodes();

  State out;
  out.time = s.time;
  out.grid = gy;
  out.frame = Frame::Lagrangian;
  out.rho = MonotoneCubic(map.y, s.rho)(y);
  for (const auto& u : s.velocity) out.velocity.push_back(MonotoneCubic(map.y, u)(y));
  apply_wall_conditions(out);
  require_positive(out.rho, 0.0, "euler_to_lagrange");

  const double length = integrate(invert(out.rho), gy);
  for (double& r : out.rho) r *= length;
  return out;
}

State lagrange_to_euler(const State& s, double drift_tol) {
  require_frame(s, Frame::Lagrangian, "lagrange_to_euler");
  require_positive(s.rho, 0.0, "lagrange_to_euler");
  auto xs = cumulative_integral(invert(s.rho), s.grid);
  const double length = xs.back();
  if (std::abs(length - 1.0) > drift_tol)
    throw Error(ErrorCode::DomainLengthDrift,
                "int dy/rho = " + std::to_string(length) + " differs from 1");
  for (double& x : xs) x /= length;

  const Grid1D gx = Grid1D::make(1.0, s.grid.n_cells);
  const auto x = gx.nodes();
  State out;
  out.time = s.time;
  out.grid = gx;
  out.frame = Frame::Eulerian;
  out.rho = MonotoneCubic(xs, s.rho)(x);
  for (const auto& u : s.velocity) out.velocity.push_back(MonotoneCubic(xs, u)(x));
  apply_wall_conditions(out);
  return out;
}

StateRates rhs_lagrangian(const State& s, const MixtureParams& p, const DerivedMatrices&,
                          const SchemeConfig& cfg) {
  require_frame(s, Frame::Lagrangian, "rhs_lagrangian");
  require_positive(s.rho, cfg.density_floor, "rhs_lagrangian");
  Fields r = lagrangian_rates(to_fields(s), s.grid, p, cfg.advection, true);
  StateRates out;
  out.rho.resize(r.density.size());
  for (std::size_t k = 0; k < out.rho.size(); ++k) out.rho[k] = -s.rho[k] * s.rho[k] * r.density[k];
  out.velocity = std::move(r.velocity);
  return out;
}

double stable_dt(const State& s, const MixtureParams& p, const DerivedMatrices& d,
                 const SchemeConfig& cfg) {
  require_frame(s, Frame::Lagrangian, "lagrange::stable_dt");
  require_positive(s.rho, cfg.density_floor, "lagrange::stable_dt");
  const double h = s.grid.spacing();
  double wave = 0.0, rho_max = 0.0;
  for (double r : s.rho) {
    wave = std::max(wave, r * std::sqrt(p.pressure_coeff * p.gamma * std::pow(r, p.gamma - 1.0)));
    rho_max = std::max(rho_max, r);
  }
  double dt = h / wave;
  if (cfg.integrator != Integrator::SemiImplicitViscosity)
    dt = std::min(dt, h * h / (2.0 * d.viscosity_max * rho_max));
  return cfg.cfl * dt;
}

State step_lagrangian(const State& s, const MixtureParams& p, const DerivedMatrices& d,
                      const SchemeConfig& cfg, double dt, const Forcing& forcing) {
  require_frame(s, Frame::Lagrangian, "step_lagrangian");
  require_positive(s.rho, cfg.density_floor, "step_lagrangian");
  const auto op = make_operator(s, p, d, cfg, forcing);
  Fields y = detail::advance(to_fields(s), s.time, dt, cfg.integrator, op);
  op.check(y);
  return to_state(std::move(y), s, s.time + dt);
}

State step_lagrangian(const State& s, const MixtureParams& p, const DerivedMatrices& d,
                      const SchemeConfig& cfg) {
  return step_lagrangian(s, p, d, cfg, stable_dt(s, p, d, cfg));
}

double identity_residual(const State& a, const State& b) {
  require_frame(a, Frame::Lagrangian, "identity_residual");
  require_frame(b, Frame::Lagrangian, "identity_residual");
  const double dt = b.time - a.time;
  if (!(dt > 0.0)) throw Error(ErrorCode::InvalidArgument, "identity_residual needs increasing times");
  const auto da = diff(average_velocity(a), a.grid);
  const auto db = diff(average_velocity(b), b.grid);
  std::vector<double> r(a.n_nodes());
  for (std::size_t k = 0; k < r.size(); ++k)
    r[k] = 0.5 * (a.rho[k] * da[k] + b.rho[k] * db[k]) + std::log(b.rho[k] / a.rho[k]) / dt;
  return l2_norm(r, a.grid);
}

Trajectory run_lagrangian(const State& initial, const MixtureParams& p, const DerivedMatrices& d,
                          const SchemeConfig& cfg, double t_end, const RunControls& controls,
                          std::vector<double>* identity_residuals) {
  require_frame(initial, Frame::Lagrangian, "run_lagrangian");
  validate_scheme(cfg);
  RunControls c = controls;
  if (identity_residuals) {
    c.on_step = [&controls, identity_residuals](const State& a, const State& b) {
      identity_residuals->push_back(identity_residual(a, b));
      if (controls.on_step) controls.on_step(a, b);
    };
  }
  return detail::run_loop(
      initial, p, d, t_end, cfg.density_floor, c,
      [&](const State& s) { return stable_dt(s, p, d, cfg); },
      [&](const State& s, double dt) { return step_lagrangian(s, p, d, cfg, dt, controls.forcing); },
      [&](const State& s) { return rhs_lagrangian(s, p, d, cfg); });
}

}  // namespace mixflow::lagrange
