#include "mixflow/mms.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include "mixflow/calculus.hpp"
#include "mixflow/error.hpp"
#include "mixflow/euler.hpp"
#include "mixflow/lagrange.hpp"

namespace mixflow::mms {
namespace {

constexpr double pi = std::numbers::pi;

double domain_length(Frame f) { return f == Frame::Eulerian ? 1.0 : mms_mass_length; }

double mean_amplitude(std::size_t n) {
  double b = 0.0;
  for (std::size_t i = 0; i < n; ++i) b += amplitude(i);
  return b / double(n);
}

}  // namespace

double amplitude(std::size_t i) { return 0.5 * std::pow(-0.6, double(i)); }

MixtureParams default_params() {
  MixtureParams p;
  p.n_components = 2;
  p.pressure_coeff = 1.0;
  p.gamma = 1.4;
  p.viscosity = Matrix::from_rows({{0.2, 0.05}, {0.05, 0.15}});
  p.friction = Matrix::from_rows({{0.0, 1.5}, {1.5, 0.0}});
  p.t_final = 0.5;
  return p;
}

State exact_state(Frame frame, std::size_t n_cells, std::size_t n_components, double t) {
  const double len = domain_length(frame);
  State s;
  s.time = t;
  s.frame = frame;
  s.grid = Grid1D::make(len, n_cells);
  const auto x = s.grid.nodes();
  s.rho.resize(x.size());
  s.velocity.assign(n_components, std::vector<double>(x.size()));
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double z = x[k] / len;
    s.rho[k] = 2.0 + 0.5 * std::sin(2.0 * pi * z) * std::cos(t);
    for (std::size_t i = 0; i < n_components; ++i)
      s.velocity[i][k] = amplitude(i) * std::sin(pi * z) * std::cos(t);
  }
  apply_wall_conditions(s);
  return s;
}

std::vector<double> source(Frame frame, const MixtureParams& p, double coord, double t) {
  const std::size_t n = p.n_components;
  const double len = domain_length(frame);
  const double z = coord / len;
  const double c = std::cos(t), sn = std::sin(t);
  const double sz = std::sin(pi * z), cz = std::cos(pi * z);
  const double s2 = std::sin(2.0 * pi * z), c2 = std::cos(2.0 * pi * z);

  // Derivatives with respect to the frame coordinate (x or y).
  const double k1 = pi / len;
  const double rho = 2.0 + 0.5 * s2 * c;
  const double rho_t = -0.5 * s2 * sn;
  const double rho_z = k1 * c2 * c;
  const double beta = mean_amplitude(n);
  const double v = beta * sz * c;
  const double v_z = beta * k1 * cz * c;

  std::vector<double> out(n + 1);
  if (frame == Frame::Eulerian) out[0] = rho_t + rho_z * v + rho * v_z;
  else out[0] = rho_t + rho * rho * v_z;

  for (std::size_t i = 0; i < n; ++i) {
    const double bi = amplitude(i);
    const double ui = bi * sz * c;
    const double ui_t = -bi * sz * sn;
    const double ui_z = bi * k1 * cz * c;
    double visc = 0.0, fric = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double bj = amplitude(j);
      const double uj_z = bj * k1 * cz * c;
      const double uj_zz = -bj * k1 * k1 * sz * c;
      if (frame == Frame::Eulerian) visc += p.viscosity(i, j) * uj_zz;
      else visc += p.viscosity(i, j) * (rho_z * uj_z + rho * uj_zz);
      if (j != i) fric += p.friction(i, j) * (bj * sz * c - ui);
    }
    double s;
    if (frame == Frame::Eulerian) {
      const double pres = p.pressure_coeff * p.gamma * std::pow(rho, p.gamma - 2.0) * rho_z;
      s = ui_t + v * ui_z + pres - visc / rho - fric / rho;
    } else {
      const double pres = p.pressure_coeff * p.gamma * std::pow(rho, p.gamma - 1.0) * rho_z;
      s = ui_t + pres - visc - fric / rho;
    }
    out[i + 1] = s;
  }
  return out;
}

Forcing forcing(Frame frame, const MixtureParams& p) {
  return [frame, p](const State& s, StateRates& r) {
    const auto x = s.grid.nodes();
    for (std::size_t k = 0; k < x.size(); ++k) {
      const auto src = source(frame, p, x[k], s.time);
      r.rho[k] += src[0];
      for (std::size_t i = 0; i < r.velocity.size(); ++i) r.velocity[i][k] += src[i + 1];
    }
  };
}

double observed_order(const std::vector<double>& h, const std::vector<double>& e) {
  if (h.size() != e.size() || h.size() < 2)
    throw Error(ErrorCode::InvalidArgument, "order fit needs at least two levels");
  double mx = 0.0, my = 0.0;
  for (std::size_t k = 0; k < h.size(); ++k) {
    mx += std::log(h[k]);
    my += std::log(e[k]);
  }
  mx /= double(h.size());
  my /= double(h.size());
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t k = 0; k < h.size(); ++k) {
    const double dx = std::log(h[k]) - mx;
    sxy += dx * (std::log(e[k]) - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

Study mms_study(const MixtureParams& p, const SchemeConfig& cfg, Frame frame,
                const std::vector<std::size_t>& levels, double t_end) {
  const MixtureParams params = validate_params(p);
  const DerivedMatrices d = derive_matrices(params);
  Study out;
  out.frame = frame;
  out.scheme = cfg;
  out.design_order =
      cfg.advection == Advection::FirstOrderUpwind ? 1.0 : 2.0;

  RunControls controls;
  controls.record_diagnostics = false;
  controls.snapshot_every = std::numeric_limits<std::size_t>::max();
  controls.forcing = forcing(frame, params);

  std::vector<double> hs, es;
  for (std::size_t n : levels) {
    const State init = exact_state(frame, n, params.n_components, 0.0);
    std::size_t steps = 0;
    RunControls c = controls;
    c.on_step = [&steps](const State&, const State&) { ++steps; };
    const Trajectory tr = frame == Frame::Eulerian
                              ? euler::run(init, params, d, cfg, t_end, c)
                              : lagrange::run_lagrangian(init, params, d, cfg, t_end, c);
    const State& fin = tr.back();
    const State ex = exact_state(frame, n, params.n_components, fin.time);

    Level lv;
    lv.n_cells = n;
    lv.h = fin.grid.spacing();
    lv.steps = steps;
    std::vector<double> diff(fin.n_nodes());
    for (std::size_t k = 0; k < diff.size(); ++k) diff[k] = fin.rho[k] - ex.rho[k];
    lv.error_rho = l2_norm(diff, fin.grid);
    double eu2 = 0.0;
    for (std::size_t i = 0; i < params.n_components; ++i) {
      for (std::size_t k = 0; k < diff.size(); ++k) diff[k] = fin.velocity[i][k] - ex.velocity[i][k];
      const double e = l2_norm(diff, fin.grid);
      eu2 += e * e;
    }
    lv.error_u = std::sqrt(eu2);
    lv.error = std::hypot(lv.error_rho, lv.error_u);
    out.levels.push_back(lv);
    hs.push_back(lv.h);
    es.push_back(lv.error);
  }
  out.order = levels.size() >= 2 ? observed_order(hs, es) : 0.0;
  out.pass = levels.size() >= 2 && out.order >= out.design_order - 0.3;
  return out;
}

std::string to_table(const Study& s) {
  std::string out;
  char buf[160];
  std::snprintf(buf, sizeof buf, "frame=%s integrator=%s advection=%s\n",
                std::string(to_string(s.frame)).c_str(), std::string(to_string(s.scheme.integrator)).c_str(),
                std::string(to_string(s.scheme.advection)).c_str());
  out += buf;
  out += "n_cells          h      steps     err_rho       err_u       error\n";
  for (const auto& l : s.levels) {
    std::snprintf(buf, sizeof buf, "%7zu %10.4g %10zu %11.4e %11.4e %11.4e\n", l.n_cells, l.h, l.steps,
                  l.error_rho, l.error_u, l.error);
    out += buf;
  }
  std::snprintf(buf, sizeof buf, "observed order %.3f (design %.0f) %s\n", s.order, s.design_order,
                s.pass ? "PASS" : "FAIL");
  out += buf;
  return out;
}

}  // namespace mixflow::mms
