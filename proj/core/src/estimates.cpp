#include "mixflow/estimates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mixflow/calculus.hpp"
#include "mixflow/error.hpp"

namespace mixflow::estimates {
namespace {

using Field = std::vector<double>;

void require_states(const Trajectory& tr, const char* what) {
  if (tr.states.empty()) throw Error(ErrorCode::EmptyTrajectory, std::string(what) + ": no states");
}

void require_trajectory_frame(const Trajectory& tr, Frame f, const char* what) {
  if (tr.frame != f)
    throw Error(ErrorCode::WrongFrame, std::string(what) + " expects a " + std::string(to_string(f)) +
                                           " trajectory");
}

Field product(const Field& a, const Field& b) {
  Field out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] * b[k];
  return out;
}

/// Time derivative of a stored field at snapshot s: three-point formula on the
/// (possibly uneven) snapshot times inside, one-sided at the ends.
template <class Get>
Field time_derivative(const std::vector<State>& st, std::size_t s, Get get) {
  const std::size_t m = st.size();
  const Field& f0 = get(st[s]);
  if (m < 2) return Field(f0.size(), 0.0);
  Field out(f0.size());
  if (s == 0 || s + 1 == m) {
    const std::size_t a = s == 0 ? 0 : s - 1;
    const std::size_t b = a + 1;
    const Field& fa = get(st[a]);
    const Field& fb = get(st[b]);
    const double dt = st[b].time - st[a].time;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = (fb[k] - fa[k]) / dt;
    return out;
  }
  const Field& fm = get(st[s - 1]);
  const Field& fp = get(st[s + 1]);
  const double h1 = st[s].time - st[s - 1].time;
  const double h2 = st[s + 1].time - st[s].time;
  const double cm = -h2 / (h1 * (h1 + h2));
  const double c0 = (h2 - h1) / (h1 * h2);
  const double cp = h1 / (h2 * (h1 + h2));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = cm * fm[k] + c0 * f0[k] + cp * fp[k];
  return out;
}

/// Trapezoid integral of samples over the given times, cumulative.
std::vector<double> cumulative_in_time(const std::vector<double>& t, const std::vector<double>& f) {
  std::vector<double> out(f.size(), 0.0);
  for (std::size_t k = 1; k < f.size(); ++k)
    out[k] = out[k - 1] + 0.5 * (t[k] - t[k - 1]) * (f[k] + f[k - 1]);
  return out;
}

std::vector<double> times_of(const std::vector<State>& st) {
  std::vector<double> t;
  t.reserve(st.size());
  for (const auto& s : st) t.push_back(s.time);
  return t;
}

/// sum_j a_ij (u_j - u_i)
Field friction_force(const State& s, const MixtureParams& p, std::size_t i) {
  Field f(s.n_nodes(), 0.0);
  for (std::size_t j = 0; j < s.n_components(); ++j) {
    if (j == i) continue;
    for (std::size_t k = 0; k < f.size(); ++k)
      f[k] += p.friction(i, j) * (s.velocity[j][k] - s.velocity[i][k]);
  }
  return f;
}

/// sum_j mu_ij u_j,xx with the three-point stencil (one-sided at the walls).
std::vector<Field> viscous_second_derivative(const State& s, const MixtureParams& p) {
  const std::size_t nc = s.n_components();
  std::vector<Field> uxx(nc);
  for (std::size_t j = 0; j < nc; ++j) uxx[j] = diff2(s.velocity[j], s.grid);
  std::vector<Field> out(nc, Field(s.n_nodes(), 0.0));
  for (std::size_t i = 0; i < nc; ++i)
    for (std::size_t j = 0; j < nc; ++j)
      for (std::size_t k = 0; k < s.n_nodes(); ++k) out[i][k] += p.viscosity(i, j) * uxx[j][k];
  return out;
}

double pair_integral(const State& s, std::size_t i, std::size_t j, bool mass_weighted) {
  Field f(s.n_nodes());
  for (std::size_t k = 0; k < f.size(); ++k) {
    const double du = s.velocity[i][k] - s.velocity[j][k];
    f[k] = mass_weighted ? du * du / s.rho[k] : du * du;
  }
  return integrate(f, s.grid);
}

Field v_field(const State& s, const DerivedMatrices& d) {
  Field v(s.n_nodes(), 0.0);
  for (std::size_t j = 0; j < s.n_components(); ++j)
    for (std::size_t k = 0; k < v.size(); ++k) v[k] += d.v_weights[j] * s.velocity[j][k];
  return v;
}

/// sum_{j != k} w_j a_jk int (u_k - u_j) w / rho dy
double friction_w_term(const State& s, const MixtureParams& p, const DerivedMatrices& d,
                       const Field& w) {
  const std::size_t nc = s.n_components();
  double total = 0.0;
  Field f(s.n_nodes());
  for (std::size_t j = 0; j < nc; ++j)
    for (std::size_t k = 0; k < nc; ++k) {
      if (j == k) continue;
      for (std::size_t m = 0; m < f.size(); ++m)
        f[m] = (s.velocity[k][m] - s.velocity[j][m]) * w[m] / s.rho[m];
      total += d.v_weights[j] * p.friction(j, k) * integrate(f, s.grid);
    }
  return total;
}

double max_of(const Field& f) { return *std::max_element(f.begin(), f.end()); }
double min_of(const Field& f) { return *std::min_element(f.begin(), f.end()); }

bool all_finite(const State& s) {
  for (double r : s.rho)
    if (!std::isfinite(r)) return false;
  for (const auto& u : s.velocity)
    for (double x : u)
      if (!std::isfinite(x)) return false;
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------

double energy(const State& s, const MixtureParams& p) {
  require_frame(s, Frame::Eulerian, "energy");
  const double nc = double(s.n_components());
  const double c = nc * p.pressure_coeff / (p.gamma - 1.0);
  Field f(s.n_nodes());
  for (std::size_t k = 0; k < f.size(); ++k) {
    double u2 = 0.0;
    for (const auto& u : s.velocity) u2 += u[k] * u[k];
    f[k] = 0.5 * s.rho[k] * u2 + c * std::pow(s.rho[k], p.gamma);
  }
  return integrate(f, s.grid);
}

double energy_mass_coordinates(const State& s, const MixtureParams& p) {
  require_frame(s, Frame::Lagrangian, "energy_mass_coordinates");
  const double nc = double(s.n_components());
  const double c = nc * p.pressure_coeff / (p.gamma - 1.0);
  Field f(s.n_nodes());
  for (std::size_t k = 0; k < f.size(); ++k) {
    double u2 = 0.0;
    for (const auto& u : s.velocity) u2 += u[k] * u[k];
    f[k] = 0.5 * u2 + c * std::pow(s.rho[k], p.gamma - 1.0);
  }
  return integrate(f, s.grid);
}

Dissipation dissipation(const State& s, const MixtureParams& p, const DerivedMatrices& d) {
  require_frame(s, Frame::Eulerian, "dissipation");
  const std::size_t nc = s.n_components();
  Dissipation out;
  for (std::size_t i = 0; i < nc; ++i) {
    for (std::size_t j = 0; j < nc; ++j) {
      const double g = integrate_gradient_product(s.velocity[i], s.velocity[j], s.grid);
      out.visc += p.viscosity(i, j) * g;
      if (i == j) out.grad_sq_sum += g;
      else out.fric += 0.5 * p.friction(i, j) * pair_integral(s, i, j, false);
    }
  }
  out.coercive = out.visc >= d.coercivity * out.grad_sq_sum - 1e-10;
  return out;
}

Dissipation dissipation_mass_coordinates(const State& s, const MixtureParams& p,
                                         const DerivedMatrices& d) {
  require_frame(s, Frame::Lagrangian, "dissipation_mass_coordinates");
  const std::size_t nc = s.n_components();
  const Field face = harmonic_face_average(s.rho);
  Dissipation out;
  for (std::size_t i = 0; i < nc; ++i) {
    for (std::size_t j = 0; j < nc; ++j) {
      const double g =
          integrate_weighted_gradient_product(s.velocity[i], s.velocity[j], face, s.grid);
      out.visc += p.viscosity(i, j) * g;
      if (i == j) out.grad_sq_sum += g;
      else out.fric += 0.5 * p.friction(i, j) * pair_integral(s, i, j, true);
    }
  }
  out.coercive = out.visc >= d.coercivity * out.grad_sq_sum - 1e-10;
  return out;
}

double friction_work(const State& s, const MixtureParams& p) {
  const std::size_t nc = s.n_components();
  double total = 0.0;
  Field f(s.n_nodes());
  for (std::size_t i = 0; i < nc; ++i)
    for (std::size_t j = 0; j < nc; ++j) {
      if (i == j) continue;
      for (std::size_t k = 0; k < f.size(); ++k)
        f[k] = (s.velocity[j][k] - s.velocity[i][k]) * s.velocity[i][k];
      total -= p.friction(i, j) * integrate(f, s.grid);
    }
  return total;
}

Field w_field(const State& s) {
  require_frame(s, Frame::Lagrangian, "w_field");
  Field lr(s.n_nodes());
  for (std::size_t k = 0; k < lr.size(); ++k) {
    if (!(s.rho[k] > 0.0)) throw Error(ErrorCode::DensityFloor, "w_field needs rho > 0");
    lr[k] = std::log(s.rho[k]);
  }
  return diff(lr, s.grid);
}

InstantDiagnostics instantaneous_diagnostics(const State& s, const MixtureParams& p,
                                             const DerivedMatrices& d, const StateRates& rates) {
  InstantDiagnostics out;
  DiagnosticsRecord& r = out.record;
  const std::size_t nc = s.n_components();
  const std::size_t n = s.n_nodes();
  r.time = s.time;
  r.rho_min = min_of(s.rho);
  r.rho_max = max_of(s.rho);
  for (const auto& u : s.velocity) r.u_linf = std::max(r.u_linf, linf_norm(u));
  r.dt_rho_l2 = l2_norm(rates.rho, s.grid);

  Field rate(n);
  if (s.frame == Frame::Eulerian) {
    r.energy = energy(s, p);
    const auto dis = dissipation(s, p, d);
    r.dissipation_visc = dis.visc;
    r.dissipation_fric = dis.fric;
    const Field rx = diff(s.rho, s.grid);
    Field f(n);
    for (std::size_t k = 0; k < n; ++k) f[k] = rx[k] * rx[k] / (s.rho[k] * s.rho[k] * s.rho[k]);
    r.w_norm = std::sqrt(integrate(f, s.grid));
    r.grad_rho_l2 = l2_norm(rx, s.grid);

    const auto muxx = viscous_second_derivative(s, p);
    for (std::size_t k = 0; k < n; ++k) {
      double acc = 0.0;
      for (std::size_t i = 0; i < nc; ++i) {
        const double ut = rates.velocity[i][k];
        acc += s.rho[k] * ut * ut + muxx[i][k] * muxx[i][k] / s.rho[k];
      }
      rate[k] = acc;
    }
  } else {
    r.energy = energy_mass_coordinates(s, p);
    const auto dis = dissipation_mass_coordinates(s, p, d);
    r.dissipation_visc = dis.visc;
    r.dissipation_fric = dis.fric;
    r.w_norm = l2_norm(w_field(s), s.grid);
    const Field ry = diff(s.rho, s.grid);
    Field f(n);
    for (std::size_t k = 0; k < n; ++k) f[k] = s.rho[k] * ry[k] * ry[k];
    r.grad_rho_l2 = std::sqrt(integrate(f, s.grid));

    // Convert to x-derivatives: d/dx = rho d/dy, and d/dt|_x = d/dt|_y - v rho d/dy.
    const Field v = average_velocity(s);
    std::vector<Field> ux(nc), uxx(nc);
    for (std::size_t j = 0; j < nc; ++j) {
      ux[j] = product(s.rho, diff(s.velocity[j], s.grid));
      uxx[j] = product(s.rho, diff(ux[j], s.grid));
    }
    for (std::size_t k = 0; k < n; ++k) {
      double acc = 0.0;
      for (std::size_t i = 0; i < nc; ++i) {
        const double ut = rates.velocity[i][k] - v[k] * ux[i][k];
        double m = 0.0;
        for (std::size_t j = 0; j < nc; ++j) m += p.viscosity(i, j) * uxx[j][k];
        acc += ut * ut + m * m / (s.rho[k] * s.rho[k]);
      }
      rate[k] = acc;
    }
  }
  out.alpha_spatial = r.dissipation_visc;
  out.alpha_rate = integrate(rate, s.grid);
  r.alpha = out.alpha_spatial;
  return out;
}

// ---------------------------------------------------------------------------

EnergyBudget audit_energy_budget(const Trajectory& tr, const MixtureParams& p,
                                 const DerivedMatrices& d, double rel_tol) {
  std::vector<double> t, e, dis;
  if (!tr.records.empty()) {
    for (const auto& r : tr.records) {
      t.push_back(r.time);
      e.push_back(r.energy);
      dis.push_back(r.dissipation_visc + r.dissipation_fric);
    }
  } else {
    require_states(tr, "audit_energy_budget");
    const bool euler = tr.frame == Frame::Eulerian;
    for (const auto& s : tr.states) {
      const auto dd = euler ? dissipation(s, p, d) : dissipation_mass_coordinates(s, p, d);
      t.push_back(s.time);
      e.push_back(euler ? energy(s, p) : energy_mass_coordinates(s, p));
      dis.push_back(dd.visc + dd.fric);
    }
  }
  EnergyBudget out;
  out.e0 = e.front();
  const auto cum = cumulative_in_time(t, dis);
  double worst = -std::numeric_limits<double>::infinity();
  bool finite = true;
  out.budget.resize(e.size());
  for (std::size_t k = 0; k < e.size(); ++k) {
    out.budget[k] = e[k] + cum[k];
    if (!std::isfinite(out.budget[k])) finite = false;
    worst = std::max(worst, out.budget[k]);
  }
  const double limit = out.e0 * (1.0 + rel_tol);
  out.max_excess = worst - out.e0;
  out.margin = limit - worst;
  out.pass = finite && worst <= limit;
  return out;
}

WBalance audit_w_balance(const Trajectory& tr, const MixtureParams& p, const DerivedMatrices& d) {
  require_trajectory_frame(tr, Frame::Lagrangian, "audit_w_balance");
  require_states(tr, "audit_w_balance");
  const auto& st = tr.states;
  const std::size_t m = st.size();

  std::vector<Field> w(m), vv(m);
  std::vector<double> wsq(m), pres(m), fric(m);
  for (std::size_t s = 0; s < m; ++s) {
    w[s] = w_field(st[s]);
    vv[s] = v_field(st[s], d);
    wsq[s] = integrate(product(w[s], w[s]), st[s].grid);
    Field f(w[s].size());
    for (std::size_t k = 0; k < f.size(); ++k)
      f[k] = std::pow(st[s].rho[k], p.gamma) * w[s][k] * w[s][k];
    pres[s] = d.k_tilde * p.gamma * integrate(f, st[s].grid);
    fric[s] = friction_w_term(st[s], p, d, w[s]);
  }

  WBalance out;
  for (std::size_t s = 0; s + 1 < m; ++s) {
    const double dt = st[s + 1].time - st[s].time;
    const double lhs_dt = 0.5 * (wsq[s + 1] - wsq[s]) / dt;
    const double lhs_p = 0.5 * (pres[s] + pres[s + 1]);
    Field f(w[s].size());
    for (std::size_t k = 0; k < f.size(); ++k)
      f[k] = (vv[s + 1][k] - vv[s][k]) / dt * 0.5 * (w[s][k] + w[s + 1][k]);
    const double tv = integrate(f, st[s].grid);
    const double rf = 0.5 * (fric[s] + fric[s + 1]);
    const double res = std::abs(lhs_dt + lhs_p + tv - rf);
    out.residuals.push_back(res);
    if (!std::isfinite(res)) out.finite = false;
    out.max_residual = std::max(out.max_residual, res);
    out.scale = std::max(out.scale, std::abs(lhs_dt) + std::abs(lhs_p) + std::abs(tv) + std::abs(rf));
  }
  out.max_relative = out.scale > 0.0 ? out.max_residual / out.scale : 0.0;
  return out;
}

DensityBounds audit_density_bounds(const Trajectory& tr, double mass, double rel_tol) {
  if (tr.states.empty() && tr.records.empty())
    throw Error(ErrorCode::EmptyTrajectory, "audit_density_bounds: empty trajectory");
  DensityBounds out;
  out.mass = mass;
  out.inf_rho = std::numeric_limits<double>::infinity();
  out.sup_rho = -std::numeric_limits<double>::infinity();
  out.positive = true;
  out.mean_value = true;
  out.margin = std::numeric_limits<double>::infinity();
  const double tol = rel_tol * mass;
  auto visit = [&](double lo, double hi) {
    out.inf_rho = std::min(out.inf_rho, lo);
    out.sup_rho = std::max(out.sup_rho, hi);
    if (!(lo > 0.0)) out.positive = false;
    if (!(lo <= mass + tol && hi >= mass - tol)) out.mean_value = false;
    out.margin = std::min(out.margin, std::min(mass - lo, hi - mass) / mass);
  };
  for (const auto& s : tr.states) visit(min_of(s.rho), max_of(s.rho));
  for (const auto& r : tr.records) visit(r.rho_min, r.rho_max);
  out.pass = out.positive && out.mean_value;
  return out;
}

GronwallChain audit_gronwall_chain(const Trajectory& tr, const MixtureParams& p,
                                   const DerivedMatrices& d) {
  require_trajectory_frame(tr, Frame::Lagrangian, "audit_gronwall_chain");
  require_states(tr, "audit_gronwall_chain");
  const auto& st = tr.states;
  const std::size_t m = st.size();
  const std::size_t nc = p.n_components;
  const double dlen = st.front().grid.length;

  GronwallChain out;
  for (std::size_t j = 0; j < nc; ++j)
    for (std::size_t k = 0; k < nc; ++k)
      if (j != k) out.c3 = std::max(out.c3, std::abs(d.v_weights[j]) * p.friction(j, k));
  out.c5 = 4.0 * out.c3;

  const auto t = times_of(st);
  std::vector<double> phi(m), flux(m);
  double sup_v2 = 0.0, v0w0 = 0.0;
  out.w_sq.resize(m);
  for (std::size_t s = 0; s < m; ++s) {
    const State& x = st[s];
    const Field w = w_field(x);
    const Field vv = v_field(x, d);
    out.w_sq[s] = integrate(product(w, w), x.grid);
    out.sup_w = std::max(out.sup_w, std::sqrt(out.w_sq[s]));
    sup_v2 = std::max(sup_v2, integrate(product(vv, vv), x.grid));
    if (s == 0) v0w0 = integrate(product(vv, w), x.grid);
    double ph = 0.0;
    for (std::size_t j = 0; j < nc; ++j)
      for (std::size_t k = 0; k < nc; ++k)
        if (j != k) ph += std::sqrt(pair_integral(x, k, j, true));
    phi[s] = ph;
    const Field dv = diff(vv, x.grid);
    const Field dav = diff(average_velocity(x), x.grid);
    Field g(dv.size());
    for (std::size_t k = 0; k < g.size(); ++k) g[k] = std::abs(x.rho[k] * dv[k] * dav[k]);
    flux[s] = integrate(g, x.grid);
  }
  const auto phi_int = cumulative_in_time(t, phi);
  const auto flux_int = cumulative_in_time(t, flux);
  out.c4 = 2.0 * (out.w_sq[0] + 2.0 * sup_v2 + 2.0 * std::abs(v0w0) + 2.0 * flux_int.back() +
                  out.c3 / dlen * phi_int.back());

  out.bound.resize(m);
  out.pass = true;
  out.margin = std::numeric_limits<double>::infinity();
  out.relative_margin = 0.0;
  bool have_rel = false;
  for (std::size_t s = 0; s < m; ++s) {
    out.bound[s] = out.c4 * std::exp(out.c5 * phi_int[s]);
    const double gap = out.bound[s] - out.w_sq[s];
    if (!(out.w_sq[s] <= out.bound[s] * (1.0 + 1e-10) + 1e-30)) out.pass = false;
    out.margin = std::min(out.margin, gap);
    if (out.bound[s] > 0.0) {
      const double rel = gap / out.bound[s];
      out.relative_margin = have_rel ? std::min(out.relative_margin, rel) : rel;
      have_rel = true;
    }
  }
  return out;
}

std::vector<double> alpha_series(const Trajectory& tr, const MixtureParams& p,
                                 const DerivedMatrices&) {
  require_trajectory_frame(tr, Frame::Eulerian, "alpha");
  require_states(tr, "alpha");
  const auto& st = tr.states;
  const std::size_t m = st.size();
  const std::size_t nc = p.n_components;
  std::vector<double> spatial(m), rate(m);
  for (std::size_t s = 0; s < m; ++s) {
    const State& x = st[s];
    double visc = 0.0;
    for (std::size_t i = 0; i < nc; ++i)
      for (std::size_t j = 0; j < nc; ++j)
        visc += p.viscosity(i, j) * integrate_gradient_product(x.velocity[i], x.velocity[j], x.grid);
    spatial[s] = visc;
    const auto muxx = viscous_second_derivative(x, p);
    Field f(x.n_nodes(), 0.0);
    for (std::size_t i = 0; i < nc; ++i) {
      const Field ut = time_derivative(st, s, [i](const State& y) -> const Field& { return y.velocity[i]; });
      for (std::size_t k = 0; k < f.size(); ++k)
        f[k] += x.rho[k] * ut[k] * ut[k] + muxx[i][k] * muxx[i][k] / x.rho[k];
    }
    rate[s] = integrate(f, x.grid);
  }
  const auto cum = cumulative_in_time(times_of(st), rate);
  std::vector<double> out(m);
  for (std::size_t s = 0; s < m; ++s) out[s] = spatial[s] + cum[s];
  return out;
}

double alpha(const Trajectory& tr, const MixtureParams& p, const DerivedMatrices& d) {
  return alpha_series(tr, p, d).back();
}

AlphaGrowth audit_alpha(const Trajectory& tr, const MixtureParams& p, const DerivedMatrices& d) {
  AlphaGrowth out;
  out.alpha = alpha_series(tr, p, d);
  const auto& st = tr.states;
  const std::size_t m = st.size();
  const std::size_t nc = p.n_components;
  const auto t = times_of(st);

  std::vector<double> beta(m);
  double sup_rho = 0.0;
  for (std::size_t s = 0; s < m; ++s) {
    const State& x = st[s];
    double b = 0.0;
    for (const auto& u : x.velocity) b += linf_norm(u) * linf_norm(u);
    beta[s] = b;
    sup_rho = std::max(sup_rho, max_of(x.rho));

    Field pg(x.n_nodes());
    for (std::size_t k = 0; k < pg.size(); ++k) pg[k] = std::pow(x.rho[k], p.gamma);
    pg = diff(pg, x.grid);
    Field f(x.n_nodes(), 0.0);
    for (std::size_t i = 0; i < nc; ++i) {
      const Field fr = friction_force(x, p, i);
      for (std::size_t k = 0; k < f.size(); ++k) {
        const double kp = p.pressure_coeff * pg[k];
        f[k] += (fr[k] * fr[k] + kp * kp) / x.rho[k];
      }
    }
    out.c10 = std::max(out.c10, 3.0 * integrate(f, x.grid));
  }
  out.c11 = 3.0 * sup_rho / (double(nc) * d.coercivity);
  const auto beta_int = cumulative_in_time(t, beta);

  out.bound.resize(m);
  out.pass = true;
  out.margin = 0.0;
  bool have = false;
  for (std::size_t s = 0; s < m; ++s) {
    out.sup_alpha = std::max(out.sup_alpha, out.alpha[s]);
    out.bound[s] = (out.alpha[0] + out.c10 * (t[s] - t[0])) * std::exp(out.c11 * beta_int[s]);
    if (!(out.alpha[s] <= out.bound[s] * (1.0 + 1e-9) + 1e-30)) out.pass = false;
    if (s > 0 && out.bound[s] > 0.0) {
      const double rel = (out.bound[s] - out.alpha[s]) / out.bound[s];
      out.margin = have ? std::min(out.margin, rel) : rel;
      have = true;
    }
  }
  return out;
}

DerivativeNorms derivative_norm_report(const Trajectory& tr) {
  require_trajectory_frame(tr, Frame::Eulerian, "derivative_norm_report");
  require_states(tr, "derivative_norm_report");
  const auto& st = tr.states;
  for (const auto& s : st)
    if (!all_finite(s)) throw Error(ErrorCode::NonFinite, "trajectory contains non-finite values");

  const std::size_t m = st.size();
  const std::size_t nc = st.front().n_components();
  const auto t = times_of(st);
  DerivativeNorms out;
  std::vector<std::vector<double>> uxx_sq(nc, std::vector<double>(m)),
      ut_sq(nc, std::vector<double>(m)), uinf_sq(nc, std::vector<double>(m));
  std::vector<double> ux_sup(nc, 0.0);
  for (std::size_t s = 0; s < m; ++s) {
    const State& x = st[s];
    for (std::size_t i = 0; i < nc; ++i) {
      ux_sup[i] = std::max(ux_sup[i], l2_norm(diff(x.velocity[i], x.grid), x.grid));
      const double a = l2_norm(diff2(x.velocity[i], x.grid), x.grid);
      uxx_sq[i][s] = a * a;
      const double b = l2_norm(
          time_derivative(st, s, [i](const State& y) -> const Field& { return y.velocity[i]; }), x.grid);
      ut_sq[i][s] = b * b;
      const double c = linf_norm(x.velocity[i]);
      uinf_sq[i][s] = c * c;
    }
    const Field rt = time_derivative(st, s, [](const State& y) -> const Field& { return y.rho; });
    out.dt_rho_linf_l2 = std::max(out.dt_rho_linf_l2, l2_norm(rt, x.grid));
    out.dx_rho_linf_l2 = std::max(out.dx_rho_linf_l2, l2_norm(diff(x.rho, x.grid), x.grid));
  }
  for (std::size_t i = 0; i < nc; ++i) {
    out.dx_u_linf_l2 += ux_sup[i];
    out.dxx_u_l2 += std::sqrt(cumulative_in_time(t, uxx_sq[i]).back());
    out.dt_u_l2 += std::sqrt(cumulative_in_time(t, ut_sq[i]).back());
    out.u_l2_linf += std::sqrt(cumulative_in_time(t, uinf_sq[i]).back());
  }
  for (double v : {out.dx_u_linf_l2, out.dxx_u_l2, out.dt_u_l2, out.dt_rho_linf_l2,
                   out.dx_rho_linf_l2, out.u_l2_linf})
    if (!std::isfinite(v)) throw Error(ErrorCode::NonFinite, "derivative norm is not finite");
  return out;
}

LogHolderBounds audit_log_holder_bounds(const Trajectory& tr, double tol) {
  require_trajectory_frame(tr, Frame::Lagrangian, "audit_log_holder_bounds");
  require_states(tr, "audit_log_holder_bounds");
  LogHolderBounds out;
  out.max_log_excess = -std::numeric_limits<double>::infinity();
  out.max_holder_excess = -std::numeric_limits<double>::infinity();
  for (const auto& s : tr.states) {
    const double dlen = s.grid.length;
    const double wn = l2_norm(w_field(s), s.grid);
    double log_sup = 0.0, inv_sqrt_sup = 0.0;
    for (double r : s.rho) {
      log_sup = std::max(log_sup, std::abs(std::log(r)));
      inv_sqrt_sup = std::max(inv_sqrt_sup, 1.0 / std::sqrt(r));
    }
    out.max_log_excess =
        std::max(out.max_log_excess, log_sup - (std::abs(std::log(dlen)) + std::sqrt(dlen) * wn));
    out.max_holder_excess =
        std::max(out.max_holder_excess, inv_sqrt_sup - (1.0 / std::sqrt(dlen) + 0.5 * wn));
  }
  out.pass = out.max_log_excess <= tol && out.max_holder_excess <= tol;
  return out;
}

double velocity_damping(const Trajectory& tr) {
  require_states(tr, "velocity_damping");
  const auto& st = tr.states;
  const bool mass = tr.frame == Frame::Lagrangian;
  std::vector<double> f(st.size(), 0.0);
  for (std::size_t s = 0; s < st.size(); ++s) {
    const std::size_t nc = st[s].n_components();
    for (std::size_t i = 0; i < nc; ++i)
      for (std::size_t j = 0; j < nc; ++j)
        if (i != j) f[s] += pair_integral(st[s], i, j, mass);
  }
  return cumulative_in_time(times_of(st), f).back();
}

// ---------------------------------------------------------------------------

bool EstimateReport::all_pass() const {
  if (energy_budget && !energy_budget->pass) return false;
  if (w_balance && !w_balance->finite) return false;
  if (density_bounds && !density_bounds->pass) return false;
  if (gronwall && !gronwall->pass) return false;
  if (alpha_growth && !alpha_growth->pass) return false;
  if (log_holder && !log_holder->pass) return false;
  return std::isfinite(velocity_damping);
}

EstimateReport build_report(const Trajectory& tr, const MixtureParams& p, const DerivedMatrices& d,
                            const std::vector<std::string>& audits) {
  require_states(tr, "build_report");
  for (const auto& a : audits)
    if (std::find(audit_names().begin(), audit_names().end(), a) == audit_names().end())
      throw Error(ErrorCode::InvalidArgument, "unknown audit '" + a + "'");
  auto wanted = [&](const char* name) {
    return audits.empty() || std::find(audits.begin(), audits.end(), name) != audits.end();
  };

  EstimateReport r;
  r.frame = tr.frame;
  const bool euler = tr.frame == Frame::Eulerian;
  r.mass = euler ? total_mass(tr.states.front()) : tr.states.front().grid.length;
  r.velocity_damping = velocity_damping(tr);
  auto& c = r.empirical_constants;

  if (wanted("density")) {
    r.density_bounds = audit_density_bounds(tr, r.mass);
    c["C8_inf_rho"] = r.density_bounds->inf_rho;
    c["C8_sup_rho"] = r.density_bounds->sup_rho;
  }
  if (wanted("energy")) {
    r.energy_budget = audit_energy_budget(tr, p, d);
    c["C1"] = r.energy_budget->e0 + r.energy_budget->max_excess;
  }
  if (euler) {
    if (wanted("alpha")) {
      r.alpha_growth = audit_alpha(tr, p, d);
      c["C10"] = r.alpha_growth->c10;
      c["C11"] = r.alpha_growth->c11;
      c["C12"] = r.alpha_growth->sup_alpha;
    }
    if (wanted("derivatives")) {
      r.derivative_norms = derivative_norm_report(tr);
      const auto& n = *r.derivative_norms;
      c["C9"] = n.dx_rho_linf_l2;
      c["C13"] = n.dx_u_linf_l2 + n.dxx_u_l2 + n.dt_u_l2;
      c["C14"] = n.dt_rho_linf_l2;
      c["u_l2_linf"] = n.u_l2_linf;
    }
  } else {
    if (wanted("w_balance")) r.w_balance = audit_w_balance(tr, p, d);
    if (wanted("gronwall")) {
      r.gronwall = audit_gronwall_chain(tr, p, d);
      c["C3"] = r.gronwall->c3;
      c["C4"] = r.gronwall->c4;
      c["C5"] = r.gronwall->c5;
      c["C6"] = r.gronwall->sup_w;
    }
    if (wanted("log_holder")) {
      r.log_holder = audit_log_holder_bounds(tr);
      double sup_log = 0.0;
      for (const auto& s : tr.states)
        for (double x : s.rho) sup_log = std::max(sup_log, std::abs(std::log(x)));
      c["C7"] = sup_log;
    }
  }
  return r;
}

}  // namespace mixflow::estimates
