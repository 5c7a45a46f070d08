#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mixflow/model.hpp"
#include "mixflow/scheme.hpp"
#include "mixflow/state.hpp"
#include "mixflow/trajectory.hpp"

/// Functionals of the a priori estimate chain and audits of the matching
/// inequalities along stored trajectories.
///
/// The constants in the estimates are existence constants, so the audits
/// measure them from the trajectory (suprema of the relevant norms) and check
/// the inequality shapes with those measured values. Time derivatives of
/// stored fields are reconstructed by central differences over snapshots
/// (one-sided at the ends). All audits are pure functions of their input.
namespace mixflow::estimates {

// ---------------------------------------------------------------------------
// Instantaneous functionals

/// sum_i int (rho u_i^2 / 2 + K/(gamma-1) rho^gamma) dx. The pressure part is
/// counted once per component.
double energy(const State& s, const MixtureParams& p);

/// The same functional written in mass coordinates (rho dx = dy).
double energy_mass_coordinates(const State& s, const MixtureParams& p);

struct Dissipation {
  double visc = 0.0;          // sum_ij mu_ij int u_i' u_j'
  double fric = 0.0;          // 1/2 sum_ij a_ij int (u_i - u_j)^2
  double grad_sq_sum = 0.0;   // sum_i int |u_i'|^2
  bool coercive = true;       // visc >= C0 * grad_sq_sum - 1e-10
};

/// Eulerian dissipation. Gradient integrals use cell differences, the
/// quadrature under which the solver's viscous operator is self-adjoint.
Dissipation dissipation(const State& s, const MixtureParams& p, const DerivedMatrices& d);

/// Mass-coordinate dissipation: sum mu_ij int rho u_i,y u_j,y dy and
/// 1/2 sum a_ij int (u_i - u_j)^2 / rho dy.
Dissipation dissipation_mass_coordinates(const State& s, const MixtureParams& p,
                                         const DerivedMatrices& d);

/// -sum_ij a_ij int (u_j - u_i) u_i dx, the unsymmetrized friction work.
double friction_work(const State& s, const MixtureParams& p);

/// w = d(ln rho)/dy on the mass grid.
std::vector<double> w_field(const State& s);

struct InstantDiagnostics {
  DiagnosticsRecord record;  // alpha left at its spatial part
  double alpha_spatial = 0.0;
  double alpha_rate = 0.0;   // integrand of the time part of alpha
};

/// Record for one state, given the solver's tendencies at that state.
InstantDiagnostics instantaneous_diagnostics(const State& s, const MixtureParams& p,
                                             const DerivedMatrices& d, const StateRates& rates);

// ---------------------------------------------------------------------------
// Audits

struct EnergyBudget {
  double e0 = 0.0;
  double max_excess = 0.0;  // max_t [E(t) + int_0^t D - E(0)]
  double margin = 0.0;      // E(0)(1 + tol) - max_t budget
  bool pass = false;
  std::vector<double> budget;  // per record
};

/// E(t) + int_0^t (visc + fric) <= E(0)(1 + rel_tol) at every record. Lagrangian
/// trajectories use the mass-coordinate forms.
EnergyBudget audit_energy_budget(const Trajectory& tr, const MixtureParams& p,
                                 const DerivedMatrices& d, double rel_tol = 1e-6);

struct WBalance {
  double max_residual = 0.0;
  double scale = 0.0;         // largest term magnitude seen
  double max_relative = 0.0;  // max_residual / scale
  std::vector<double> residuals;  // one per snapshot interval
  bool finite = true;
};

/// Defect of 1/2 d/dt |w|^2 + K~ gamma int rho^gamma w^2
///   = -int (dV/dt) w + (1/N) sum mu~_ij a_jk int (u_k - u_j) w / rho
/// per snapshot interval (midpoint in time).
WBalance audit_w_balance(const Trajectory& tr, const MixtureParams& p, const DerivedMatrices& d);

struct DensityBounds {
  double inf_rho = 0.0;
  double sup_rho = 0.0;
  double mass = 0.0;
  double margin = 0.0;  // min over checks, relative to mass
  bool positive = false;
  bool mean_value = false;
  bool pass = false;
};

/// min rho > 0 and min rho <= d <= max rho (tolerance rel_tol * d) at every
/// stored state and every record.
DensityBounds audit_density_bounds(const Trajectory& tr, double mass, double rel_tol = 1e-8);

struct GronwallChain {
  double c3 = 0.0;
  double c4 = 0.0;
  double c5 = 0.0;
  double sup_w = 0.0;
  double margin = 0.0;           // min_t (bound - |w|^2)
  double relative_margin = 0.0;  // min_t (bound - |w|^2) / bound over t with bound > 0
  bool pass = false;
  std::vector<double> w_sq;
  std::vector<double> bound;
};

/// |w(t)|^2 <= C4 exp(C5 int_0^t sum_jk |(u_k - u_j)/sqrt(rho)| dtau) with
/// C4, C5 assembled from the trajectory as in the log-density estimate.
GronwallChain audit_gronwall_chain(const Trajectory& tr, const MixtureParams& p,
                                   const DerivedMatrices& d);

/// alpha at every stored state of an Eulerian trajectory.
std::vector<double> alpha_series(const Trajectory& tr, const MixtureParams& p,
                                 const DerivedMatrices& d);

/// alpha at the last stored state.
double alpha(const Trajectory& tr, const MixtureParams& p, const DerivedMatrices& d);

struct AlphaGrowth {
  double sup_alpha = 0.0;
  double c10 = 0.0;
  double c11 = 0.0;
  double margin = 0.0;  // min over t > 0 of (bound - alpha) / bound
  bool pass = false;
  std::vector<double> alpha;
  std::vector<double> bound;
};

/// alpha(t) <= (alpha(0) + C10 t) exp(C11 int_0^t sum_j |u_j|_inf^2).
AlphaGrowth audit_alpha(const Trajectory& tr, const MixtureParams& p, const DerivedMatrices& d);

struct DerivativeNorms {
  double dx_u_linf_l2 = 0.0;    // sum_i sup_t |u_i,x|_2
  double dxx_u_l2 = 0.0;        // sum_i |u_i,xx|_{L2(Q)}
  double dt_u_l2 = 0.0;         // sum_i |u_i,t|_{L2(Q)}
  double dt_rho_linf_l2 = 0.0;  // sup_t |rho_t|_2
  double dx_rho_linf_l2 = 0.0;  // sup_t |rho_x|_2
  double u_l2_linf = 0.0;       // sum_i |u_i|_{L2(0,T;Linf)}
};

/// Norms of the strong-solution classes. Throws NonFinite on any non-finite value.
DerivativeNorms derivative_norm_report(const Trajectory& tr);

struct LogHolderBounds {
  double max_log_excess = 0.0;     // max_y |ln rho| - (|ln d| + sqrt(d) |w|_2)
  double max_holder_excess = 0.0;  // |1/sqrt(rho)|_inf - (d^{-1/2} + |w|_2 / 2)
  bool pass = false;
};

/// Both pointwise bounds on every stored Lagrangian state, within tol.
LogHolderBounds audit_log_holder_bounds(const Trajectory& tr, double tol = 1e-8);

/// int_0^T sum_ij int (u_i - u_j)^2 dx dt (dy/rho in mass coordinates).
double velocity_damping(const Trajectory& tr);

// ---------------------------------------------------------------------------
// Report

inline const std::vector<std::string>& audit_names() {
  static const std::vector<std::string> names{"energy", "w_balance", "density", "gronwall",
                                               "alpha",  "log_holder", "derivatives"};
  return names;
}

struct EstimateReport {
  Frame frame = Frame::Eulerian;
  double mass = 0.0;
  std::optional<EnergyBudget> energy_budget;
  std::optional<WBalance> w_balance;
  std::optional<DensityBounds> density_bounds;
  std::optional<GronwallChain> gronwall;
  std::optional<AlphaGrowth> alpha_growth;
  std::optional<LogHolderBounds> log_holder;
  std::optional<DerivativeNorms> derivative_norms;
  double velocity_damping = 0.0;
  std::map<std::string, double> empirical_constants;

  bool all_pass() const;
};

/// Runs every audit in `audits` that applies to the trajectory's frame
/// (all applicable audits when empty).
EstimateReport build_report(const Trajectory& tr, const MixtureParams& p, const DerivedMatrices& d,
                            const std::vector<std::string>& audits = {});

std::string to_json(const EstimateReport& r);
std::string to_table(const EstimateReport& r);

}  // namespace mixflow::estimates
