#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "mixflow/state.hpp"

namespace mixflow {

/// Per-step diagnostics. Column names in diag.csv match the field names.
///
/// Frame-dependent columns: `energy`, `dissipation_visc` and `dissipation_fric`
/// are the mass-coordinate forms of the same functionals in Lagrangian runs;
/// `dt_rho_l2` is the time derivative at fixed x (Eulerian) or fixed y
/// (Lagrangian). `alpha` is accumulated along the run from the solver's own
/// tendencies.
struct DiagnosticsRecord {
  double time = 0.0;
  double energy = 0.0;
  double dissipation_visc = 0.0;
  double dissipation_fric = 0.0;
  double w_norm = 0.0;
  double rho_min = 0.0;
  double rho_max = 0.0;
  double grad_rho_l2 = 0.0;
  double alpha = 0.0;
  double dt_rho_l2 = 0.0;
  double u_linf = 0.0;

  static constexpr std::array<std::string_view, 11> column_names{
      "time",     "energy",      "dissipation_visc", "dissipation_fric",
      "w_norm",   "rho_min",     "rho_max",          "grad_rho_l2",
      "alpha",    "dt_rho_l2",   "u_linf"};

  std::array<double, 11> values() const;
  static DiagnosticsRecord from_values(const std::array<double, 11>& v);

  bool operator==(const DiagnosticsRecord&) const = default;
};

/// Time-ordered snapshots of one formulation plus the per-step records.
struct Trajectory {
  Frame frame = Frame::Eulerian;
  std::vector<State> states;
  std::vector<DiagnosticsRecord> records;

  /// Throws InvalidArgument on non-increasing time or a frame mismatch.
  void append(State s);
  void append(const DiagnosticsRecord& r);

  bool empty() const noexcept { return states.empty(); }
  const State& back() const { return states.back(); }
};

}  // namespace mixflow

#include <memory>
#include <string>

#include "mixflow/error.hpp"

namespace mixflow {

/// Raised when a run aborts (density floor, non-finite values). Carries the
/// trajectory up to and including the last valid state.
class SolverFailure : public Error {
 public:
  SolverFailure(ErrorCode code, const std::string& message, Trajectory partial)
      : Error(code, message), partial_(std::make_shared<const Trajectory>(std::move(partial))) {}

  const Trajectory& partial() const noexcept { return *partial_; }

 private:
  std::shared_ptr<const Trajectory> partial_;
};

}  // namespace mixflow
