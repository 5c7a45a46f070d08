#include "mixflow/trajectory.hpp"

#include "mixflow/error.hpp"

namespace mixflow {

std::array<double, 11> DiagnosticsRecord::values() const {
  return {time, energy, dissipation_visc, dissipation_fric, w_norm,  rho_min,
          rho_max, grad_rho_l2, alpha,   dt_rho_l2,        u_linf};
}

DiagnosticsRecord DiagnosticsRecord::from_values(const std::array<double, 11>& v) {
  return DiagnosticsRecord{v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8], v[9], v[10]};
}

void Trajectory::append(State s) {
  if (s.frame != frame) throw Error(ErrorCode::InvalidArgument, "trajectory frame mismatch");
  if (!states.empty() && !(s.time > states.back().time))
    throw Error(ErrorCode::InvalidArgument, "trajectory times must increase strictly");
  states.push_back(std::move(s));
}

void Trajectory::append(const DiagnosticsRecord& r) {
  if (!records.empty() && !(r.time > records.back().time))
    throw Error(ErrorCode::InvalidArgument, "diagnostics times must increase strictly");
  records.push_back(r);
}

}  // namespace mixflow
