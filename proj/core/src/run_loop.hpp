#pragma once

// Internal: time loop shared by the Eulerian and Lagrangian drivers.

#include <algorithm>
#include <cmath>
#include <string>

#include "mixflow/error.hpp"
#include "mixflow/estimates.hpp"
#include "mixflow/model.hpp"
#include "mixflow/scheme.hpp"
#include "mixflow/trajectory.hpp"

namespace mixflow::detail {

template <class DtFn, class StepFn, class RatesFn>
Trajectory run_loop(const State& initial, const MixtureParams& p, const DerivedMatrices& d,
                    double t_end, double density_floor, const RunControls& controls, DtFn&& dt_fn,
                    StepFn&& step_fn, RatesFn&& rates_fn) {
  check_state(initial, density_floor);
  if (t_end > p.t_final * (1.0 + 1e-12))
    throw Error(ErrorCode::InvalidArgument, "t_end exceeds T_final");
  if (controls.snapshot_every == 0 || controls.diag_every == 0)
    throw Error(ErrorCode::InvalidArgument, "snapshot/diagnostic cadence must be >= 1");

  Trajectory tr;
  tr.frame = initial.frame;
  tr.append(initial);
  if (controls.on_snapshot) controls.on_snapshot(initial);

  double alpha_integral = 0.0;
  double last_rate = 0.0;
  double last_time = initial.time;
  bool have_record = false;
  auto record = [&](const State& s) {
    if (!controls.record_diagnostics) return;
    const auto inst = estimates::instantaneous_diagnostics(s, p, d, rates_fn(s));
    if (have_record) alpha_integral += 0.5 * (s.time - last_time) * (inst.alpha_rate + last_rate);
    last_rate = inst.alpha_rate;
    last_time = s.time;
    have_record = true;
    DiagnosticsRecord r = inst.record;
    r.alpha = inst.alpha_spatial + alpha_integral;
    tr.append(r);
  };
  record(initial);

  const double eps = 1e-13 * std::max(1.0, std::abs(t_end));
  const bool by_time = controls.snapshot_interval > 0.0;
  double next_snapshot = initial.time + controls.snapshot_interval;
  State s = initial;
  std::size_t k = 0;
  while (t_end - s.time > eps) {
    double dt = controls.fixed_dt ? *controls.fixed_dt : dt_fn(s);
    if (!(dt > 0.0) || !std::isfinite(dt))
      throw SolverFailure(ErrorCode::NonFinite, "time step is not positive", tr);
    if (s.time + dt > t_end - eps) dt = t_end - s.time;

    State next;
    try {
      next = step_fn(s, dt);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DensityFloor && e.code() != ErrorCode::NonFinite) throw;
      if (tr.back().time < s.time) tr.append(s);
      throw SolverFailure(e.code(), std::string(e.what()) + " at t=" + std::to_string(s.time), tr);
    }
    ++k;
    const bool last = !(t_end - next.time > eps);
    if (last) next.time = t_end;
    if (controls.on_step) controls.on_step(s, next);
    s = std::move(next);
    if (k % controls.diag_every == 0 || last) record(s);
    bool store = last;
    if (by_time) {
      if (s.time >= next_snapshot - eps) {
        store = true;
        while (next_snapshot <= s.time + eps) next_snapshot += controls.snapshot_interval;
      }
    } else if (k % controls.snapshot_every == 0) {
      store = true;
    }
    if (store) {
      tr.append(s);
      if (controls.on_snapshot) controls.on_snapshot(s);
    }
  }
  return tr;
}

}  // namespace mixflow::detail
