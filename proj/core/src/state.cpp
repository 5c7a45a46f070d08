#include "mixflow/state.hpp"

#include <cmath>
#include <string>

#include "mixflow/error.hpp"

namespace mixflow {

std::string_view to_string(Frame f) { return f == Frame::Eulerian ? "eulerian" : "lagrangian"; }

Frame frame_from_string(std::string_view s) {
  if (s == "eulerian") return Frame::Eulerian;
  if (s == "lagrangian") return Frame::Lagrangian;
  throw Error(ErrorCode::InvalidArgument, "unknown frame '" + std::string(s) + "'");
}

Grid1D Grid1D::make(double length, std::size_t n_cells) {
  if (!(length > 0.0) || !std::isfinite(length))
    throw Error(ErrorCode::InvalidArgument, "grid length must be positive");
  if (n_cells < min_cells)
    throw Error(ErrorCode::InvalidArgument,
                "grid needs at least " + std::to_string(min_cells) + " cells");
  return Grid1D{length, n_cells};
}

std::vector<double> Grid1D::nodes() const {
  std::vector<double> x(n_nodes());
  for (std::size_t k = 0; k < x.size(); ++k) x[k] = node(k);
  return x;
}

void check_state(const State& s, double density_floor) {
  const std::size_t n = s.grid.n_nodes();
  if (s.rho.size() != n) throw Error(ErrorCode::LengthMismatch, "density array length != grid nodes");
  if (s.velocity.empty()) throw Error(ErrorCode::InvalidArgument, "state has no velocity components");
  for (const auto& u : s.velocity)
    if (u.size() != n) throw Error(ErrorCode::LengthMismatch, "velocity array length != grid nodes");

  for (std::size_t k = 0; k < n; ++k) {
    if (!std::isfinite(s.rho[k])) throw Error(ErrorCode::NonFinite, "density is not finite");
    if (!(s.rho[k] > density_floor))
      throw Error(ErrorCode::DensityFloor, "density " + std::to_string(s.rho[k]) + " at node " +
                                               std::to_string(k) + " is below the floor");
  }
  for (const auto& u : s.velocity) {
    for (double x : u)
      if (!std::isfinite(x)) throw Error(ErrorCode::NonFinite, "velocity is not finite");
    if (u.front() != 0.0 || u.back() != 0.0)
      throw Error(ErrorCode::InvalidArgument, "velocity does not vanish at the walls");
  }
}

void apply_wall_conditions(State& s) {
  for (auto& u : s.velocity) {
    u.front() = 0.0;
    u.back() = 0.0;
  }
}

void require_frame(const State& s, Frame expected, std::string_view what) {
  if (s.frame != expected)
    throw Error(ErrorCode::WrongFrame, std::string(what) + " expects a " +
                                           std::string(to_string(expected)) + " state");
}

}  // namespace mixflow
