#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace mixflow {

enum class Frame { Eulerian, Lagrangian };

std::string_view to_string(Frame f);
Frame frame_from_string(std::string_view s);

/// Uniform node-centred grid on (0, length). Eulerian runs use length 1,
/// Lagrangian runs use the total mass d.
struct Grid1D {
  double length = 1.0;
  std::size_t n_cells = 8;

  static constexpr std::size_t min_cells = 8;

  /// Throws InvalidArgument for length <= 0 or n_cells < min_cells.
  static Grid1D make(double length, std::size_t n_cells);

  double spacing() const noexcept { return length / double(n_cells); }
  std::size_t n_nodes() const noexcept { return n_cells + 1; }
  double node(std::size_t k) const noexcept { return length * double(k) / double(n_cells); }
  std::vector<double> nodes() const;

  bool operator==(const Grid1D&) const = default;
};

/// Density and the N component velocities sampled at the grid nodes.
struct State {
  double time = 0.0;
  Grid1D grid;
  Frame frame = Frame::Eulerian;
  std::vector<double> rho;
  std::vector<std::vector<double>> velocity;  // velocity[i][k]: component i, node k

  std::size_t n_components() const noexcept { return velocity.size(); }
  std::size_t n_nodes() const noexcept { return rho.size(); }

  bool operator==(const State&) const = default;
};

/// Checks array lengths, positivity of rho (> floor), finiteness and the
/// no-slip walls. Throws LengthMismatch, DensityFloor, NonFinite or
/// InvalidArgument.
void check_state(const State& s, double density_floor = 1e-12);

/// Pins every velocity to exactly zero at both walls.
void apply_wall_conditions(State& s);

void require_frame(const State& s, Frame expected, std::string_view what);

}  // namespace mixflow
