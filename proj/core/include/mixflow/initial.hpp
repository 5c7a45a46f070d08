#pragma once

#include <cstdint>
#include <vector>

#include "mixflow/config.hpp"
#include "mixflow/state.hpp"

namespace mixflow {

/// Samples the descriptor on the Eulerian grid of (0,1) at t = 0. Velocities
/// are pinned to zero at the walls. Throws NonPositiveDensity if the sampled
/// density is not strictly positive, FileFormatError for unreadable tables.
State make_initial(const InitialData& data, const Grid1D& grid);

/// Coefficients c_k of the random velocity profile sum_k c_k sin(k pi x).
/// Deterministic in the seed on every platform.
std::vector<double> random_sine_coefficients(std::uint64_t seed, std::size_t n_modes, double amplitude);

}  // namespace mixflow
