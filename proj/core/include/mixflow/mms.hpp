#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mixflow/model.hpp"
#include "mixflow/scheme.hpp"
#include "mixflow/state.hpp"

/// Manufactured solutions for both formulations.
///
/// Eulerian, on (0,1):    rho* = 2 + sin(2 pi x) cos(t) / 2,  u_i* = b_i sin(pi x) cos(t)
/// Lagrangian, on (0,d):  the same profiles in s = y/d, with d = mms_mass_length
/// where b_i = 0.5 (-0.6)^i (i from 0). The sources are the residuals of the
/// continuum equations at these fields, written out by hand; the derivation is
/// in docs/mms.md.
namespace mixflow::mms {

inline constexpr double mms_mass_length = 2.0;

/// Amplitude b_i of component i.
double amplitude(std::size_t i);

/// Parameters used by the default study: N = 2, K = 1, gamma = 1.4,
/// M = [[0.2, 0.05], [0.05, 0.15]], a_12 = 1.5, T = 0.5.
MixtureParams default_params();

/// Exact fields at time t on a grid with n_cells cells.
State exact_state(Frame frame, std::size_t n_cells, std::size_t n_components, double t);

/// Source terms at one point: [rho source, u_1 source, ..., u_N source].
std::vector<double> source(Frame frame, const MixtureParams& p, double coord, double t);

/// Forcing that adds the sources to the solver tendencies.
Forcing forcing(Frame frame, const MixtureParams& p);

struct Level {
  std::size_t n_cells = 0;
  double h = 0.0;
  std::size_t steps = 0;
  double error_rho = 0.0;
  double error_u = 0.0;
  double error = 0.0;  // sqrt(error_rho^2 + error_u^2)
};

struct Study {
  Frame frame = Frame::Eulerian;
  SchemeConfig scheme;
  std::vector<Level> levels;
  double order = 0.0;         // least-squares slope of log(error) against log(h)
  double design_order = 2.0;  // 1 with upwind convection or Lax-Friedrichs dissipation, else 2
  bool pass = false;          // order >= design_order - 0.3
};

/// Runs the manufactured problem to t_end at each resolution.
Study mms_study(const MixtureParams& p, const SchemeConfig& cfg, Frame frame,
                const std::vector<std::size_t>& levels, double t_end = 0.5);

/// Least-squares slope of log(e) against log(h).
double observed_order(const std::vector<double>& h, const std::vector<double>& e);

std::string to_table(const Study& s);

}  // namespace mixflow::mms
