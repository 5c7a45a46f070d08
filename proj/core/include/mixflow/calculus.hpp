#pragma once

#include <span>
#include <vector>

#include "mixflow/state.hpp"

namespace mixflow {

/// v = (1/N) sum_i u_i at every node.
std::vector<double> average_velocity(const State& s);

/// Composite trapezoid rule over the grid; exact for affine data.
double integrate(std::span<const double> f, const Grid1D& g);

/// Running trapezoid integral F(x_k) = int_0^{x_k} f.
std::vector<double> cumulative_integral(std::span<const double> f, const Grid1D& g);

/// First derivative: central differences inside, second-order one-sided at the ends.
std::vector<double> diff(std::span<const double> f, const Grid1D& g);

/// Second derivative: three-point stencil inside, second-order four-point at the ends.
std::vector<double> diff2(std::span<const double> f, const Grid1D& g);

/// int f' g' dx evaluated with the forward differences on each cell (midpoint rule).
/// This is the quadrature under which the three-point Laplacian is exactly
/// self-adjoint with homogeneous Dirichlet data.
double integrate_gradient_product(std::span<const double> f, std::span<const double> g,
                                  const Grid1D& grid);

/// Same as integrate_gradient_product with a per-cell weight c_{k+1/2}.
double integrate_weighted_gradient_product(std::span<const double> f, std::span<const double> g,
                                           std::span<const double> cell_weight,
                                           const Grid1D& grid);

/// Harmonic mean of neighbouring node values, one entry per cell.
std::vector<double> harmonic_face_average(std::span<const double> f);

double l2_norm(std::span<const double> f, const Grid1D& g);
double linf_norm(std::span<const double> f);

/// d = int_0^1 rho dx of an Eulerian state.
double total_mass(const State& s);

}  // namespace mixflow
