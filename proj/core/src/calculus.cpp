#include "mixflow/calculus.hpp"

#include <algorithm>
#include <cmath>

#include "mixflow/error.hpp"

namespace mixflow {
namespace {

void require_length(std::size_t got, const Grid1D& g) {
  if (got != g.n_nodes())
    throw Error(ErrorCode::LengthMismatch, "array has " + std::to_string(got) +
                                               " entries, grid has " + std::to_string(g.n_nodes()) +
                                               " nodes");
}

}  // namespace

std::vector<double> average_velocity(const State& s) {
  const std::size_t n = s.n_components();
  std::vector<double> v(s.n_nodes(), 0.0);
  for (const auto& u : s.velocity)
    for (std::size_t k = 0; k < v.size(); ++k) v[k] += u[k];
  for (double& x : v) x /= double(n);
  return v;
}

double integrate(std::span<const double> f, const Grid1D& g) {
  require_length(f.size(), g);
  double s = 0.5 * (f.front() + f.back());
  for (std::size_t k = 1; k + 1 < f.size(); ++k) s += f[k];
  return s * g.spacing();
}

std::vector<double> cumulative_integral(std::span<const double> f, const Grid1D& g) {
  require_length(f.size(), g);
  const double h = g.spacing();
  std::vector<double> out(f.size(), 0.0);
  for (std::size_t k = 1; k < f.size(); ++k) out[k] = out[k - 1] + 0.5 * h * (f[k - 1] + f[k]);
  return out;
}

std::vector<double> diff(std::span<const double> f, const Grid1D& g) {
  require_length(f.size(), g);
  const std::size_t n = f.size();
  const double h = g.spacing();
  std::vector<double> d(n);
  for (std::size_t k = 1; k + 1 < n; ++k) d[k] = (f[k + 1] - f[k - 1]) / (2.0 * h);
  d[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * h);
  d[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) / (2.0 * h);
  return d;
}

std::vector<double> diff2(std::span<const double> f, const Grid1D& g) {
  require_length(f.size(), g);
  const std::size_t n = f.size();
  const double h2 = g.spacing() * g.spacing();
  std::vector<double> d(n);
  for (std::size_t k = 1; k + 1 < n; ++k) d[k] = (f[k + 1] - 2.0 * f[k] + f[k - 1]) / h2;
  d[0] = (2.0 * f[0] - 5.0 * f[1] + 4.0 * f[2] - f[3]) / h2;
  d[n - 1] = (2.0 * f[n - 1] - 5.0 * f[n - 2] + 4.0 * f[n - 3] - f[n - 4]) / h2;
  return d;
}

double integrate_gradient_product(std::span<const double> f, std::span<const double> g,
                                  const Grid1D& grid) {
  require_length(f.size(), grid);
  require_length(g.size(), grid);
  const double h = grid.spacing();
  double s = 0.0;
  for (std::size_t k = 0; k + 1 < f.size(); ++k) s += (f[k + 1] - f[k]) * (g[k + 1] - g[k]);
  return s / h;
}

double integrate_weighted_gradient_product(std::span<const double> f, std::span<const double> g,
                                           std::span<const double> cell_weight,
                                           const Grid1D& grid) {
  require_length(f.size(), grid);
  require_length(g.size(), grid);
  if (cell_weight.size() != grid.n_cells)
    throw Error(ErrorCode::LengthMismatch, "cell weights must have one entry per cell");
  const double h = grid.spacing();
  double s = 0.0;
  for (std::size_t k = 0; k + 1 < f.size(); ++k)
    s += cell_weight[k] * (f[k + 1] - f[k]) * (g[k + 1] - g[k]);
  return s / h;
}

std::vector<double> harmonic_face_average(std::span<const double> f) {
  std::vector<double> out(f.size() > 0 ? f.size() - 1 : 0);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = 2.0 * f[k] * f[k + 1] / (f[k] + f[k + 1]);
  return out;
}

double l2_norm(std::span<const double> f, const Grid1D& g) {
  require_length(f.size(), g);
  std::vector<double> sq(f.size());
  std::transform(f.begin(), f.end(), sq.begin(), [](double x) { return x * x; });
  return std::sqrt(integrate(sq, g));
}

double linf_norm(std::span<const double> f) {
  double m = 0.0;
  for (double x : f) m = std::max(m, std::abs(x));
  return m;
}

double total_mass(const State& s) {
  require_frame(s, Frame::Eulerian, "total_mass");
  return integrate(s.rho, s.grid);
}

}  // namespace mixflow
