#include "mixflow/initial.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "mixflow/error.hpp"
#include "mixflow/interpolation.hpp"
#include "mixflow/io.hpp"

namespace mixflow {
namespace {

std::vector<double> from_table(const std::string& path, const std::string& column,
                               const std::vector<double>& x) {
  const auto t = io::read_csv(path);
  const auto& xs = t.column("x_or_y");
  const auto& f = t.column(column);
  if (xs.size() < 2 || std::abs(xs.back() - 1.0) > 1e-12 || xs.front() != 0.0)
    throw Error(ErrorCode::FileFormatError, path + ": table must cover the interval (0,1)");
  return MonotoneCubic(xs, f)(x);
}

std::vector<double> sample_density(const DensityProfile& d, const std::vector<double>& x) {
  using K = DensityProfile::Kind;
  std::vector<double> rho(x.size());
  if (d.kind == K::Table) return from_table(d.table, "rho", x);
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double xv = x[k];
    switch (d.kind) {
      case K::Constant: rho[k] = d.base; break;
      case K::Affine: rho[k] = d.base + d.slope * xv; break;
      case K::Gaussian: {
        const double z = (xv - d.center) / d.width;
        rho[k] = d.base + d.amplitude * std::exp(-0.5 * z * z);
        break;
      }
      case K::CosineModes: {
        double r = d.base;
        for (const auto& [kk, a] : d.modes) r += a * std::cos(kk * std::numbers::pi * xv);
        rho[k] = r;
        break;
      }
      case K::Table: break;
    }
  }
  return rho;
}

std::vector<double> sine_series(const std::vector<Mode>& modes, const std::vector<double>& x) {
  std::vector<double> u(x.size(), 0.0);
  for (std::size_t k = 0; k < x.size(); ++k)
    for (const auto& [kk, a] : modes) u[k] += a * std::sin(kk * std::numbers::pi * x[k]);
  return u;
}

}  // namespace

std::vector<double> random_sine_coefficients(std::uint64_t seed, std::size_t n_modes, double amplitude) {
  std::mt19937_64 gen(seed);
  std::vector<double> c(n_modes);
  for (std::size_t k = 0; k < n_modes; ++k) {
    // Top 53 bits to [0,1); avoids the implementation-defined distributions.
    const double unit = double(gen() >> 11) * 0x1.0p-53;
    c[k] = amplitude * (2.0 * unit - 1.0) / double(k + 1);
  }
  return c;
}

State make_initial(const InitialData& data, const Grid1D& grid) {
  const auto x = grid.nodes();
  State s;
  s.grid = grid;
  s.frame = Frame::Eulerian;
  s.rho = sample_density(data.rho0, x);
  for (std::size_t k = 0; k < x.size(); ++k)
    if (!(s.rho[k] > 0.0) || !std::isfinite(s.rho[k]))
      throw Error(ErrorCode::NonPositiveDensity,
                  "initial density " + std::to_string(s.rho[k]) + " at x=" + std::to_string(x[k]));

  for (std::size_t i = 0; i < data.u0.size(); ++i) {
    const auto& u = data.u0[i];
    using K = VelocityProfile::Kind;
    switch (u.kind) {
      case K::Zero: s.velocity.emplace_back(x.size(), 0.0); break;
      case K::Sine: s.velocity.push_back(sine_series(u.modes, x)); break;
      case K::Random: {
        const auto c = random_sine_coefficients(u.seed, u.n_modes, u.amplitude);
        std::vector<Mode> modes;
        for (std::size_t k = 0; k < c.size(); ++k) modes.emplace_back(double(k + 1), c[k]);
        s.velocity.push_back(sine_series(modes, x));
        break;
      }
      case K::Table: s.velocity.push_back(from_table(u.table, "u" + std::to_string(i + 1), x)); break;
    }
  }
  apply_wall_conditions(s);
  return s;
}

}  // namespace mixflow
