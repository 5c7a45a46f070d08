#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>
#include <random>

#include "mixflow/euler.hpp"
#include "mixflow/lagrange.hpp"
#include "mixflow/matrix.hpp"
#include "mixflow/model.hpp"

using namespace mixflow;

namespace {

MixtureParams params(std::size_t nc) {
  MixtureParams p;
  p.n_components = nc;
  p.viscosity = Matrix(nc);
  p.friction = Matrix(nc);
  for (std::size_t i = 0; i < nc; ++i)
    for (std::size_t j = 0; j < nc; ++j) {
      p.viscosity(i, j) = i == j ? 0.02 : 0.002;
      p.friction(i, j) = i == j ? 0.0 : 0.5;
    }
  return validate_params(p);
}

State initial(std::size_t cells, std::size_t nc) {
  using std::numbers::pi;
  State s;
  s.grid = Grid1D::make(1.0, cells);
  const auto x = s.grid.nodes();
  s.rho.resize(x.size());
  s.velocity.assign(nc, std::vector<double>(x.size()));
  for (std::size_t k = 0; k < x.size(); ++k) {
    s.rho[k] = 1.0 + 0.2 * std::cos(pi * x[k]);
    for (std::size_t i = 0; i < nc; ++i) s.velocity[i][k] = 0.1 * (i + 1.0) * std::sin((i + 1.0) * pi * x[k]);
  }
  apply_wall_conditions(s);
  return s;
}

void BM_EulerRates(benchmark::State& st) {
  const auto p = params(3);
  const auto d = derive_matrices(p);
  const State s = initial(std::size_t(st.range(0)), 3);
  for (auto _ : st) benchmark::DoNotOptimize(euler::rates(s, p, d));
  st.SetComplexityN(st.range(0));
}
BENCHMARK(BM_EulerRates)->RangeMultiplier(4)->Range(64, 4096)->Complexity(benchmark::oN);

void BM_LagrangeRates(benchmark::State& st) {
  const auto p = params(3);
  const auto d = derive_matrices(p);
  const State s = lagrange::euler_to_lagrange(initial(std::size_t(st.range(0)), 3));
  for (auto _ : st) benchmark::DoNotOptimize(lagrange::rhs_lagrangian(s, p, d));
  st.SetComplexityN(st.range(0));
}
BENCHMARK(BM_LagrangeRates)->RangeMultiplier(4)->Range(64, 4096)->Complexity(benchmark::oN);

void BM_EulerStep(benchmark::State& st) {
  const auto p = params(3);
  const auto d = derive_matrices(p);
  SchemeConfig cfg;
  cfg.integrator = static_cast<Integrator>(st.range(1));
  const State s = initial(std::size_t(st.range(0)), 3);
  for (auto _ : st) benchmark::DoNotOptimize(euler::step(s, p, d, cfg));
}
BENCHMARK(BM_EulerStep)->ArgsProduct({{256, 1024}, {0, 1, 2}});

void BM_LagrangeStep(benchmark::State& st) {
  const auto p = params(3);
  const auto d = derive_matrices(p);
  const State s = lagrange::euler_to_lagrange(initial(std::size_t(st.range(0)), 3));
  for (auto _ : st) benchmark::DoNotOptimize(lagrange::step_lagrangian(s, p, d, SchemeConfig{}));
}
BENCHMARK(BM_LagrangeStep)->Arg(256)->Arg(1024);

void BM_JacobiEigen(benchmark::State& st) {
  const auto n = std::size_t(st.range(0));
  std::mt19937_64 gen(1);
  std::normal_distribution<double> g;
  Matrix b(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b(i, j) = g(gen);
  Matrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double s = i == j ? 1.0 : 0.0;
      for (std::size_t k = 0; k < n; ++k) s += b(i, k) * b(j, k);
      a(i, j) = s;
    }
  for (auto _ : st) benchmark::DoNotOptimize(jacobi_eigen(a));
}
BENCHMARK(BM_JacobiEigen)->DenseRange(2, 8, 2);

}  // namespace

BENCHMARK_MAIN();
