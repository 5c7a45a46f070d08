#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "mixflow/error.hpp"
#include "mixflow/euler.hpp"
#include "mixflow/io.hpp"

using namespace mixflow;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("mixflow_io_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

MixtureParams params() {
  MixtureParams p;
  p.viscosity = Matrix::from_rows({{0.05, 0.01}, {0.01, 0.04}});
  p.friction = Matrix::from_rows({{0.0, 0.7}, {0.7, 0.0}});
  return p;
}

State wavy(std::size_t n) {
  State s;
  s.grid = Grid1D::make(1.0, n);
  const auto x = s.grid.nodes();
  s.rho.resize(n + 1);
  s.velocity.assign(2, std::vector<double>(n + 1));
  for (std::size_t k = 0; k <= n; ++k) {
    s.rho[k] = 1.0 + 0.2 * std::cos(std::numbers::pi * x[k]) + 1e-17 * k;
    s.velocity[0][k] = 0.1 * std::sin(std::numbers::pi * x[k]) / 3.0;
    s.velocity[1][k] = -0.05 * std::sin(2 * std::numbers::pi * x[k]);
  }
  s.velocity[0].front() = s.velocity[0].back() = s.velocity[1].front() = s.velocity[1].back() = 0.0;
  return s;
}

Trajectory simulate(std::size_t n) {
  const MixtureParams p = params();
  RunControls rc;
  rc.snapshot_every = 5;
  return euler::run(wavy(n), p, derive_matrices(p), SchemeConfig{}, 0.05, rc);
}

}  // namespace

TEST(Snapshot, BitExactRoundTrip) {
  const auto dir = scratch("snap");
  const State s = wavy(32);
  io::write_snapshot_csv((dir / "s.csv").string(), s);
  const State r = io::read_snapshot_csv((dir / "s.csv").string(), Frame::Eulerian, 0.0);
  EXPECT_EQ(r.rho, s.rho);
  EXPECT_EQ(r.velocity, s.velocity);
  EXPECT_EQ(r.grid.n_cells, 32u);
  EXPECT_DOUBLE_EQ(r.grid.length, 1.0);
  const auto t = io::read_csv((dir / "s.csv").string());
  EXPECT_EQ(t.names, (std::vector<std::string>{"x_or_y", "rho", "u1", "u2"}));
  EXPECT_THROW(t.column("u3"), Error);
}

TEST(Snapshot, MalformedFilesRejected) {
  const auto dir = scratch("bad");
  io::write_text((dir / "a.csv").string(), "x_or_y,rho,u1\n0,1,0\n0.5,abc,0\n1,1,0\n");
  try {
    io::read_snapshot_csv((dir / "a.csv").string(), Frame::Eulerian);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::FileFormatError);
  }
  io::write_text((dir / "b.csv").string(), "x_or_y,rho,u1\n0,1,0\n0.5,1\n1,1,0\n");
  EXPECT_THROW(io::read_snapshot_csv((dir / "b.csv").string(), Frame::Eulerian), Error);
  EXPECT_THROW(io::read_csv((dir / "missing.csv").string()), Error);
}

TEST(Diagnostics, RoundTrip) {
  const auto dir = scratch("diag");
  std::vector<DiagnosticsRecord> recs(3);
  for (std::size_t k = 0; k < recs.size(); ++k) {
    recs[k].time = 0.1 * k;
    recs[k].energy = 1.0 / (k + 3.0);
    recs[k].rho_min = std::nextafter(1.0, 0.0);
  }
  io::write_diagnostics_csv((dir / "d.csv").string(), recs);
  EXPECT_EQ(io::read_diagnostics_csv((dir / "d.csv").string()), recs);
}

TEST(Trajectory, WriteReadRoundTrip) {
  const auto dir = scratch("traj");
  const Trajectory tr = simulate(32);
  const MixtureParams p = params();
  io::write_trajectory(dir.string(), tr, p, SchemeConfig{});
  const auto st = io::read_trajectory(dir.string());
  EXPECT_EQ(st.params, p);
  EXPECT_EQ(st.scheme, SchemeConfig{});
  ASSERT_EQ(st.trajectory.states.size(), tr.states.size());
  for (std::size_t k = 0; k < tr.states.size(); ++k) {
    EXPECT_EQ(st.trajectory.states[k].time, tr.states[k].time);
    EXPECT_EQ(st.trajectory.states[k].rho, tr.states[k].rho);
    EXPECT_EQ(st.trajectory.states[k].velocity, tr.states[k].velocity);
  }
  EXPECT_EQ(st.trajectory.records, tr.records);
}

TEST(Trajectory, ParamsHashMismatchRejected) {
  const auto dir = scratch("hash");
  io::write_trajectory(dir.string(), simulate(16), params(), SchemeConfig{});
  std::string m = slurp(dir / "manifest.json");
  const auto pos = m.find("\"gamma\": 1.4");
  ASSERT_NE(pos, std::string::npos);
  m.replace(pos, 12, "\"gamma\": 1.5");
  io::write_text((dir / "manifest.json").string(), m);
  try {
    io::read_trajectory(dir.string());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::FileFormatError);
  }
}

TEST(Trajectory, MissingSnapshotRejected) {
  const auto dir = scratch("missing");
  io::write_trajectory(dir.string(), simulate(16), params(), SchemeConfig{});
  fs::remove(dir / "snap_1.csv");
  EXPECT_THROW(io::read_trajectory(dir.string()), Error);
}

TEST(Trajectory, RepeatedRunsWriteIdenticalFiles) {
  const auto a = scratch("det_a"), b = scratch("det_b");
  io::write_trajectory(a.string(), simulate(32), params(), SchemeConfig{});
  io::write_trajectory(b.string(), simulate(32), params(), SchemeConfig{});
  std::size_t files = 0;
  for (const auto& entry : fs::directory_iterator(a)) {
    EXPECT_EQ(slurp(entry.path()), slurp(b / entry.path().filename())) << entry.path();
    ++files;
  }
  EXPECT_GT(files, 3u);
}

TEST(ParamsHash, SensitiveToEveryField) {
  const MixtureParams p = params();
  const std::string h = io::params_hash(p);
  EXPECT_EQ(h.size(), 16u);
  EXPECT_EQ(io::params_hash(p), h);
  MixtureParams q = p;
  q.t_final = 2.0;
  EXPECT_NE(io::params_hash(q), h);
  q = p;
  q.friction(0, 1) = q.friction(1, 0) = 0.71;
  EXPECT_NE(io::params_hash(q), h);
}
