#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "mixflow/config.hpp"
#include "mixflow/driver.hpp"
#include "mixflow/io.hpp"
#include "mixflow/mms.hpp"

using namespace mixflow;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("mixflow_driver_" + name);
  fs::remove_all(p);
  return p;
}

RunConfig small_config(const fs::path& out_dir, RunFrame frame) {
  RunConfig c = load_config((fs::path(MIXFLOW_SCENARIO_DIR) / "shear.toml").string());
  c.n_cells = 32;
  c.t_end = 0.1;
  c.snapshot_interval = 0.02;
  c.frame = frame;
  c.out_dir = out_dir.string();
  return c;
}

std::map<std::string, std::string> snapshot_dir(const fs::path& dir) {
  std::map<std::string, std::string> files;
  for (const auto& e : fs::recursive_directory_iterator(dir)) {
    if (!e.is_regular_file()) continue;
    std::ifstream in(e.path(), std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    files[fs::relative(e.path(), dir).string()] = ss.str();
  }
  return files;
}

}  // namespace

TEST(Driver, RunBothThenCheck) {
  const auto dir = scratch("both");
  std::ostringstream out, err;
  EXPECT_EQ(driver::run(small_config(dir, RunFrame::Both), out, err), driver::Ok) << out.str() << err.str();
  for (const char* sub : {"eulerian", "lagrangian"}) {
    EXPECT_TRUE(fs::exists(dir / sub / "manifest.json"));
    EXPECT_TRUE(fs::exists(dir / sub / "report.json"));
    EXPECT_TRUE(fs::exists(dir / sub / "diag.csv"));
  }
  EXPECT_EQ(io::read_trajectory((dir / "lagrangian").string()).trajectory.frame, Frame::Lagrangian);
  EXPECT_EQ(driver::check(dir.string(), out, err), driver::Ok) << out.str();
}

TEST(Driver, CheckDetectsTamperedEnergy) {
  const auto dir = scratch("tamper");
  std::ostringstream out, err;
  ASSERT_EQ(driver::run(small_config(dir, RunFrame::Eulerian), out, err), driver::Ok);
  auto recs = io::read_diagnostics_csv((dir / "diag.csv").string());
  recs.back().energy *= 1.01;
  io::write_diagnostics_csv((dir / "diag.csv").string(), recs);
  EXPECT_EQ(driver::check(dir.string(), out, err), driver::AuditFail);
}

TEST(Driver, CheckWithoutTrajectoryIsUsageError) {
  const auto dir = scratch("empty");
  fs::create_directories(dir);
  std::ostringstream out, err;
  EXPECT_EQ(driver::check(dir.string(), out, err), driver::UsageError);
  EXPECT_EQ(driver::report(dir.string(), (dir / "plots").string(), out, err), driver::UsageError);
}

TEST(Driver, ReportLeavesTrajectoryUntouched) {
  const auto dir = scratch("report");
  std::ostringstream out, err;
  ASSERT_EQ(driver::run(small_config(dir, RunFrame::Eulerian), out, err), driver::Ok);
  const auto before = snapshot_dir(dir);
  const auto plots = scratch("report_plots");
  EXPECT_EQ(driver::report(dir.string(), plots.string(), out, err), driver::Ok);
  EXPECT_EQ(snapshot_dir(dir), before);
  EXPECT_TRUE(fs::exists(plots / "diag_energy.svg"));
  EXPECT_TRUE(fs::exists(plots / "profiles_final.svg"));
}

TEST(Driver, TransformRoundTrip) {
  const auto dir = scratch("transform");
  std::ostringstream out, err;
  RunConfig c = small_config(dir, RunFrame::Eulerian);
  c.n_cells = 64;
  ASSERT_EQ(driver::run(c, out, err), driver::Ok);
  const auto src = (dir / "snap_0.csv").string();
  const auto lag = (dir / "lag.csv").string();
  const auto back = (dir / "back.csv").string();
  EXPECT_EQ(driver::transform(src, Frame::Eulerian, lag, out, err), driver::Ok);
  EXPECT_EQ(driver::transform(lag, Frame::Lagrangian, back, out, err), driver::Ok);
  const State a = io::read_snapshot_csv(src, Frame::Eulerian);
  const State b = io::read_snapshot_csv(back, Frame::Eulerian);
  ASSERT_EQ(a.rho.size(), b.rho.size());
  for (std::size_t k = 0; k < a.rho.size(); ++k) {
    EXPECT_NEAR(a.rho[k], b.rho[k], 1e-3);
    EXPECT_NEAR(a.velocity[1][k], b.velocity[1][k], 1e-3);
  }
}

TEST(Driver, MmsWritesTables) {
  const auto dir = scratch("mms");
  SchemeConfig cfg;
  cfg.advection = Advection::Central2;
  std::ostringstream out, err;
  EXPECT_EQ(driver::mms(mms::default_params(), cfg, RunFrame::Eulerian, {16, 32, 64}, 0.1, dir.string(), out, err),
            driver::Ok);
  EXPECT_TRUE(fs::exists(dir / "mms_eulerian.txt"));
}
