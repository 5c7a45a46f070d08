// Command-line front end: run, check, mms, report, transform.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mixflow/config.hpp"
#include "mixflow/driver.hpp"
#include "mixflow/error.hpp"
#include "mixflow/mms.hpp"
#include "mixflow/trajectory.hpp"

namespace {

using namespace mixflow;

/// "rk4", "central" or a comma-separated mix of integrator and advection names.
void apply_scheme(SchemeConfig& s, const std::string& names) {
  std::stringstream ss(names);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      s.integrator = integrator_from_string(tok);
      continue;
    } catch (const Error&) {
    }
    s.advection = advection_from_string(tok);
  }
}

struct Overrides {
  std::string out_dir, frame, scheme;
  std::size_t n_cells = 0;
  double t_end = 0.0, cfl = 0.0;
};

void add_overrides(CLI::App* app, Overrides& o) {
  app->add_option("--out-dir", o.out_dir, "Output directory");
  app->add_option("--frame", o.frame, "eulerian | lagrangian | both");
  app->add_option("--n-cells", o.n_cells, "Grid cells");
  app->add_option("--t-end", o.t_end, "Final time");
  app->add_option("--scheme", o.scheme, "Integrator and/or advection, e.g. rk4,central");
  app->add_option("--cfl", o.cfl, "Courant number");
}

RunConfig apply(RunConfig c, const Overrides& o) {
  if (!o.out_dir.empty()) c.out_dir = o.out_dir;
  if (!o.frame.empty()) c.frame = run_frame_from_string(o.frame);
  if (o.n_cells) c.n_cells = o.n_cells;
  if (o.t_end > 0.0) c.t_end = o.t_end;
  if (!o.scheme.empty()) apply_scheme(c.scheme, o.scheme);
  if (o.cfl > 0.0) c.scheme.cfl = o.cfl;
  return validate_config(c);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mixflow: multi-velocity compressible mixture simulator and estimate auditor"};
  app.require_subcommand(1);

  Overrides run_o;
  std::string run_config;
  auto* run = app.add_subcommand("run", "Simulate a configuration and audit the result");
  run->add_option("--config", run_config, "Configuration file")->required();
  add_overrides(run, run_o);

  std::string check_dir;
  auto* check = app.add_subcommand("check", "Audit a stored trajectory");
  check->add_option("--traj,traj", check_dir, "Trajectory directory")->required();

  Overrides mms_o;
  std::string mms_config;
  std::vector<std::size_t> levels{32, 64, 128};
  auto* mms_cmd = app.add_subcommand("mms", "Manufactured-solution convergence study");
  mms_cmd->add_option("--config", mms_config, "Configuration providing params and scheme (optional)");
  mms_cmd->add_option("--levels", levels, "Grid cells per level")->delimiter(',');
  add_overrides(mms_cmd, mms_o);

  std::string report_dir, plot_dir;
  auto* report = app.add_subcommand("report", "Write SVG plots of a stored trajectory");
  report->add_option("--traj,traj", report_dir, "Trajectory directory")->required();
  report->add_option("--out-dir", plot_dir, "Plot directory (default <traj>/plots)");

  std::string t_in, t_out, t_from = "eulerian";
  auto* transform = app.add_subcommand("transform", "Map a snapshot between Eulerian and Lagrangian frames");
  transform->add_option("--input", t_in, "Snapshot CSV")->required();
  transform->add_option("--output", t_out, "Output CSV")->required();
  transform->add_option("--from", t_from, "Frame of the input: eulerian | lagrangian");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : driver::UsageError;
  }

  try {
    if (*run) return driver::run(apply(load_config(run_config), run_o), std::cout, std::cerr);
    if (*check) return driver::check(check_dir, std::cout, std::cerr);
    if (*mms_cmd) {
      MixtureParams p = mms::default_params();
      SchemeConfig scheme;
      scheme.advection = Advection::Central2;
      RunFrame frame = RunFrame::Both;
      double t_end = p.t_final;
      std::string out_dir;
      if (!mms_config.empty()) {
        const RunConfig c = load_config(mms_config);
        p = c.params;
        scheme = c.scheme;
        t_end = c.t_end;
      }
      if (!mms_o.scheme.empty()) apply_scheme(scheme, mms_o.scheme);
      if (mms_o.cfl > 0.0) scheme.cfl = mms_o.cfl;
      if (!mms_o.frame.empty()) frame = run_frame_from_string(mms_o.frame);
      if (mms_o.t_end > 0.0) t_end = mms_o.t_end;
      if (mms_o.n_cells) levels = {mms_o.n_cells, 2 * mms_o.n_cells, 4 * mms_o.n_cells};
      out_dir = mms_o.out_dir;
      return driver::mms(p, validate_scheme(scheme), frame, levels, t_end, out_dir, std::cout, std::cerr);
    }
    if (*report)
      return driver::report(report_dir, plot_dir.empty() ? report_dir + "/plots" : plot_dir, std::cout,
                            std::cerr);
    if (*transform) return driver::transform(t_in, frame_from_string(t_from), t_out, std::cout, std::cerr);
  } catch (const SolverFailure& e) {
    std::cerr << "solver failure: " << e.what() << "\n";
    return driver::BlowUp;
  } catch (const ParseError& e) {
    std::cerr << "config error at line " << e.line() << ", column " << e.column() << ": " << e.what() << "\n";
    return driver::UsageError;
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return driver::UsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return driver::UsageError;
  }
  return driver::UsageError;
}
