#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "mixflow/config.hpp"

/// The operations behind the command-line verbs. Each returns a process exit
/// code and writes human-readable progress to `out`, problems to `err`.
namespace mixflow::driver {

enum ExitCode : int { Ok = 0, AuditFail = 1, UsageError = 2, BlowUp = 3 };

RunControls controls_for(const RunConfig& c);

/// Simulates, writes the trajectory (plus report.json) and audits it. With
/// frame "both" the two formulations go to <out_dir>/eulerian and
/// <out_dir>/lagrangian, the latter started from the transformed initial data.
int run(const RunConfig& c, std::ostream& out, std::ostream& err);

/// Audits stored trajectories in dir (or in its eulerian/ and lagrangian/
/// subdirectories). Read-only.
int check(const std::string& dir, std::ostream& out, std::ostream& err);

/// Manufactured-solution convergence table per requested frame.
int mms(const MixtureParams& p, const SchemeConfig& scheme, RunFrame frame,
        const std::vector<std::size_t>& levels, double t_end, const std::string& out_dir,
        std::ostream& out, std::ostream& err);

/// SVG plots of the diagnostics time series and of the final profiles,
/// written to plot_dir. Trajectory files are only read.
int report(const std::string& dir, const std::string& plot_dir, std::ostream& out, std::ostream& err);

/// Maps one snapshot file between the frames.
int transform(const std::string& input, Frame from, const std::string& output, std::ostream& out,
              std::ostream& err);

}  // namespace mixflow::driver
