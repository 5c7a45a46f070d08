#pragma once

#include <map>
#include <string>
#include <vector>

#include "mixflow/model.hpp"
#include "mixflow/scheme.hpp"
#include "mixflow/state.hpp"
#include "mixflow/trajectory.hpp"

/// On-disk trajectory layout:
///   manifest.json  frame, grid, times, snapshot files, params and their hash
///   snap_<k>.csv   header x_or_y,rho,u1,...,uN, one row per node
///   diag.csv       one row per diagnostics record
/// Numbers are written in shortest round-trip form with a dot decimal
/// separator, independent of the locale.
namespace mixflow::io {

/// Columns of a CSV file with a header row, keyed by column name, in file order.
struct CsvTable {
  std::vector<std::string> names;
  std::vector<std::vector<double>> columns;

  const std::vector<double>& column(const std::string& name) const;  // FileFormatError if absent
};

CsvTable read_csv(const std::string& path);

void write_snapshot_csv(const std::string& path, const State& s);

/// Rebuilds a state from a snapshot file. The grid length is the last
/// coordinate; nodes must be uniform. Throws FileFormatError.
State read_snapshot_csv(const std::string& path, Frame frame, double time = 0.0);

void write_diagnostics_csv(const std::string& path, const std::vector<DiagnosticsRecord>& records);
std::vector<DiagnosticsRecord> read_diagnostics_csv(const std::string& path);

/// FNV-1a over the canonical text of the parameters, as 16 hex digits.
std::string params_hash(const MixtureParams& p);

struct StoredTrajectory {
  Trajectory trajectory;
  MixtureParams params;
  SchemeConfig scheme;
};

/// Writes manifest, snapshots and diagnostics into dir (created if needed).
void write_trajectory(const std::string& dir, const Trajectory& tr, const MixtureParams& p,
                      const SchemeConfig& scheme);

/// Reads what write_trajectory wrote. Throws FileFormatError on missing files,
/// malformed content or a params hash mismatch.
StoredTrajectory read_trajectory(const std::string& dir);

void write_text(const std::string& path, const std::string& text);

}  // namespace mixflow::io
