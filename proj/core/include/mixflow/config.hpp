#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mixflow/model.hpp"
#include "mixflow/scheme.hpp"

namespace mixflow {

enum class RunFrame { Eulerian, Lagrangian, Both };

std::string_view to_string(RunFrame f);
RunFrame run_frame_from_string(std::string_view s);

/// (wavenumber, amplitude) pair of a Fourier mode.
using Mode = std::pair<double, double>;

/// Initial density. Fields irrelevant to `kind` are ignored.
struct DensityProfile {
  enum class Kind { Constant, Affine, Gaussian, CosineModes, Table };
  Kind kind = Kind::Constant;
  double base = 1.0;       // constant value, affine intercept, bump/mode background
  double slope = 0.0;      // affine: base + slope x
  double amplitude = 0.0;  // gaussian: base + amplitude exp(-(x-center)^2 / (2 width^2))
  double center = 0.5;
  double width = 0.1;
  std::vector<Mode> modes;  // cosine: base + sum a cos(k pi x)
  std::string table;        // snapshot-format CSV, column "rho"

  bool operator==(const DensityProfile&) const = default;
};

/// Initial velocity of one component. Every kind vanishes at the walls.
struct VelocityProfile {
  enum class Kind { Zero, Sine, Random, Table };
  Kind kind = Kind::Zero;
  std::vector<Mode> modes;  // sine: sum a sin(k pi x), integer k >= 1
  std::uint64_t seed = 0;   // random: sum_{k<=n_modes} c_k sin(k pi x), |c_k| <= amplitude / k
  std::size_t n_modes = 4;
  double amplitude = 0.0;
  std::string table;  // snapshot-format CSV, column "u<i>"

  bool operator==(const VelocityProfile&) const = default;
};

struct InitialData {
  DensityProfile rho0;
  std::vector<VelocityProfile> u0;  // one per component

  bool operator==(const InitialData&) const = default;
};

struct RunConfig {
  MixtureParams params;
  SchemeConfig scheme;
  std::size_t n_cells = 128;
  double t_end = 1.0;
  RunFrame frame = RunFrame::Eulerian;
  InitialData initial;
  std::size_t snapshot_every = 1;
  double snapshot_interval = 0.0;
  std::size_t diag_every = 1;
  std::vector<std::string> audit_set;  // empty: every applicable audit
  std::string out_dir = "out";

  bool operator==(const RunConfig&) const = default;
};

/// Parses the sectioned key = value format ([params], [scheme], [initial],
/// [output]). Unknown sections or keys are rejected. Relative table paths are
/// resolved against `base_dir`.
///
/// Throws ParseError (with line and column) for malformed text,
/// BadDimension for mis-sized matrices, ValidationError naming the offending
/// key for every other invariant violation.
RunConfig parse_config(std::string_view text, std::string_view base_dir = {});

/// Reads and parses a file; relative table paths resolve next to it.
RunConfig load_config(const std::string& path);

/// Checks cross-field invariants (t_end <= T_final, n_cells >= 8, one velocity
/// profile per component, known audit names, ...). Returns the config unchanged.
RunConfig validate_config(const RunConfig& c);

/// Text that parse_config maps back to an equal RunConfig.
std::string serialize_config(const RunConfig& c);

/// Same format for the [params] section alone (used in manifests).
std::string serialize_params(const MixtureParams& p);

/// Shortest decimal text that reads back to the same double.
std::string format_double(double x);

}  // namespace mixflow
