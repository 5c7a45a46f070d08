#include "mixflow/driver.hpp"

#include <algorithm>
#include <filesystem>

#include "mixflow/error.hpp"
#include "mixflow/estimates.hpp"
#include "mixflow/euler.hpp"
#include "mixflow/initial.hpp"
#include "mixflow/io.hpp"
#include "mixflow/lagrange.hpp"
#include "mixflow/mms.hpp"
#include "mixflow/svg.hpp"

namespace mixflow::driver {
namespace {

namespace fs = std::filesystem;

std::string join(const std::string& a, const std::string& b) { return (fs::path(a) / b).string(); }

/// Audits and writes report.json; returns Ok or AuditFail.
int audit_and_report(const Trajectory& tr, const MixtureParams& p, const DerivedMatrices& d,
                     const std::vector<std::string>& audits, const std::string& dir, bool write,
                     std::ostream& out) {
  const auto report = estimates::build_report(tr, p, d, audits);
  if (write) io::write_text(join(dir, "report.json"), estimates::to_json(report));
  out << "[" << to_string(tr.frame) << "] " << dir << "\n" << estimates::to_table(report);
  return report.all_pass() ? Ok : AuditFail;
}

int worst(int a, int b) {
  if (a == BlowUp || b == BlowUp) return BlowUp;
  return std::max(a, b);
}

bool has_manifest(const std::string& dir) { return fs::exists(join(dir, "manifest.json")); }

}  // namespace

RunControls controls_for(const RunConfig& c) {
  RunControls r;
  r.snapshot_every = c.snapshot_every;
  r.snapshot_interval = c.snapshot_interval;
  r.diag_every = c.diag_every;
  return r;
}

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const RunConfig cfg = validate_config(c);
  const MixtureParams p = validate_params(cfg.params);
  const DerivedMatrices d = derive_matrices(p);
  const State init = make_initial(cfg.initial, Grid1D::make(1.0, cfg.n_cells));
  const RunControls controls = controls_for(cfg);

  int code = Ok;
  auto one = [&](Frame frame, const std::string& dir) {
    try {
      const Trajectory tr =
          frame == Frame::Eulerian
              ? euler::run(init, p, d, cfg.scheme, cfg.t_end, controls)
              : lagrange::run_lagrangian(lagrange::euler_to_lagrange(init), p, d, cfg.scheme, cfg.t_end, controls);
      io::write_trajectory(dir, tr, p, cfg.scheme);
      code = worst(code, audit_and_report(tr, p, d, cfg.audit_set, dir, true, out));
    } catch (const SolverFailure& e) {
      io::write_trajectory(dir, e.partial(), p, cfg.scheme);
      err << "solver failure (" << to_string(e.code()) << "): " << e.what() << "\n";
      code = BlowUp;
    }
  };
  switch (cfg.frame) {
    case RunFrame::Eulerian: one(Frame::Eulerian, cfg.out_dir); break;
    case RunFrame::Lagrangian: one(Frame::Lagrangian, cfg.out_dir); break;
    case RunFrame::Both:
      one(Frame::Eulerian, join(cfg.out_dir, "eulerian"));
      one(Frame::Lagrangian, join(cfg.out_dir, "lagrangian"));
      break;
  }
  return code;
}

int check(const std::string& dir, std::ostream& out, std::ostream& err) {
  std::vector<std::string> dirs;
  if (has_manifest(dir)) dirs.push_back(dir);
  for (const char* sub : {"eulerian", "lagrangian"})
    if (has_manifest(join(dir, sub))) dirs.push_back(join(dir, sub));
  if (dirs.empty()) {
    err << "no trajectory (manifest.json) found under " << dir << "\n";
    return UsageError;
  }
  int code = Ok;
  for (const auto& d : dirs) {
    const auto stored = io::read_trajectory(d);
    const MixtureParams p = validate_params(stored.params);
    code = worst(code, audit_and_report(stored.trajectory, p, derive_matrices(p), {}, d, false, out));
  }
  return code;
}

int mms(const MixtureParams& p, const SchemeConfig& scheme, RunFrame frame,
        const std::vector<std::size_t>& levels, double t_end, const std::string& out_dir,
        std::ostream& out, std::ostream&) {
  std::vector<Frame> frames;
  if (frame != RunFrame::Lagrangian) frames.push_back(Frame::Eulerian);
  if (frame != RunFrame::Eulerian) frames.push_back(Frame::Lagrangian);
  int code = Ok;
  for (Frame f : frames) {
    const auto study = mms::mms_study(p, scheme, f, levels, t_end);
    const std::string table = mms::to_table(study);
    out << table;
    if (!out_dir.empty()) io::write_text(join(out_dir, "mms_" + std::string(to_string(f)) + ".txt"), table);
    if (!study.pass) code = AuditFail;
  }
  return code;
}

int report(const std::string& dir, const std::string& plot_dir, std::ostream& out, std::ostream& err) {
  std::vector<std::string> dirs;
  if (has_manifest(dir)) dirs.push_back(dir);
  for (const char* sub : {"eulerian", "lagrangian"})
    if (has_manifest(join(dir, sub))) dirs.push_back(join(dir, sub));
  if (dirs.empty()) {
    err << "no trajectory (manifest.json) found under " << dir << "\n";
    return UsageError;
  }
  for (const auto& d : dirs) {
    const auto stored = io::read_trajectory(d);
    const Trajectory& tr = stored.trajectory;
    const std::string target =
        dirs.size() > 1 ? join(plot_dir, fs::path(d).filename().string()) : plot_dir;

    std::vector<double> t;
    for (const auto& r : tr.records) t.push_back(r.time);
    for (std::size_t c = 1; c < DiagnosticsRecord::column_names.size(); ++c) {
      const std::string name(DiagnosticsRecord::column_names[c]);
      std::vector<double> y;
      for (const auto& r : tr.records) y.push_back(r.values()[c]);
      io::write_text(join(target, "diag_" + name + ".svg"), svg::line_plot(name, "t", {{name, t, y}}));
    }
    if (!tr.states.empty()) {
      const State& s = tr.back();
      const auto x = s.grid.nodes();
      std::vector<svg::Series> series{{"rho", x, s.rho}};
      for (std::size_t i = 0; i < s.n_components(); ++i)
        series.push_back({"u" + std::to_string(i + 1), x, s.velocity[i]});
      io::write_text(join(target, "profiles_final.svg"),
                     svg::line_plot("final profiles, t = " + format_double(s.time),
                                    s.frame == Frame::Eulerian ? "x" : "y", series));
    }
    out << "plots for " << d << " written to " << target << "\n";
  }
  return Ok;
}

int transform(const std::string& input, Frame from, const std::string& output, std::ostream& out,
              std::ostream&) {
  const State s = io::read_snapshot_csv(input, from);
  const State t = from == Frame::Eulerian ? lagrange::euler_to_lagrange(s) : lagrange::lagrange_to_euler(s);
  io::write_snapshot_csv(output, t);
  out << to_string(from) << " -> " << to_string(t.frame) << ": " << output << " (length "
      << format_double(t.grid.length) << ")\n";
  return Ok;
}

}  // namespace mixflow::driver
