#include "mixflow/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "mixflow/config.hpp"
#include "mixflow/error.hpp"

namespace mixflow::io {
namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& path, const std::string& msg) {
  throw Error(ErrorCode::FileFormatError, path + ": " + msg);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) bad(path, "cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

double parse_number(std::string_view tok, const std::string& path, std::size_t line) {
  while (!tok.empty() && (tok.front() == ' ' || tok.front() == '\t')) tok.remove_prefix(1);
  while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t' || tok.back() == '\r')) tok.remove_suffix(1);
  double x = 0.0;
  const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), x);
  if (tok.empty() || res.ec != std::errc() || res.ptr != tok.data() + tok.size())
    bad(path, "line " + std::to_string(line) + ": invalid number '" + std::string(tok) + "'");
  return x;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    out.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return std::string(s);
}

ordered_json matrix_json(const Matrix& m) {
  ordered_json rows = ordered_json::array();
  for (const auto& r : m.rows()) rows.push_back(r);
  return rows;
}

Matrix matrix_from_json(const ordered_json& j) {
  return Matrix::from_rows(j.get<std::vector<std::vector<double>>>());
}

}  // namespace

const std::vector<double>& CsvTable::column(const std::string& name) const {
  for (std::size_t k = 0; k < names.size(); ++k)
    if (names[k] == name) return columns[k];
  throw Error(ErrorCode::FileFormatError, "missing column '" + name + "'");
}

CsvTable read_csv(const std::string& path) {
  const std::string text = slurp(path);
  std::istringstream in(text);
  std::string line;
  CsvTable t;
  std::size_t ln = 0;
  while (std::getline(in, line)) {
    ++ln;
    if (trim(line).empty()) continue;
    const auto cells = split(line);
    if (t.names.empty()) {
      for (auto c : cells) t.names.push_back(trim(c));
      t.columns.resize(t.names.size());
      continue;
    }
    if (cells.size() != t.names.size())
      bad(path, "line " + std::to_string(ln) + ": expected " + std::to_string(t.names.size()) + " fields");
    for (std::size_t k = 0; k < cells.size(); ++k) t.columns[k].push_back(parse_number(cells[k], path, ln));
  }
  if (t.names.empty()) bad(path, "empty file");
  return t;
}

void write_text(const std::string& path, const std::string& text) {
  const fs::path p(path);
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::FileFormatError, path + ": cannot write file");
  out << text;
  if (!out) throw Error(ErrorCode::FileFormatError, path + ": write failed");
}

void write_snapshot_csv(const std::string& path, const State& s) {
  std::string out = "x_or_y,rho";
  for (std::size_t i = 0; i < s.n_components(); ++i) out += ",u" + std::to_string(i + 1);
  out += "\n";
  const auto x = s.grid.nodes();
  for (std::size_t k = 0; k < s.n_nodes(); ++k) {
    out += format_double(x[k]) + "," + format_double(s.rho[k]);
    for (const auto& u : s.velocity) out += "," + format_double(u[k]);
    out += "\n";
  }
  write_text(path, out);
}

State read_snapshot_csv(const std::string& path, Frame frame, double time) {
  const CsvTable t = read_csv(path);
  if (t.names.size() < 3 || t.names[0] != "x_or_y" || t.names[1] != "rho")
    bad(path, "header must be x_or_y,rho,u1,...");
  for (std::size_t i = 2; i < t.names.size(); ++i)
    if (t.names[i] != "u" + std::to_string(i - 1)) bad(path, "unexpected column '" + t.names[i] + "'");
  const auto& x = t.columns[0];
  if (x.size() < Grid1D::min_cells + 1) bad(path, "too few rows for a grid");
  if (x.front() != 0.0) bad(path, "first coordinate must be 0");
  State s;
  s.time = time;
  s.frame = frame;
  try {
    s.grid = Grid1D::make(x.back(), x.size() - 1);
  } catch (const Error& e) {
    bad(path, e.what());
  }
  for (std::size_t k = 0; k < x.size(); ++k)
    if (std::abs(x[k] - s.grid.node(k)) > 1e-9 * s.grid.length) bad(path, "nodes are not uniform");
  s.rho = t.columns[1];
  for (std::size_t i = 2; i < t.names.size(); ++i) s.velocity.push_back(t.columns[i]);
  return s;
}

void write_diagnostics_csv(const std::string& path, const std::vector<DiagnosticsRecord>& records) {
  std::string out;
  for (std::size_t k = 0; k < DiagnosticsRecord::column_names.size(); ++k)
    out += (k ? "," : "") + std::string(DiagnosticsRecord::column_names[k]);
  out += "\n";
  for (const auto& r : records) {
    const auto v = r.values();
    for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + format_double(v[k]);
    out += "\n";
  }
  write_text(path, out);
}

std::vector<DiagnosticsRecord> read_diagnostics_csv(const std::string& path) {
  const CsvTable t = read_csv(path);
  std::vector<const std::vector<double>*> cols;
  for (auto name : DiagnosticsRecord::column_names) {
    try {
      cols.push_back(&t.column(std::string(name)));
    } catch (const Error&) {
      bad(path, "missing column '" + std::string(name) + "'");
    }
  }
  std::vector<DiagnosticsRecord> out;
  for (std::size_t r = 0; r < cols[0]->size(); ++r) {
    std::array<double, 11> v{};
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = (*cols[k])[r];
    out.push_back(DiagnosticsRecord::from_values(v));
  }
  return out;
}

std::string params_hash(const MixtureParams& p) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : serialize_params(p)) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void write_trajectory(const std::string& dir, const Trajectory& tr, const MixtureParams& p,
                      const SchemeConfig& scheme) {
  fs::create_directories(dir);
  ordered_json j;
  j["format"] = "mixflow-trajectory";
  j["version"] = 1;
  j["frame"] = std::string(to_string(tr.frame));
  if (!tr.states.empty())
    j["grid"] = {{"length", tr.states.front().grid.length}, {"n_cells", tr.states.front().grid.n_cells}};
  ordered_json times = ordered_json::array(), files = ordered_json::array();
  for (std::size_t k = 0; k < tr.states.size(); ++k) {
    const std::string name = "snap_" + std::to_string(k) + ".csv";
    write_snapshot_csv((fs::path(dir) / name).string(), tr.states[k]);
    times.push_back(tr.states[k].time);
    files.push_back(name);
  }
  j["times"] = times;
  j["snapshots"] = files;
  j["diagnostics"] = "diag.csv";
  j["params"] = {{"n_components", p.n_components},
                 {"K", p.pressure_coeff},
                 {"gamma", p.gamma},
                 {"t_final", p.t_final},
                 {"viscosity", matrix_json(p.viscosity)},
                 {"friction", matrix_json(p.friction)}};
  j["params_hash"] = params_hash(p);
  j["scheme"] = {{"integrator", std::string(to_string(scheme.integrator))},
                 {"advection", std::string(to_string(scheme.advection))},
                 {"cfl", scheme.cfl},
                 {"density_floor", scheme.density_floor}};
  write_diagnostics_csv((fs::path(dir) / "diag.csv").string(), tr.records);
  write_text((fs::path(dir) / "manifest.json").string(), j.dump(2) + "\n");
}

StoredTrajectory read_trajectory(const std::string& dir) {
  const std::string mpath = (fs::path(dir) / "manifest.json").string();
  StoredTrajectory out;
  ordered_json j;
  try {
    j = ordered_json::parse(slurp(mpath));
    out.trajectory.frame = frame_from_string(j.at("frame").get<std::string>());
    const auto& pj = j.at("params");
    out.params.n_components = pj.at("n_components").get<std::size_t>();
    out.params.pressure_coeff = pj.at("K").get<double>();
    out.params.gamma = pj.at("gamma").get<double>();
    out.params.t_final = pj.at("t_final").get<double>();
    out.params.viscosity = matrix_from_json(pj.at("viscosity"));
    out.params.friction = matrix_from_json(pj.at("friction"));
    const auto& sj = j.at("scheme");
    out.scheme.integrator = integrator_from_string(sj.at("integrator").get<std::string>());
    out.scheme.advection = advection_from_string(sj.at("advection").get<std::string>());
    out.scheme.cfl = sj.at("cfl").get<double>();
    out.scheme.density_floor = sj.at("density_floor").get<double>();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::FileFormatError) throw;
    bad(mpath, e.what());
  } catch (const std::exception& e) {
    bad(mpath, e.what());
  }
  if (j.value("params_hash", std::string()) != params_hash(out.params)) bad(mpath, "params hash mismatch");

  const auto times = j.at("times").get<std::vector<double>>();
  const auto files = j.at("snapshots").get<std::vector<std::string>>();
  if (times.size() != files.size()) bad(mpath, "times and snapshots differ in length");
  try {
    for (std::size_t k = 0; k < files.size(); ++k)
      out.trajectory.append(read_snapshot_csv((fs::path(dir) / files[k]).string(), out.trajectory.frame, times[k]));
    for (const auto& r : read_diagnostics_csv((fs::path(dir) / j.value("diagnostics", "diag.csv")).string()))
      out.trajectory.append(r);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::FileFormatError) throw;
    bad(dir, e.what());
  }
  return out;
}

}  // namespace mixflow::io
