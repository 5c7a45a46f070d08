#include "mixflow/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "mixflow/error.hpp"
#include "mixflow/estimates.hpp"
#include "mixflow/state.hpp"

namespace mixflow {

std::string_view to_string(RunFrame f) {
  switch (f) {
    case RunFrame::Eulerian: return "eulerian";
    case RunFrame::Lagrangian: return "lagrangian";
    case RunFrame::Both: return "both";
  }
  return "?";
}

RunFrame run_frame_from_string(std::string_view s) {
  if (s == "eulerian") return RunFrame::Eulerian;
  if (s == "lagrangian") return RunFrame::Lagrangian;
  if (s == "both") return RunFrame::Both;
  throw Error(ErrorCode::InvalidArgument, "unknown frame '" + std::string(s) + "'");
}

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

namespace {

// ---------------------------------------------------------------------------
// Lexical layer

struct Value {
  enum class Type { Number, String, Bool, Array };
  Type type = Type::Number;
  double number = 0.0;
  std::string text;  // raw token for numbers, contents for strings
  bool boolean = false;
  std::vector<Value> items;
  std::size_t line = 0, column = 0;
};

struct Entry {
  Value value;
  std::size_t line = 0, column = 0;
  bool used = false;
};

using Section = std::map<std::string, Entry>;

class Cursor {
 public:
  Cursor(std::string text, std::vector<std::pair<std::size_t, std::size_t>> pos)
      : text_(std::move(text)), pos_(std::move(pos)) {}

  [[noreturn]] void fail(const std::string& msg) const {
    const auto [l, c] = where();
    throw ParseError(l, c, msg);
  }

  std::pair<std::size_t, std::size_t> where() const {
    if (i_ < pos_.size()) return pos_[i_];
    return pos_.empty() ? std::pair<std::size_t, std::size_t>{0, 0}
                        : std::pair<std::size_t, std::size_t>{pos_.back().first, pos_.back().second + 1};
  }

  void skip_space() {
    while (i_ < text_.size() && (text_[i_] == ' ' || text_[i_] == '\t' || text_[i_] == '\n' ||
                                 text_[i_] == '\r'))
      ++i_;
  }
  bool done() {
    skip_space();
    return i_ >= text_.size();
  }

  Value parse_value() {
    skip_space();
    if (i_ >= text_.size()) fail("expected a value");
    Value v;
    std::tie(v.line, v.column) = where();
    const char c = text_[i_];
    if (c == '[') {
      v.type = Value::Type::Array;
      ++i_;
      skip_space();
      if (i_ < text_.size() && text_[i_] == ']') {
        ++i_;
        return v;
      }
      for (;;) {
        v.items.push_back(parse_value());
        skip_space();
        if (i_ >= text_.size()) fail("unterminated array");
        if (text_[i_] == ',') {
          ++i_;
          skip_space();
          if (i_ < text_.size() && text_[i_] == ']') {
            ++i_;
            return v;
          }
          continue;
        }
        if (text_[i_] == ']') {
          ++i_;
          return v;
        }
        fail("expected ',' or ']' in array");
      }
    }
    if (c == '"') {
      v.type = Value::Type::String;
      ++i_;
      while (i_ < text_.size() && text_[i_] != '"') {
        if (text_[i_] == '\\') {
          ++i_;
          if (i_ >= text_.size()) break;
          const char e = text_[i_];
          if (e == '"' || e == '\\') v.text += e;
          else if (e == 'n') v.text += '\n';
          else if (e == 't') v.text += '\t';
          else fail("unsupported escape sequence");
        } else {
          v.text += text_[i_];
        }
        ++i_;
      }
      if (i_ >= text_.size()) fail("unterminated string");
      ++i_;
      return v;
    }
    std::size_t j = i_;
    while (j < text_.size() && text_[j] != ',' && text_[j] != ']' && text_[j] != ' ' &&
           text_[j] != '\t' && text_[j] != '\n' && text_[j] != '\r')
      ++j;
    const std::string tok = text_.substr(i_, j - i_);
    if (tok == "true" || tok == "false") {
      v.type = Value::Type::Bool;
      v.boolean = tok == "true";
      i_ = j;
      return v;
    }
    const char* b = tok.data();
    const char* e = b + tok.size();
    if (!tok.empty() && *b == '+') ++b;
    const auto res = std::from_chars(b, e, v.number);
    if (tok.empty() || res.ec != std::errc() || res.ptr != e || !std::isfinite(v.number))
      fail("invalid value '" + tok + "'");
    v.text = tok;
    i_ = j;
    return v;
  }

 private:
  std::string text_;
  std::vector<std::pair<std::size_t, std::size_t>> pos_;
  std::size_t i_ = 0;
};

bool is_key_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

/// Removes a trailing comment (a '#' outside a string).
std::string strip_comment(const std::string& line) {
  bool in_string = false;
  for (std::size_t k = 0; k < line.size(); ++k) {
    const char c = line[k];
    if (in_string && c == '\\') {
      ++k;
      continue;
    }
    if (c == '"') in_string = !in_string;
    if (c == '#' && !in_string) return line.substr(0, k);
  }
  return line;
}

int bracket_balance(const std::string& s) {
  int depth = 0;
  bool in_string = false;
  for (std::size_t k = 0; k < s.size(); ++k) {
    const char c = s[k];
    if (in_string && c == '\\') {
      ++k;
      continue;
    }
    if (c == '"') in_string = !in_string;
    if (in_string) continue;
    if (c == '[') ++depth;
    if (c == ']') --depth;
  }
  return depth;
}

std::map<std::string, Section> lex(std::string_view text) {
  static const std::set<std::string> known{"params", "scheme", "initial", "output"};
  std::vector<std::string> lines;
  {
    std::string cur;
    for (char c : text) {
      if (c == '\n') {
        lines.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    lines.push_back(cur);
  }

  std::map<std::string, Section> out;
  std::string section;
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    std::string line = strip_comment(lines[ln]);
    std::size_t start = 0;
    while (start < line.size() && (line[start] == ' ' || line[start] == '\t' || line[start] == '\r'))
      ++start;
    if (start >= line.size()) continue;

    if (line[start] == '[') {
      const auto close = line.find(']', start);
      if (close == std::string::npos) throw ParseError(ln + 1, start + 1, "unterminated section header");
      const std::string name = line.substr(start + 1, close - start - 1);
      for (std::size_t k = close + 1; k < line.size(); ++k)
        if (line[k] != ' ' && line[k] != '\t' && line[k] != '\r')
          throw ParseError(ln + 1, k + 1, "unexpected text after section header");
      if (!known.count(name)) throw ParseError(ln + 1, start + 2, "unknown section [" + name + "]");
      if (out.count(name)) throw ParseError(ln + 1, start + 1, "duplicate section [" + name + "]");
      section = name;
      out[section];
      continue;
    }

    std::size_t k = start;
    while (k < line.size() && is_key_char(line[k])) ++k;
    if (k == start) throw ParseError(ln + 1, start + 1, "expected a key");
    const std::string key = line.substr(start, k - start);
    while (k < line.size() && (line[k] == ' ' || line[k] == '\t')) ++k;
    if (k >= line.size() || line[k] != '=') throw ParseError(ln + 1, k + 1, "expected '=' after key");
    if (section.empty()) throw ParseError(ln + 1, start + 1, "key outside of a section");
    ++k;

    // Gather the value, continuing over lines while brackets are open.
    std::string buf;
    std::vector<std::pair<std::size_t, std::size_t>> pos;
    auto take = [&](const std::string& s, std::size_t from, std::size_t line_no) {
      for (std::size_t c = from; c < s.size(); ++c) {
        buf += s[c];
        pos.emplace_back(line_no + 1, c + 1);
      }
      buf += '\n';
      pos.emplace_back(line_no + 1, s.size() + 1);
    };
    take(line, k, ln);
    const std::size_t first_line = ln;
    while (bracket_balance(buf) > 0 && ln + 1 < lines.size()) {
      ++ln;
      take(strip_comment(lines[ln]), 0, ln);
    }

    Cursor cur(buf, pos);
    Value v = cur.parse_value();
    if (!cur.done()) cur.fail("unexpected text after value");
    auto& sec = out[section];
    if (sec.count(key)) throw ParseError(first_line + 1, start + 1, "duplicate key '" + key + "'");
    sec[key] = Entry{std::move(v), first_line + 1, start + 1, false};
  }
  return out;
}

// ---------------------------------------------------------------------------
// Typed access

[[noreturn]] void type_error(const Value& v, const std::string& what) {
  throw ParseError(v.line, v.column, "expected " + what);
}

double as_number(const Value& v) {
  if (v.type != Value::Type::Number) type_error(v, "a number");
  return v.number;
}

std::uint64_t as_unsigned(const Value& v) {
  if (v.type != Value::Type::Number) type_error(v, "a non-negative integer");
  std::uint64_t out = 0;
  const char* b = v.text.data();
  const char* e = b + v.text.size();
  if (b != e && *b == '+') ++b;
  const auto res = std::from_chars(b, e, out);
  if (res.ec != std::errc() || res.ptr != e) type_error(v, "a non-negative integer");
  return out;
}

std::string as_string(const Value& v) {
  if (v.type != Value::Type::String) type_error(v, "a string");
  return v.text;
}

const std::vector<Value>& as_array(const Value& v) {
  if (v.type != Value::Type::Array) type_error(v, "an array");
  return v.items;
}

std::vector<std::vector<double>> as_rows(const Value& v) {
  std::vector<std::vector<double>> rows;
  for (const auto& r : as_array(v)) {
    std::vector<double> row;
    for (const auto& x : as_array(r)) row.push_back(as_number(x));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<Mode> as_modes(const Value& v) {
  std::vector<Mode> out;
  for (const auto& r : as_array(v)) {
    const auto& pair = as_array(r);
    if (pair.size() != 2) type_error(r, "a [wavenumber, amplitude] pair");
    out.emplace_back(as_number(pair[0]), as_number(pair[1]));
  }
  return out;
}

class Reader {
 public:
  explicit Reader(Section* s, std::string name) : s_(s), name_(std::move(name)) {}

  const Value* get(const std::string& key) {
    if (!s_) return nullptr;
    const auto it = s_->find(key);
    if (it == s_->end()) return nullptr;
    it->second.used = true;
    return &it->second.value;
  }

  void finish() const {
    if (!s_) return;
    for (const auto& [k, e] : *s_)
      if (!e.used) throw ParseError(e.line, e.column, "unknown key '" + k + "' in [" + name_ + "]");
  }

 private:
  Section* s_;
  std::string name_;
};

Matrix to_matrix(const std::vector<std::vector<double>>& rows, const char* name) {
  try {
    return Matrix::from_rows(rows);
  } catch (const Error&) {
    throw Error(ErrorCode::BadDimension, std::string(name) + " must be a square matrix given as rows");
  }
}

std::string resolve(const std::string& path, std::string_view base_dir) {
  if (path.empty() || base_dir.empty()) return path;
  const std::filesystem::path p(path);
  if (p.is_absolute()) return path;
  return (std::filesystem::path(base_dir) / p).lexically_normal().string();
}

DensityProfile::Kind density_kind(const std::string& s, const Value& v) {
  if (s == "constant") return DensityProfile::Kind::Constant;
  if (s == "affine") return DensityProfile::Kind::Affine;
  if (s == "gaussian") return DensityProfile::Kind::Gaussian;
  if (s == "cosine") return DensityProfile::Kind::CosineModes;
  if (s == "table") return DensityProfile::Kind::Table;
  throw ParseError(v.line, v.column, "unknown density profile '" + s + "'");
}

const char* density_kind_name(DensityProfile::Kind k) {
  switch (k) {
    case DensityProfile::Kind::Constant: return "constant";
    case DensityProfile::Kind::Affine: return "affine";
    case DensityProfile::Kind::Gaussian: return "gaussian";
    case DensityProfile::Kind::CosineModes: return "cosine";
    case DensityProfile::Kind::Table: return "table";
  }
  return "?";
}

VelocityProfile::Kind velocity_kind(const std::string& s, const Value& v) {
  if (s == "zero") return VelocityProfile::Kind::Zero;
  if (s == "sine") return VelocityProfile::Kind::Sine;
  if (s == "random") return VelocityProfile::Kind::Random;
  if (s == "table") return VelocityProfile::Kind::Table;
  throw ParseError(v.line, v.column, "unknown velocity profile '" + s + "'");
}

const char* velocity_kind_name(VelocityProfile::Kind k) {
  switch (k) {
    case VelocityProfile::Kind::Zero: return "zero";
    case VelocityProfile::Kind::Sine: return "sine";
    case VelocityProfile::Kind::Random: return "random";
    case VelocityProfile::Kind::Table: return "table";
  }
  return "?";
}

/// Re-raises library validation failures as ValidationError, keeping
/// dimension errors distinguishable.
template <class F>
void validated(const char* where, F&& f) {
  try {
    f();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::BadDimension || e.code() == ErrorCode::ValidationError) throw;
    throw Error(ErrorCode::ValidationError, std::string(where) + ": " + e.what());
  }
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    if (c == '\t') {
      out += "\\t";
      continue;
    }
    out += c;
  }
  return out + "\"";
}

std::string matrix_text(const Matrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < m.size(); ++j) out += (j ? ", " : "") + format_double(m(i, j));
    out += "]";
  }
  return out + "]";
}

std::string modes_text(const std::vector<Mode>& modes) {
  std::string out = "[";
  for (std::size_t k = 0; k < modes.size(); ++k)
    out += (k ? ", [" : "[") + format_double(modes[k].first) + ", " + format_double(modes[k].second) + "]";
  return out + "]";
}

}  // namespace

// ---------------------------------------------------------------------------

RunConfig parse_config(std::string_view text, std::string_view base_dir) {
  auto sections = lex(text);
  auto section = [&](const char* name) {
    const auto it = sections.find(name);
    return Reader(it == sections.end() ? nullptr : &it->second, name);
  };

  RunConfig c;
  bool t_end_given = false;
  {
    Reader r = section("params");
    const Value* n = r.get("n_components");
    if (!n) throw ParseError(1, 1, "missing required key params.n_components");
    c.params.n_components = as_unsigned(*n);
    if (const Value* v = r.get("K")) c.params.pressure_coeff = as_number(*v);
    if (const Value* v = r.get("gamma")) c.params.gamma = as_number(*v);
    if (const Value* v = r.get("t_final")) c.params.t_final = as_number(*v);
    const Value* m = r.get("viscosity");
    if (!m) throw ParseError(1, 1, "missing required key params.viscosity");
    c.params.viscosity = to_matrix(as_rows(*m), "viscosity");
    const Value* a = r.get("friction");
    if (!a) throw ParseError(1, 1, "missing required key params.friction");
    c.params.friction = to_matrix(as_rows(*a), "friction");
    r.finish();
  }
  {
    Reader r = section("scheme");
    auto named = [](const Value& v, auto convert) {
      try {
        return convert(as_string(v));
      } catch (const ParseError&) {
        throw;
      } catch (const Error& e) {
        throw ParseError(v.line, v.column, e.what());
      }
    };
    if (const Value* v = r.get("integrator"))
      c.scheme.integrator = named(*v, [](const std::string& s) { return integrator_from_string(s); });
    if (const Value* v = r.get("advection"))
      c.scheme.advection = named(*v, [](const std::string& s) { return advection_from_string(s); });
    if (const Value* v = r.get("cfl")) c.scheme.cfl = as_number(*v);
    if (const Value* v = r.get("density_floor")) c.scheme.density_floor = as_number(*v);
    if (const Value* v = r.get("n_cells")) c.n_cells = as_unsigned(*v);
    if (const Value* v = r.get("t_end")) {
      c.t_end = as_number(*v);
      t_end_given = true;
    }
    if (const Value* v = r.get("frame"))
      c.frame = named(*v, [](const std::string& s) { return run_frame_from_string(s); });
    r.finish();
  }
  if (!t_end_given) c.t_end = c.params.t_final;
  {
    Reader r = section("initial");
    auto& d = c.initial.rho0;
    if (const Value* v = r.get("rho")) d.kind = density_kind(as_string(*v), *v);
    if (const Value* v = r.get("rho_base")) d.base = as_number(*v);
    if (const Value* v = r.get("rho_slope")) d.slope = as_number(*v);
    if (const Value* v = r.get("rho_amplitude")) d.amplitude = as_number(*v);
    if (const Value* v = r.get("rho_center")) d.center = as_number(*v);
    if (const Value* v = r.get("rho_width")) d.width = as_number(*v);
    if (const Value* v = r.get("rho_modes")) d.modes = as_modes(*v);
    if (const Value* v = r.get("rho_table")) d.table = resolve(as_string(*v), base_dir);

    const std::size_t nc = c.params.n_components;
    c.initial.u0.assign(nc, VelocityProfile{});
    if (const Value* v = r.get("u")) {
      const auto& kinds = as_array(*v);
      if (kinds.size() != nc)
        throw ParseError(v->line, v->column, "initial.u needs one profile per component");
      for (std::size_t i = 0; i < nc; ++i) c.initial.u0[i].kind = velocity_kind(as_string(kinds[i]), kinds[i]);
    }
    for (std::size_t i = 0; i < nc; ++i) {
      auto& u = c.initial.u0[i];
      const std::string pre = "u" + std::to_string(i + 1) + "_";
      if (const Value* v = r.get(pre + "modes")) u.modes = as_modes(*v);
      if (const Value* v = r.get(pre + "seed")) u.seed = as_unsigned(*v);
      if (const Value* v = r.get(pre + "n_modes")) u.n_modes = as_unsigned(*v);
      if (const Value* v = r.get(pre + "amplitude")) u.amplitude = as_number(*v);
      if (const Value* v = r.get(pre + "table")) u.table = resolve(as_string(*v), base_dir);
    }
    r.finish();
  }
  {
    Reader r = section("output");
    if (const Value* v = r.get("out_dir")) c.out_dir = as_string(*v);
    if (const Value* v = r.get("snapshot_every")) c.snapshot_every = as_unsigned(*v);
    if (const Value* v = r.get("snapshot_interval")) c.snapshot_interval = as_number(*v);
    if (const Value* v = r.get("diag_every")) c.diag_every = as_unsigned(*v);
    if (const Value* v = r.get("audits")) {
      c.audit_set.clear();
      for (const auto& a : as_array(*v)) c.audit_set.push_back(as_string(a));
    }
    r.finish();
  }
  return validate_config(c);
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::FileFormatError, "cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  const auto dir = std::filesystem::path(path).parent_path().string();
  return parse_config(ss.str(), dir);
}

RunConfig validate_config(const RunConfig& c) {
  validated("params", [&] { validate_params(c.params); });
  validated("scheme", [&] { validate_scheme(c.scheme); });
  auto fail = [](const std::string& msg) { throw Error(ErrorCode::ValidationError, msg); };
  if (c.n_cells < Grid1D::min_cells) fail("scheme.n_cells must be at least 8");
  if (!(c.t_end > 0.0) || c.t_end > c.params.t_final)
    fail("scheme.t_end must lie in (0, params.t_final]");
  if (c.snapshot_every == 0) fail("output.snapshot_every must be at least 1");
  if (c.diag_every == 0) fail("output.diag_every must be at least 1");
  if (!(c.snapshot_interval >= 0.0)) fail("output.snapshot_interval must be non-negative");
  for (const auto& a : c.audit_set) {
    const auto& names = estimates::audit_names();
    if (std::find(names.begin(), names.end(), a) == names.end()) fail("output.audits: unknown audit '" + a + "'");
  }
  if (c.initial.u0.size() != c.params.n_components)
    fail("initial.u needs one profile per component");

  const auto& d = c.initial.rho0;
  switch (d.kind) {
    case DensityProfile::Kind::Constant:
      if (!(d.base > 0.0)) fail("initial.rho_base must be positive");
      break;
    case DensityProfile::Kind::Affine:
      if (!(d.base > 0.0) || !(d.base + d.slope > 0.0)) fail("initial.rho_base/rho_slope give a non-positive density");
      break;
    case DensityProfile::Kind::Gaussian:
      if (!(d.width > 0.0)) fail("initial.rho_width must be positive");
      if (!(d.base > 0.0) || !(d.base + std::min(d.amplitude, 0.0) > 0.0))
        fail("initial.rho_base/rho_amplitude give a non-positive density");
      break;
    case DensityProfile::Kind::CosineModes: {
      double worst = d.base;
      for (const auto& m : d.modes) worst -= std::abs(m.second);
      if (!(worst > 0.0)) fail("initial.rho_modes may drive the density to zero");
      break;
    }
    case DensityProfile::Kind::Table:
      if (d.table.empty()) fail("initial.rho_table is required for a table density");
      break;
  }
  for (std::size_t i = 0; i < c.initial.u0.size(); ++i) {
    const auto& u = c.initial.u0[i];
    const std::string key = "initial.u" + std::to_string(i + 1);
    if (u.kind == VelocityProfile::Kind::Sine)
      for (const auto& m : u.modes)
        if (!(m.first >= 1.0) || m.first != std::floor(m.first))
          fail(key + "_modes: wavenumbers must be positive integers");
    if (u.kind == VelocityProfile::Kind::Random && u.n_modes == 0) fail(key + "_n_modes must be at least 1");
    if (u.kind == VelocityProfile::Kind::Table && u.table.empty()) fail(key + "_table is required");
  }
  return c;
}

std::string serialize_params(const MixtureParams& p) {
  std::string out = "[params]\n";
  out += "n_components = " + std::to_string(p.n_components) + "\n";
  out += "K = " + format_double(p.pressure_coeff) + "\n";
  out += "gamma = " + format_double(p.gamma) + "\n";
  out += "t_final = " + format_double(p.t_final) + "\n";
  out += "viscosity = " + matrix_text(p.viscosity) + "\n";
  out += "friction = " + matrix_text(p.friction) + "\n";
  return out;
}

std::string serialize_config(const RunConfig& c) {
  std::string out = serialize_params(c.params);
  out += "\n[scheme]\n";
  out += "integrator = " + quote(std::string(to_string(c.scheme.integrator))) + "\n";
  out += "advection = " + quote(std::string(to_string(c.scheme.advection))) + "\n";
  out += "cfl = " + format_double(c.scheme.cfl) + "\n";
  out += "density_floor = " + format_double(c.scheme.density_floor) + "\n";
  out += "n_cells = " + std::to_string(c.n_cells) + "\n";
  out += "t_end = " + format_double(c.t_end) + "\n";
  out += "frame = " + quote(std::string(to_string(c.frame))) + "\n";

  const auto& d = c.initial.rho0;
  out += "\n[initial]\n";
  out += "rho = " + quote(density_kind_name(d.kind)) + "\n";
  out += "rho_base = " + format_double(d.base) + "\n";
  out += "rho_slope = " + format_double(d.slope) + "\n";
  out += "rho_amplitude = " + format_double(d.amplitude) + "\n";
  out += "rho_center = " + format_double(d.center) + "\n";
  out += "rho_width = " + format_double(d.width) + "\n";
  out += "rho_modes = " + modes_text(d.modes) + "\n";
  out += "rho_table = " + quote(d.table) + "\n";
  out += "u = [";
  for (std::size_t i = 0; i < c.initial.u0.size(); ++i)
    out += (i ? ", " : "") + quote(velocity_kind_name(c.initial.u0[i].kind));
  out += "]\n";
  for (std::size_t i = 0; i < c.initial.u0.size(); ++i) {
    const auto& u = c.initial.u0[i];
    const std::string pre = "u" + std::to_string(i + 1) + "_";
    out += pre + "modes = " + modes_text(u.modes) + "\n";
    out += pre + "seed = " + std::to_string(u.seed) + "\n";
    out += pre + "n_modes = " + std::to_string(u.n_modes) + "\n";
    out += pre + "amplitude = " + format_double(u.amplitude) + "\n";
    out += pre + "table = " + quote(u.table) + "\n";
  }

  out += "\n[output]\n";
  out += "out_dir = " + quote(c.out_dir) + "\n";
  out += "snapshot_every = " + std::to_string(c.snapshot_every) + "\n";
  out += "snapshot_interval = " + format_double(c.snapshot_interval) + "\n";
  out += "diag_every = " + std::to_string(c.diag_every) + "\n";
  out += "audits = [";
  for (std::size_t i = 0; i < c.audit_set.size(); ++i) out += (i ? ", " : "") + quote(c.audit_set[i]);
  out += "]\n";
  return out;
}

}  // namespace mixflow
