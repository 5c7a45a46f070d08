#include <cmath>
#include <cstdio>
#include <string>

#include "json.hpp"
#include "mixflow/estimates.hpp"

namespace mixflow::estimates {
namespace {

using nlohmann::ordered_json;

const char* verdict(bool pass) { return pass ? "PASS" : "FAIL"; }

/// JSON has no inf/nan; emit them as strings so the report stays parseable.
ordered_json number(double x) {
  if (std::isfinite(x)) return x;
  if (std::isnan(x)) return "nan";
  return x > 0 ? "inf" : "-inf";
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

}  // namespace

std::string to_json(const EstimateReport& r) {
  ordered_json j;
  j["frame"] = std::string(to_string(r.frame));
  j["mass"] = number(r.mass);
  j["all_pass"] = r.all_pass();
  if (r.energy_budget) {
    const auto& e = *r.energy_budget;
    j["energy_budget"] = {{"e0", number(e.e0)},
                          {"max_excess", number(e.max_excess)},
                          {"margin", number(e.margin)},
                          {"verdict", verdict(e.pass)}};
  }
  if (r.w_balance) {
    const auto& w = *r.w_balance;
    j["w_balance"] = {{"max_residual", number(w.max_residual)},
                      {"scale", number(w.scale)},
                      {"max_relative", number(w.max_relative)},
                      {"intervals", w.residuals.size()},
                      {"verdict", verdict(w.finite)}};
  }
  if (r.density_bounds) {
    const auto& b = *r.density_bounds;
    j["density_bounds"] = {{"inf_rho", number(b.inf_rho)},
                           {"sup_rho", number(b.sup_rho)},
                           {"mass", number(b.mass)},
                           {"positive", b.positive},
                           {"mean_value", b.mean_value},
                           {"margin", number(b.margin)},
                           {"verdict", verdict(b.pass)}};
  }
  j["velocity_damping"] = number(r.velocity_damping);
  if (r.gronwall) {
    const auto& g = *r.gronwall;
    j["gronwall_chain"] = {{"c3", number(g.c3)},
                           {"c4", number(g.c4)},
                           {"c5", number(g.c5)},
                           {"sup_w", number(g.sup_w)},
                           {"margin", number(g.margin)},
                           {"relative_margin", number(g.relative_margin)},
                           {"verdict", verdict(g.pass)}};
  }
  if (r.alpha_growth) {
    const auto& a = *r.alpha_growth;
    j["alpha_growth"] = {{"sup_alpha", number(a.sup_alpha)},
                         {"c10", number(a.c10)},
                         {"c11", number(a.c11)},
                         {"margin", number(a.margin)},
                         {"verdict", verdict(a.pass)}};
  }
  if (r.log_holder) {
    const auto& l = *r.log_holder;
    j["log_holder"] = {{"max_log_excess", number(l.max_log_excess)},
                       {"max_holder_excess", number(l.max_holder_excess)},
                       {"verdict", verdict(l.pass)}};
  }
  if (r.derivative_norms) {
    const auto& n = *r.derivative_norms;
    j["derivative_norms"] = {{"dx_u_linf_l2", number(n.dx_u_linf_l2)},
                             {"dxx_u_l2", number(n.dxx_u_l2)},
                             {"dt_u_l2", number(n.dt_u_l2)},
                             {"dt_rho_linf_l2", number(n.dt_rho_linf_l2)},
                             {"dx_rho_linf_l2", number(n.dx_rho_linf_l2)},
                             {"u_l2_linf", number(n.u_l2_linf)}};
  }
  ordered_json c = ordered_json::object();
  for (const auto& [k, v] : r.empirical_constants) c[k] = number(v);
  j["empirical_constants"] = c;
  return j.dump(2) + "\n";
}

std::string to_table(const EstimateReport& r) {
  std::string out;
  auto row = [&out](const std::string& name, const std::string& value, const std::string& status) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%-22s %-44s %s\n", name.c_str(), value.c_str(), status.c_str());
    out += buf;
  };
  row("audit", "measured", "verdict");
  if (r.energy_budget)
    row("energy_budget", "E0=" + fmt(r.energy_budget->e0) + " excess=" + fmt(r.energy_budget->max_excess),
        verdict(r.energy_budget->pass));
  if (r.w_balance)
    row("w_balance", "max=" + fmt(r.w_balance->max_residual) + " rel=" + fmt(r.w_balance->max_relative),
        verdict(r.w_balance->finite));
  if (r.density_bounds)
    row("density_bounds",
        "[" + fmt(r.density_bounds->inf_rho) + ", " + fmt(r.density_bounds->sup_rho) + "] d=" +
            fmt(r.density_bounds->mass),
        verdict(r.density_bounds->pass));
  if (r.gronwall)
    row("gronwall_chain", "C4=" + fmt(r.gronwall->c4) + " margin=" + fmt(r.gronwall->margin),
        verdict(r.gronwall->pass));
  if (r.alpha_growth)
    row("alpha_growth", "sup=" + fmt(r.alpha_growth->sup_alpha) + " margin=" + fmt(r.alpha_growth->margin),
        verdict(r.alpha_growth->pass));
  if (r.log_holder)
    row("log_holder",
        "log=" + fmt(r.log_holder->max_log_excess) + " holder=" + fmt(r.log_holder->max_holder_excess),
        verdict(r.log_holder->pass));
  if (r.derivative_norms)
    row("derivative_norms", "dxx_u=" + fmt(r.derivative_norms->dxx_u_l2) + " dt_u=" +
                                fmt(r.derivative_norms->dt_u_l2),
        "PASS");
  row("velocity_damping", fmt(r.velocity_damping), "");
  for (const auto& [k, v] : r.empirical_constants) row("  " + k, fmt(v), "");
  row("overall", "", verdict(r.all_pass()));
  return out;
}

}  // namespace mixflow::estimates
