#include "subsmooth/report.hpp"

#include <cstdio>
#include <fstream>

#include "subsmooth/errors.hpp"

namespace subsmooth {

json to_json(const ExtReal& v) {
  if (v.is_pos_inf()) return "+inf";
  if (v.is_neg_inf()) return "-inf";
  return v.value();
}

json to_json(const Verdict& v) {
  return json{{"outcome", to_string(v.outcome)}, {"margins", v.margins}, {"notes", v.notes}};
}

json to_json(const TailEstimate& t) {
  json samples = json::array();
  for (const auto& [tt, q] : t.samples) samples.push_back({tt, to_json(q)});
  return json{{"liminf_est", to_json(t.liminf_est)},
              {"limsup_est", to_json(t.limsup_est)},
              {"divergent", to_string(t.divergent)},
              {"stable", t.stable},
              {"samples", samples}};
}

json to_json(const GridConfig& g) {
  return json{{"t0", g.t0},       {"rho", g.rho},
              {"K", g.K},         {"window", g.window},
              {"tol", g.tol},     {"div_threshold", g.div_threshold},
              {"seed", g.seed}};
}

json to_json(const DirectionalSamplingConfig& c) {
  json j = to_json(c.base);
  j["n_dirs"] = c.n_dirs;
  j["delta0"] = c.delta0;
  j["delta_rho"] = c.delta_rho;
  j["value_filter"] = c.value_filter;
  return j;
}

json to_json(const RecoveryConfig& c) {
  json j = to_json(c.sampling);
  j["alpha_grid"] = c.alpha_grid;
  j["mode"] = c.mode == RecoveryMode::directional ? "directional" : "full";
  return j;
}

json to_json(const ClassVerdict& c) {
  return json{{"radially_accessible", to_json(c.radially_accessible)},
              {"upper_semismooth", to_json(c.upper_semismooth)},
              {"strictly_upper_semismooth", to_json(c.strictly_upper_semismooth)},
              {"mifflin_semismooth", to_json(c.mifflin_semismooth)},
              {"dir_approx_convex", to_json(c.dir_approx_convex)},
              {"dir_lipschitz", to_json(c.dir_lipschitz)},
              {"recovered_value_directional", to_json(c.recovered_value_directional)},
              {"recovered_value_full", to_json(c.recovered_value_full)},
              {"direct_radial", to_json(c.direct_radial)},
              {"estimator_inconsistency", c.estimator_inconsistency},
              {"notes", c.notes}};
}

json to_json(const DeterminationReport& r) {
  json segs = json::array();
  for (const auto& s : r.per_segment) {
    json seg{{"from", s.from.coords()}, {"to", s.to.coords()}, {"note", s.note}};
    if (s.recovered_increment) seg["recovered_increment"] = *s.recovered_increment;
    if (s.actual_g_increment) seg["actual_g_increment"] = *s.actual_g_increment;
    if (s.actual_f_increment) seg["actual_f_increment"] = *s.actual_f_increment;
    segs.push_back(seg);
  }
  return json{{"inclusion_holds", to_json(r.inclusion_holds)},
              {"hypothesis_51", to_json(r.hypothesis_51)},
              {"hypothesis_52", to_json(r.hypothesis_52)},
              {"const_estimate", r.const_estimate},
              {"const_deviation", r.const_deviation},
              {"per_segment", segs},
              {"theorem", to_json(r.theorem)}};
}

void RunReport::add_result(const std::string& key, json value, double seconds) {
  results.push_back(json{{"key", key}, {"value", std::move(value)}});
  timing.push_back(json{{"key", key}, {"seconds", seconds}});
}

std::string RunReport::dump() const {
  return json{{"command", command},
              {"config_echo", config_echo},
              {"results", results},
              {"timing", timing}}
      .dump(2);
}

std::string format_g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
  std::ofstream out(path);
  if (!out) throw ParseError("write_csv: cannot open " + path);
  for (size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
  out << "\n";
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_g17(row[i]);
    out << "\n";
  }
}

}  // namespace subsmooth
