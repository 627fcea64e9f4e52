#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "subsmooth/catalogue.hpp"
#include "subsmooth/determination.hpp"
#include "subsmooth/expr.hpp"
#include "subsmooth/report.hpp"

namespace ss = subsmooth;

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 64;
constexpr int kExitEstimation = 65;

struct CommonOpts {
  std::string config_file;
  std::uint64_t seed = 1;
  bool seed_set = false;
  double tol = -1.0;
  std::string json_out;
};

double now_seconds() {
  using clock = std::chrono::steady_clock;
  static const clock::time_point start = clock::now();
  return std::chrono::duration<double>(clock::now() - start).count();
}

// --config file: flat key=value lines mirroring the grid/sampling fields.
void apply_config_file(const std::string& path, ss::DirectionalSamplingConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw ss::ParseError("cannot open config file " + path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ss::ParseError("config line without '=': " + line);
    std::string key = line.substr(0, eq);
    std::string val = line.substr(eq + 1);
    if (key == "t0") cfg.base.t0 = std::stod(val);
    else if (key == "rho") cfg.base.rho = std::stod(val);
    else if (key == "K") cfg.base.K = std::stoi(val);
    else if (key == "window") cfg.base.window = std::stoi(val);
    else if (key == "tol") cfg.base.tol = std::stod(val);
    else if (key == "div_threshold") cfg.base.div_threshold = std::stod(val);
    else if (key == "seed") cfg.base.seed = std::stoull(val);
    else if (key == "n_dirs") cfg.n_dirs = std::stoi(val);
    else if (key == "delta0") cfg.delta0 = std::stod(val);
    else if (key == "delta_rho") cfg.delta_rho = std::stod(val);
    else if (key == "value_filter") cfg.value_filter = std::stod(val);
    else throw ss::ParseError("unknown config key: " + key);
  }
}

ss::DirectionalSamplingConfig resolve_sampling(const CommonOpts& opts) {
  ss::DirectionalSamplingConfig cfg;
  if (!opts.config_file.empty()) apply_config_file(opts.config_file, cfg);
  if (opts.seed_set) cfg.base.seed = opts.seed;
  if (const char* env = std::getenv("SUBSMOOTH_SEED")) cfg.base.seed = std::stoull(env);
  if (opts.tol > 0.0) cfg.base.tol = opts.tol;
  return cfg;
}

ss::Vec parse_vec(const std::string& text) {
  std::vector<double> coords;
  std::stringstream sstream(text);
  std::string cell;
  while (std::getline(sstream, cell, ',')) coords.push_back(std::stod(cell));
  if (coords.empty()) throw ss::ParseError("empty vector literal");
  return ss::Vec(coords);
}

std::vector<ss::Vec> parse_grid(const std::string& text) {
  // a:b:step (1D)
  double a, b, step;
  char c1, c2;
  std::stringstream sstream(text);
  if (!(sstream >> a >> c1 >> b >> c2 >> step) || c1 != ':' || c2 != ':' || step <= 0.0)
    throw ss::ParseError("grid must be a:b:step with step > 0");
  std::vector<ss::Vec> out;
  for (double x = a; x <= b + 0.5 * step; x += step) out.push_back(ss::Vec{x});
  return out;
}

struct ResolvedFn {
  ss::ScalarFn fn;
  std::optional<ss::SubdiffOracle> exact_oracle;
  std::string name;
};

ResolvedFn resolve_fn(const std::string& text, int min_dim,
                      const ss::DirectionalSamplingConfig& cfg) {
  ResolvedFn out;
  out.name = text;
  if (ss::catalogue::has(text)) {
    const ss::CatalogueEntry& e = ss::catalogue::get(text);
    out.fn = e.fn;
    out.exact_oracle =
        ss::SubdiffOracle{e.exact_subdiff, ss::OracleProvenance::exact_catalogue};
    return out;
  }
  int dim = std::max(min_dim, std::max(1, ss::expression_max_coordinate(text)));
  out.fn = ss::parse_expression(text, dim);
  ss::ScalarFn fn = out.fn;
  ss::DirectionalSamplingConfig ccfg = cfg;
  out.exact_oracle = ss::SubdiffOracle{
      [fn, ccfg](const ss::Vec& x) { return ss::clarke_subdiff(fn, x, ccfg); },
      ss::OracleProvenance::numeric_clarke};
  return out;
}

void emit(const ss::RunReport& report, const CommonOpts& opts) {
  if (!opts.json_out.empty()) {
    std::ofstream out(opts.json_out);
    out << report.dump() << "\n";
  }
}

int run_subderiv(const std::string& fn_text, const std::string& x_text,
                 const std::string& u_text, const std::string& kind, const CommonOpts& opts) {
  ss::DirectionalSamplingConfig cfg = resolve_sampling(opts);
  ss::Vec x = parse_vec(x_text);
  ss::Vec u = parse_vec(u_text);
  ResolvedFn rf = resolve_fn(fn_text, x.dim(), cfg);

  ss::RunReport report;
  report.command = "subderiv";
  report.config_echo = ss::to_json(cfg);
  report.config_echo["fn"] = fn_text;
  report.config_echo["x"] = x.coords();
  report.config_echo["u"] = u.coords();
  report.config_echo["kind"] = kind;

  double t0 = now_seconds();
  ss::TailEstimate est;
  ss::ExtReal value;
  if (kind == "r") {
    est = ss::radial_lower(rf.fn, x, u, cfg.base);
    value = est.liminf_est;
  } else if (kind == "r+") {
    est = ss::radial_upper(rf.fn, x, u, cfg.base);
    value = est.limsup_est;
  } else if (kind == "0") {
    est = ss::clarke(rf.fn, x, u, cfg);
    value = est.limsup_est;
  } else if (kind == "d") {
    est = ss::directional(rf.fn, x, u, cfg);
    value = est.liminf_est;
  } else if (kind == "up") {
    est = ss::clarke_rockafellar(rf.fn, x, u, cfg);
    value = est.limsup_est;
  } else {
    throw ss::ParseError("unknown kind '" + kind + "' (use r, r+, 0, d, up)");
  }
  ss::Verdict lattice = ss::lattice_check(rf.fn, x, u, cfg);
  double dt = now_seconds() - t0;

  report.add_result("estimate",
                    ss::json{{"kind", kind},
                             {"value", ss::to_json(value)},
                             {"tail", ss::to_json(est)},
                             {"lattice", ss::to_json(lattice)}},
                    dt);
  emit(report, opts);

  std::cout << "f^" << kind << "(" << x.str() << "; " << u.str() << ") = " << value.str() << "\n";
  std::cout << "  tail: divergent=" << ss::to_string(est.divergent)
            << " stable=" << (est.stable ? "yes" : "no") << "\n";
  std::cout << "  lattice: " << ss::to_string(lattice.outcome);
  for (const char* key : {"d", "r", "r+", "cr", "clarke"})
    if (lattice.margins.count(key))
      std::cout << "  " << key << "=" << ss::format_g17(lattice.margins.at(key));
  std::cout << "\n";
  bool decisive = est.stable || est.divergent != ss::Divergence::none;
  return decisive ? kExitHolds : kExitInconclusive;
}

int run_classify(const std::string& fn_text, const std::string& x_text,
                 const std::string& u_text, bool strict_only, const std::string& oracle_csv,
                 const CommonOpts& opts) {
  ss::DirectionalSamplingConfig cfg = resolve_sampling(opts);
  ss::Vec x = parse_vec(x_text);
  ss::Vec u = parse_vec(u_text);

  ss::CatalogueEntry entry;
  if (ss::catalogue::has(fn_text)) {
    entry = ss::catalogue::get(fn_text);
  } else {
    ResolvedFn rf = resolve_fn(fn_text, x.dim(), cfg);
    entry.name = fn_text;
    entry.fn = rf.fn;
    ss::SubdiffOracle numeric = *rf.exact_oracle;
    entry.exact_subdiff = numeric.at;
    entry.exact_radial = [fn = rf.fn, base = cfg.base](const ss::Vec& xx, const ss::Vec& uu) {
      return ss::radial_lower(fn, xx, uu, base).liminf_est;
    };
  }
  if (!oracle_csv.empty()) {
    ss::SubdiffOracle user = ss::load_subdiff_csv(oracle_csv);
    entry.exact_subdiff = user.at;
  }

  ss::RecoveryConfig rc;
  rc.sampling = cfg;

  ss::RunReport report;
  report.command = "classify";
  report.config_echo = ss::to_json(rc);
  report.config_echo["fn"] = fn_text;
  report.config_echo["x"] = x.coords();
  report.config_echo["u"] = u.coords();

  double t0 = now_seconds();
  ss::ClassVerdict cv = ss::classify(entry, x, u, rc);
  report.add_result("classify", ss::to_json(cv), now_seconds() - t0);
  emit(report, opts);

  auto line = [](const char* label, const ss::Verdict& v) {
    std::cout << "  " << label << ": " << ss::to_string(v.outcome) << "\n";
  };
  std::cout << "classification of " << fn_text << " at " << x.str() << " toward " << u.str()
            << "\n";
  if (!strict_only) {
    line("radially_accessible", cv.radially_accessible);
    line("upper_semismooth", cv.upper_semismooth);
  }
  line("strictly_upper_semismooth", cv.strictly_upper_semismooth);
  if (!strict_only) {
    line("mifflin_semismooth", cv.mifflin_semismooth);
    line("dir_approx_convex", cv.dir_approx_convex);
    line("dir_lipschitz", cv.dir_lipschitz);
    std::cout << "  radial=" << cv.direct_radial.str()
              << " recovered_directional=" << cv.recovered_value_directional.str()
              << " recovered_full=" << cv.recovered_value_full.str() << "\n";
  }
  if (cv.estimator_inconsistency) {
    std::cout << "  estimator inconsistency flagged\n";
    return kExitFails;
  }
  const ss::Verdict& main = strict_only ? cv.strictly_upper_semismooth : cv.upper_semismooth;
  if (main.fails()) return kExitFails;
  if (main.inconclusive()) return kExitInconclusive;
  return kExitHolds;
}

int run_verify_paper(const std::string& only, const CommonOpts& opts) {
  ss::DirectionalSamplingConfig cfg = resolve_sampling(opts);
  ss::RunReport report;
  report.command = "verify-paper";
  report.config_echo = ss::to_json(cfg);
  report.config_echo["only"] = only;

  int n_fail = 0, n_inconclusive = 0, n_run = 0;
  for (const ss::catalogue::PaperFact& fact : ss::catalogue::paper_fixture_suite()) {
    if (!only.empty() && fact.module_tag != only) continue;
    ++n_run;
    double t0 = now_seconds();
    ss::Verdict v;
    try {
      v = fact.check(cfg.base);
    } catch (const std::exception& e) {
      v.outcome = ss::Outcome::inconclusive;
      v.note(std::string("exception: ") + e.what());
    }
    double dt = now_seconds() - t0;
    report.add_result(fact.module_tag + "/" + fact.fact, ss::to_json(v), dt);
    std::cout << "[" << ss::to_string(v.outcome) << "] " << fact.module_tag;
    if (!fact.entry.empty()) std::cout << " (" << fact.entry << ")";
    std::cout << ": " << fact.fact << "\n";
    if (v.fails()) ++n_fail;
    if (v.inconclusive()) ++n_inconclusive;
  }
  emit(report, opts);
  std::cout << n_run << " fixtures, " << n_fail << " failed, " << n_inconclusive
            << " inconclusive\n";
  if (n_run == 0) {
    std::cerr << "no fixtures match --only " << only << "\n";
    return kExitUsage;
  }
  if (n_fail > 0) return kExitFails;
  if (n_inconclusive > 0) return kExitInconclusive;
  return kExitHolds;
}

int run_determine(const std::string& f_text, const std::string& g_text,
                  const std::string& f_oracle_csv, const std::string& g_oracle_csv,
                  const std::string& grid_text, const std::string& mode_text,
                  const std::string& exceptional, const std::string& csv_out, int n_quad,
                  const CommonOpts& opts) {
  ss::DirectionalSamplingConfig cfg = resolve_sampling(opts);
  std::vector<ss::Vec> grid = parse_grid(grid_text);

  ss::SegmentTask task;
  ResolvedFn f = resolve_fn(f_text, 1, cfg);
  ResolvedFn g = resolve_fn(g_text, 1, cfg);
  task.f = f.fn;
  task.g = g.fn;
  task.f_oracle = f_oracle_csv.empty() ? *f.exact_oracle : ss::load_subdiff_csv(f_oracle_csv);
  task.g_oracle = g_oracle_csv.empty() ? *g.exact_oracle : ss::load_subdiff_csv(g_oracle_csv);
  task.xbar = grid.front();
  task.ybar = grid.back();
  task.mode = mode_text == "semicontinuous" ? ss::SegmentTask::Mode::semicontinuous
                                            : ss::SegmentTask::Mode::continuous;
  if (!exceptional.empty()) {
    std::stringstream sstream(exceptional);
    std::string cell;
    while (std::getline(sstream, cell, ',')) task.C.push_back(std::stod(cell));
  }

  ss::RecoveryConfig rc;
  rc.sampling = cfg;
  if (task.f_oracle.provenance == ss::OracleProvenance::numeric_clarke ||
      task.g_oracle.provenance == ss::OracleProvenance::numeric_clarke)
    n_quad = std::min(n_quad, 512);  // numeric oracles are costly per query

  ss::RunReport report;
  report.command = "determine";
  report.config_echo = ss::to_json(rc);
  report.config_echo["f"] = f_text;
  report.config_echo["g"] = g_text;
  report.config_echo["grid"] = grid_text;
  report.config_echo["mode"] = mode_text;
  report.config_echo["n_quad"] = n_quad;

  double t0 = now_seconds();
  ss::DeterminationReport rep = ss::determination_experiment(task, grid, rc);
  report.add_result("experiment", ss::to_json(rep), now_seconds() - t0);

  if (!csv_out.empty()) {
    std::vector<std::vector<double>> rows;
    for (const auto& [t, r] : ss::recover_profile(task.g_oracle, task.xbar, task.ybar, rc,
                                                  std::min(n_quad, 512)))
      rows.push_back({t, r.as_double()});
    ss::write_csv(csv_out, {"t", "recovered_r"}, rows);
  }
  emit(report, opts);

  std::cout << "inclusion: " << ss::to_string(rep.inclusion_holds.outcome) << "\n";
  const ss::Verdict& hyp =
      task.mode == ss::SegmentTask::Mode::continuous ? rep.hypothesis_51 : rep.hypothesis_52;
  std::cout << "hypotheses: " << ss::to_string(hyp.outcome) << "\n";
  std::cout << "const_estimate: " << ss::format_g17(rep.const_estimate)
            << "  const_deviation: " << ss::format_g17(rep.const_deviation) << "\n";
  std::cout << "theorem: " << ss::to_string(rep.theorem.outcome) << "\n";
  for (const auto& note : rep.inclusion_holds.notes) std::cout << "  " << note << "\n";

  if (rep.theorem.fails() || rep.inclusion_holds.fails()) return kExitFails;
  if (rep.theorem.inconclusive()) return kExitInconclusive;
  return kExitHolds;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical nonsmooth-analysis toolkit"};
  app.require_subcommand(1);

  CommonOpts opts;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", opts.config_file, "key=value config file");
    cmd->add_option("--seed", opts.seed, "sampling seed")->each([&](const std::string&) {
      opts.seed_set = true;
    });
    cmd->add_option("--tol", opts.tol, "comparison tolerance");
    cmd->add_option("--json", opts.json_out, "write the run report to this path");
  };

  std::string fn_text, x_text, u_text, kind = "r";
  CLI::App* subderiv = app.add_subcommand("subderiv", "estimate a subderivative");
  subderiv->add_option("--fn", fn_text, "catalogue name or expression")->required();
  subderiv->add_option("--x", x_text, "point (comma separated)")->required();
  subderiv->add_option("--u", u_text, "direction (comma separated)")->required();
  subderiv->add_option("--kind", kind, "r | r+ | 0 | d | up");
  add_common(subderiv);

  std::string cls_fn, cls_x, cls_u, cls_oracle;
  bool cls_strict = false;
  CLI::App* classify_cmd = app.add_subcommand("classify", "run the semismoothness detectors");
  classify_cmd->add_option("--fn", cls_fn, "catalogue name or expression")->required();
  classify_cmd->add_option("--x", cls_x, "point")->required();
  classify_cmd->add_option("--u", cls_u, "direction")->required();
  classify_cmd->add_flag("--strict", cls_strict, "report only the strict detector");
  classify_cmd->add_option("--oracle", cls_oracle, "CSV subgradient oracle");
  add_common(classify_cmd);

  std::string only;
  CLI::App* verify = app.add_subcommand("verify-paper", "run the built-in fixture suite");
  verify->add_option("--only", only, "restrict to one module tag");
  add_common(verify);

  std::string det_f, det_g, det_fo, det_go, det_grid, det_mode = "continuous", det_C, det_csv;
  int det_quad = 8192;
  CLI::App* determine = app.add_subcommand("determine", "run a determination experiment");
  determine->add_option("--f", det_f, "catalogue name or expression")->required();
  determine->add_option("--g", det_g, "catalogue name or expression")->required();
  determine->add_option("--f-oracle", det_fo, "CSV oracle for f");
  determine->add_option("--g-oracle", det_go, "CSV oracle for g");
  determine->add_option("--grid", det_grid, "a:b:step")->required();
  determine->add_option("--mode", det_mode, "continuous | semicontinuous");
  determine->add_option("--exceptional", det_C, "comma list of exceptional t values");
  determine->add_option("--csv", det_csv, "write (t, recovered r) samples to this path");
  determine->add_option("--quad", det_quad, "quadrature grid size");
  add_common(determine);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (subderiv->parsed()) return run_subderiv(fn_text, x_text, u_text, kind, opts);
    if (classify_cmd->parsed())
      return run_classify(cls_fn, cls_x, cls_u, cls_strict, cls_oracle, opts);
    if (verify->parsed()) return run_verify_paper(only, opts);
    if (determine->parsed())
      return run_determine(det_f, det_g, det_fo, det_go, det_grid, det_mode, det_C, det_csv,
                           det_quad, opts);
  } catch (const ss::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ss::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ss::EstimationError& e) {
    std::cerr << "estimation error: " << e.what() << "\n";
    return kExitEstimation;
  } catch (const ss::ReconstructionError& e) {
    std::cerr << "reconstruction error: " << e.what() << "\n";
    return kExitEstimation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
