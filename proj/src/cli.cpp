#include "hive/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hive/gradcheck.hpp"
#include "hive/lrc_lattice.hpp"
#include "hive/lrc_oracle.hpp"
#include "hive/lrc_rounded.hpp"
#include "hive/optimize.hpp"
#include "hive/run_record.hpp"
#include "hive/surface.hpp"

namespace hive {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitInfeasible = 4;

double now_ms() {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

int env_threads() {
  if (const char* t = std::getenv("HIVE_THREADS")) {
    const int v = std::atoi(t);
    if (v > 0) return v;
  }
  return 0;
}

Eigen::VectorXd parse_vector(const std::string& csv) {
  std::vector<double> vals;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) vals.push_back(std::stod(item));
  }
  Eigen::VectorXd v(static_cast<int>(vals.size()));
  for (size_t i = 0; i < vals.size(); ++i) v[static_cast<int>(i)] = vals[i];
  return v;
}

std::pair<long long, long long> parse_range(const std::string& text) {
  const auto pos = text.find(':');
  if (pos == std::string::npos) throw CLI::ValidationError("--int-range expects LO:HI");
  return {std::stoll(text.substr(0, pos)), std::stoll(text.substr(pos + 1))};
}

std::vector<int> parse_dims(const std::string& text) {
  const auto pos = text.find("..");
  std::vector<int> dims;
  if (pos == std::string::npos) {
    dims.push_back(std::stoi(text));
  } else {
    const int lo = std::stoi(text.substr(0, pos));
    const int hi = std::stoi(text.substr(pos + 2));
    for (int n = lo; n <= hi; ++n) dims.push_back(n);
  }
  return dims;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw HiveError("cannot open output file: " + path);
  out << text;
}

void emit(const RunRecord& rec, const std::string& out_path) {
  const std::string text = rec.to_json().dump(2) + "\n";
  if (out_path.empty()) std::cout << text;
  else write_text(out_path, text);
}

/** Values from --config override the flag values (flat key -> value). */
void apply_config(json& cfg, const std::string& config_path) {
  if (config_path.empty()) return;
  std::ifstream in(config_path);
  if (!in) throw HiveError("cannot open config file: " + config_path);
  json file = json::parse(in);
  if (file.contains("config")) file = file["config"];  // accept a RunRecord too
  for (auto it = file.begin(); it != file.end(); ++it) cfg[it.key()] = it.value();
}

OptimizerSettings settings_from(const json& cfg) {
  OptimizerSettings s;
  s.method = cfg.value("method", std::string("trust-region")) == "gradient-descent"
                 ? OptMethod::GradientDescent
                 : OptMethod::TrustRegion;
  s.grad_norm_tol = cfg.value("tol", 1e-7);
  s.max_iters = cfg.value("max_iters", 500);
  s.retries_per_coefficient = cfg.value("retries", 5);
  s.retries_per_hive = cfg.value("hive_retries", 5);
  s.threads = env_threads();
  return s;
}

EnsembleSpec ensemble_from(const json& cfg, int dim) {
  EnsembleSpec spec;
  spec.kind = parse_ensemble(cfg.value("ensemble", std::string("GOE")));
  spec.n = dim;
  spec.seed = cfg.value("seed", 0ULL);
  const auto range = parse_range(cfg.value("int_range", std::string("1:50")));
  spec.int_low = range.first;
  spec.int_high = range.second;
  return spec;
}

Pairing pairing_from(const json& cfg) {
  const std::string p = cfg.value("pairing", std::string("independent"));
  if (p == "identical") return Pairing::Identical;
  if (p == "independent") return Pairing::Independent;
  throw CLI::ValidationError("--pairing must be identical or independent");
}

WeightTriple triple_from(const json& cfg) {
  return WeightTriple(parse_vector(cfg.at("mu").get<std::string>()),
                      parse_vector(cfg.at("nu").get<std::string>()),
                      parse_vector(cfg.at("lambda").get<std::string>()));
}

json deficiency_json(const ValidationReport& report) {
  json defs = json::array();
  for (const Deficiency& d : report.deficiencies) {
    defs.push_back({{"orientation", to_string(d.rhombus.orientation)},
                    {"acute", {{d.rhombus.acute[0].j, d.rhombus.acute[0].k},
                               {d.rhombus.acute[1].j, d.rhombus.acute[1].k}}},
                    {"obtuse", {{d.rhombus.obtuse[0].j, d.rhombus.obtuse[0].k},
                                {d.rhombus.obtuse[1].j, d.rhombus.obtuse[1].k}}},
                    {"magnitude", d.magnitude}});
  }
  return defs;
}

int run_gen(const json& cfg) {
  const EnsembleSpec spec = ensemble_from(cfg, cfg.value("dim", 4));
  const Pairing pairing = pairing_from(cfg);
  const int trials = cfg.value("trials", 1);
  const OptimizerSettings settings = settings_from(cfg);
  const std::string out = cfg.value("out", std::string());
  const std::string diag_path = cfg.value("diag", std::string());

  RunRecord rec = RunRecord::start("gen", cfg);
  const double t0 = now_ms();

  std::ostringstream diag;
  json results = json::array();
  for (int t = 0; t < trials; ++t) {
    EnsembleSpec s = spec;
    s.seed = derive_seed(spec.seed, 0x7472, static_cast<std::uint64_t>(t));
    const MatrixPair pair = sample(s, pairing);
    const GenerateResult gen = generate_hive(pair, settings, derive_seed(s.seed, 0x6f));
    for (const CoefficientDiagnostic& d : gen.diagnostics) {
      diag << json{{"trial", t},
                   {"j", d.j},
                   {"k", d.k},
                   {"value", d.result.value},
                   {"grad_norm", d.result.grad_norm},
                   {"iterations", d.result.iterations},
                   {"attempts", d.result.attempts},
                   {"converged", d.result.converged}}
                  .dump()
           << '\n';
    }
    results.push_back({{"trial", t},
                       {"seed", s.seed},
                       {"is_hive", gen.report.is_hive},
                       {"passes", gen.passes},
                       {"deficiencies", deficiency_json(gen.report)},
                       {"hive", json::parse(gen.hive.to_json(gen.triple))}});
  }
  rec.outputs = {{"results", results}};
  rec.elapsed_ms = now_ms() - t0;
  if (!diag_path.empty()) write_text(diag_path, diag.str());
  emit(rec, out);
  return kExitOk;
}

int run_validate(const json& cfg) {
  const std::string in_path = cfg.at("in").get<std::string>();
  std::ifstream in(in_path);
  if (!in) throw HiveError("cannot open hive file: " + in_path);
  std::stringstream buf;
  buf << in.rdbuf();
  const auto [hive, triple] = Hive::from_json(buf.str());
  const ValidationReport report = validate_hive(hive, cfg.value("tolerance", 1e-9));

  RunRecord rec = RunRecord::start("validate", cfg);
  rec.outputs = {{"is_hive", report.is_hive}, {"deficiencies", deficiency_json(report)}};
  emit(rec, cfg.value("out", std::string()));
  return kExitOk;
}

int run_stats(const json& cfg) {
  const EnsembleSpec spec = ensemble_from(cfg, cfg.value("dim", 4));
  const Pairing pairing = pairing_from(cfg);
  const int samples = cfg.value("samples", 60);
  const OptimizerSettings settings = settings_from(cfg);
  const std::string mode = cfg.value("curvature_mode", std::string("ensemble"));

  RunRecord rec = RunRecord::start("stats", cfg);
  const double t0 = now_ms();

  // sample until the requested number of valid hives is gathered
  std::vector<Hive> hives;
  const int max_attempts = 60 * std::max(1, samples);
  for (int t = 0; t < max_attempts && static_cast<int>(hives.size()) < samples; ++t) {
    EnsembleSpec s = spec;
    s.seed = derive_seed(spec.seed, 0x7374, static_cast<std::uint64_t>(t));
    const GenerateResult gen =
        generate_hive(sample(s, pairing), settings, derive_seed(s.seed, 0x6f));
    if (gen.report.is_hive) hives.push_back(gen.hive);
  }
  if (static_cast<int>(hives.size()) < samples) {
    throw HiveError("ensemble failed to produce enough hives");
  }

  const HiveSurface mean = mean_surface(hives);
  const CurvatureField field =
      mode == "mean" ? curvature_of_mean(hives) : mean_curvature_field(hives);

  std::ostringstream csv;
  csv << "j,k,x,y,height,K,H\n";
  const int n = mean.n;
  for (int j = 0; j <= n; ++j) {
    for (int k = 0; j + k <= n; ++k) {
      const int id = vertex_id(n, j, k);
      csv << j << ',' << k << ',' << mean.positions(id, 0) << ',' << mean.positions(id, 1)
          << ',' << mean.heights[id] << ',' << field.gaussian[id] << ',' << field.mean[id]
          << '\n';
    }
  }
  const std::string out = cfg.value("out", std::string());
  rec.outputs = {{"samples", samples},
                 {"curvature_mode", mode},
                 {"csv", out.empty() ? json() : json(out)}};
  rec.elapsed_ms = now_ms() - t0;
  if (out.empty()) {
    std::cout << csv.str();
  } else {
    write_text(out, csv.str());
    emit(rec, out + ".json");
  }
  return kExitOk;
}

int run_gradcheck(const json& cfg) {
  RunRecord rec = RunRecord::start("gradcheck", cfg);
  const double t0 = now_ms();
  const GradCheckReport report = gradient_check(
      cfg.value("dim", 6), cfg.value("trials", 20), cfg.value("seed", 0ULL));
  rec.elapsed_ms = now_ms() - t0;
  rec.outputs = {{"grad_slope_min", report.grad_slope_min},
                 {"grad_slope_max", report.grad_slope_max},
                 {"hess_slope_min", report.hess_slope_min},
                 {"hess_slope_max", report.hess_slope_max},
                 {"tangent_residual_max", report.tangent_residual_max},
                 {"hess_symmetry_max", report.hess_symmetry_max}};
  std::cout << "The slope should be 2. It appears to be: " << report.grad_slope_min
            << " .. " << report.grad_slope_max << "\n"
            << "Tangent-space residual: " << report.tangent_residual_max << "\n"
            << "The slope should be 3. It appears to be: " << report.hess_slope_min
            << " .. " << report.hess_slope_max << "\n"
            << "Hessian symmetry defect: " << report.hess_symmetry_max << "\n";
  emit(rec, cfg.value("out", std::string()));
  return kExitOk;
}

int run_probability(const json& cfg) {
  const Pairing pairing = pairing_from(cfg);
  const int trials = cfg.value("trials", 50);
  const OptimizerSettings settings = settings_from(cfg);
  const auto dims = parse_dims(cfg.value("dim", std::string("4")));

  RunRecord rec = RunRecord::start("probability", cfg);
  const double t0 = now_ms();

  std::ostringstream csv;
  csv << "ensemble,dim,trials,successes,p_hat,ci_low,ci_high\n";
  json rows = json::array();
  for (int n : dims) {
    const EnsembleSpec spec = ensemble_from(cfg, n);
    const ProbabilityResult res = success_probability(spec, pairing, trials, settings);
    csv << to_string(spec.kind) << ',' << n << ',' << res.trials << ',' << res.successes
        << ',' << res.p_hat << ',' << res.ci_low << ',' << res.ci_high << '\n';
    rows.push_back({{"ensemble", to_string(spec.kind)},
                    {"dim", n},
                    {"trials", res.trials},
                    {"successes", res.successes},
                    {"p_hat", res.p_hat},
                    {"ci_low", res.ci_low},
                    {"ci_high", res.ci_high},
                    {"trial_seeds", res.trial_seeds}});
  }
  rec.outputs = {{"rows", rows}};
  rec.elapsed_ms = now_ms() - t0;
  const std::string out = cfg.value("out", std::string());
  if (out.empty()) {
    std::cout << csv.str();
  } else {
    write_text(out, csv.str());
    emit(rec, out + ".json");
  }
  return kExitOk;
}

int run_lrc_exact(const json& cfg) {
  RunRecord rec = RunRecord::start("lrc exact", cfg);
  const double t0 = now_ms();
  const LatticeEnumeration result =
      exact_lrc(triple_from(cfg), cfg.value("cap", 1000000LL));
  rec.elapsed_ms = now_ms() - t0;
  rec.outputs = {{"count", result.count},
                 {"nodes_visited", result.nodes_visited},
                 {"elapsed", rec.elapsed_ms / 1000.0}};
  emit(rec, cfg.value("out", std::string()));
  return kExitOk;
}

int run_lrc_rounded(const json& cfg) {
  RunRecord rec = RunRecord::start("lrc rounded", cfg);
  const double t0 = now_ms();
  const RoundedLrcResult result =
      rounded_lrc(triple_from(cfg), cfg.value("rel_error", 0.05),
                  cfg.value("seed", 0ULL), cfg.value("dilation", 2.0));
  rec.elapsed_ms = now_ms() - t0;
  rec.outputs = {{"estimate", result.estimate},
                 {"f", result.f},
                 {"vol_Q", result.vol_q},
                 {"samples", result.samples},
                 {"elapsed", rec.elapsed_ms / 1000.0}};
  emit(rec, cfg.value("out", std::string()));
  return kExitOk;
}

int run_lrc_lattice(const json& cfg) {
  RunRecord rec = RunRecord::start("lrc lattice", cfg);
  const double t0 = now_ms();
  const LatticeLrcResult result = lattice_lrc(
      triple_from(cfg), cfg.value("rel_error", 0.05), cfg.value("seed", 0ULL));
  rec.elapsed_ms = now_ms() - t0;
  json ratios = json::array();
  for (const RatioEstimate& r : result.ratios) {
    ratios.push_back({{"outer_level", r.outer_level},
                      {"inner_level", r.inner_level},
                      {"hits", r.hits},
                      {"total", r.total},
                      {"ratio", r.ratio}});
  }
  rec.outputs = {{"estimate", result.estimate},
                 {"infeasible", result.infeasible},
                 {"xi_star", result.schedule.xi_star},
                 {"levels", result.schedule.levels},
                 {"ratios", ratios},
                 {"inner_count", result.inner_count},
                 {"stalled_flag", result.stalled_flag},
                 {"samples", result.samples},
                 {"elapsed", rec.elapsed_ms / 1000.0}};
  emit(rec, cfg.value("out", std::string()));
  return result.infeasible ? kExitInfeasible : kExitOk;
}

}  // namespace

int dispatch(std::vector<std::string> args) {
  CLI::App app{"combinatorial hives: generation, validation, geometry, and "
               "Littlewood-Richardson estimation"};
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path, "JSON config overriding flags");

  // flag targets shared across subcommands; each subcommand snapshots the
  // ones it uses into its own json config
  std::string ensemble = "GOE", pairing = "independent", int_range = "1:50";
  std::string dim_text = "4", method = "trust-region";
  std::string mu, nu, lambda, out, diag, in_path, curvature_mode = "ensemble";
  int trials = 1, samples = 60, max_iters = 500, retries = 5, hive_retries = 5;
  int dim = 4;
  long long cap = 1000000;
  double rel_error = 0.05, tol = 1e-7, tolerance = 1e-9, dilation = 2.0;
  std::uint64_t seed = 0;

  auto add_ensemble_flags = [&](CLI::App* cmd) {
    cmd->add_option("--ensemble", ensemble, "GOE|SPD|SPD_DD|SID|FID");
    cmd->add_option("--pairing", pairing, "identical|independent");
    cmd->add_option("--int-range", int_range, "LO:HI for diagonal ensembles");
    cmd->add_option("--seed", seed, "base RNG seed");
  };
  auto add_opt_flags = [&](CLI::App* cmd) {
    cmd->add_option("--method", method, "trust-region|gradient-descent");
    cmd->add_option("--tol", tol, "gradient-norm tolerance");
    cmd->add_option("--max-iters", max_iters, "iteration cap per attempt");
    cmd->add_option("--retries", retries, "restarts per coefficient");
    cmd->add_option("--hive-retries", hive_retries, "whole-hive passes");
  };

  CLI::App* gen = app.add_subcommand("gen", "generate hives from a matrix ensemble");
  add_ensemble_flags(gen);
  add_opt_flags(gen);
  gen->add_option("--dim", dim, "matrix dimension");
  gen->add_option("--trials", trials, "number of matrix pairs");
  gen->add_option("--out", out, "result JSON path");
  gen->add_option("--diag", diag, "JSON-lines diagnostics path");

  CLI::App* validate = app.add_subcommand("validate", "check the rhombus inequalities");
  validate->add_option("--in", in_path, "hive JSON path")->required();
  validate->add_option("--tolerance", tolerance, "violation tolerance");
  validate->add_option("--out", out, "result JSON path");

  CLI::App* stats = app.add_subcommand("stats", "mean surface and curvature of an ensemble");
  add_ensemble_flags(stats);
  add_opt_flags(stats);
  stats->add_option("--dim", dim, "matrix dimension");
  stats->add_option("--samples", samples, "valid hives to gather");
  stats->add_option("--curvature-mode", curvature_mode, "ensemble|mean");
  stats->add_option("--out", out, "CSV path");

  CLI::App* gradcheck = app.add_subcommand("gradcheck", "finite-difference derivative checks");
  gradcheck->add_option("--dim", dim, "maximum matrix dimension");
  gradcheck->add_option("--trials", trials, "random cases");
  gradcheck->add_option("--seed", seed, "base RNG seed");
  gradcheck->add_option("--out", out, "result JSON path");

  CLI::App* probability = app.add_subcommand("probability", "hive-success probability sweep");
  add_ensemble_flags(probability);
  add_opt_flags(probability);
  probability->add_option("--dim", dim_text, "matrix dimension or range lo..hi");
  probability->add_option("--range", int_range, "LO:HI for diagonal ensembles");
  probability->add_option("--trials", trials, "trials per dimension");
  probability->add_option("--out", out, "CSV path");

  CLI::App* lrc = app.add_subcommand("lrc", "Littlewood-Richardson estimation");
  lrc->require_subcommand(1);
  auto add_lrc_flags = [&](CLI::App* cmd) {
    cmd->add_option("--mu", mu, "comma-separated weakly decreasing weights")->required();
    cmd->add_option("--nu", nu, "comma-separated weakly decreasing weights")->required();
    cmd->add_option("--lambda", lambda, "comma-separated weakly decreasing weights")->required();
    cmd->add_option("--out", out, "result JSON path");
  };
  CLI::App* lrc_exact = lrc->add_subcommand("exact", "exhaustive lattice count");
  add_lrc_flags(lrc_exact);
  lrc_exact->add_option("--cap", cap, "node budget");
  CLI::App* lrc_rounded = lrc->add_subcommand("rounded", "continuum volume estimator");
  add_lrc_flags(lrc_rounded);
  lrc_rounded->add_option("--rel-error", rel_error, "relative error target");
  lrc_rounded->add_option("--seed", seed, "RNG seed");
  lrc_rounded->add_option("--dilation", dilation, "polytope dilation");
  CLI::App* lrc_lattice = lrc->add_subcommand("lattice", "direct lattice estimator");
  add_lrc_flags(lrc_lattice);
  lrc_lattice->add_option("--rel-error", rel_error, "relative error target");
  lrc_lattice->add_option("--seed", seed, "RNG seed");

  // let --config (defined on the root) be given after a subcommand name
  for (CLI::App* sub : app.get_subcommands({})) {
    sub->fallthrough();
    for (CLI::App* nested : sub->get_subcommands({})) nested->fallthrough();
  }

  try {
    std::reverse(args.begin(), args.end());  // CLI11 parses reversed vectors
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    json cfg;
    cfg["seed"] = seed;
    if (gen->parsed() || stats->parsed() || probability->parsed()) {
      cfg["ensemble"] = ensemble;
      cfg["pairing"] = pairing;
      cfg["int_range"] = int_range;
      cfg["method"] = method;
      cfg["tol"] = tol;
      cfg["max_iters"] = max_iters;
      cfg["retries"] = retries;
      cfg["hive_retries"] = hive_retries;
      cfg["trials"] = trials;
    }
    if (!out.empty()) cfg["out"] = out;

    if (gen->parsed()) {
      cfg["dim"] = dim;
      if (!diag.empty()) cfg["diag"] = diag;
      apply_config(cfg, config_path);
      return run_gen(cfg);
    }
    if (validate->parsed()) {
      cfg["in"] = in_path;
      cfg["tolerance"] = tolerance;
      apply_config(cfg, config_path);
      return run_validate(cfg);
    }
    if (stats->parsed()) {
      cfg["dim"] = dim;
      cfg["samples"] = samples;
      cfg["curvature_mode"] = curvature_mode;
      apply_config(cfg, config_path);
      return run_stats(cfg);
    }
    if (gradcheck->parsed()) {
      cfg["dim"] = dim;
      cfg["trials"] = trials;
      apply_config(cfg, config_path);
      return run_gradcheck(cfg);
    }
    if (probability->parsed()) {
      cfg["dim"] = dim_text;
      apply_config(cfg, config_path);
      return run_probability(cfg);
    }
    if (lrc_exact->parsed() || lrc_rounded->parsed() || lrc_lattice->parsed()) {
      cfg["mu"] = mu;
      cfg["nu"] = nu;
      cfg["lambda"] = lambda;
      if (lrc_exact->parsed()) {
        cfg["cap"] = cap;
        apply_config(cfg, config_path);
        return run_lrc_exact(cfg);
      }
      cfg["rel_error"] = rel_error;
      if (lrc_rounded->parsed()) {
        cfg["dilation"] = dilation;
        apply_config(cfg, config_path);
        return run_lrc_rounded(cfg);
      }
      apply_config(cfg, config_path);
      return run_lrc_lattice(cfg);
    }
    return kExitUsage;
  } catch (const InfeasibleLP& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const EmptyPolytope& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const HiveError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
}

}  // namespace hive
