#include "cgdlab/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "cgdlab/csv.hpp"
#include "cgdlab/games.hpp"
#include "cgdlab/harness.hpp"
#include "cgdlab/oracles.hpp"
#include "cgdlab/rng.hpp"
#include "cgdlab/svg.hpp"

namespace cgdlab::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

// ---- flag plumbing ---------------------------------------------------------

// Optional per-flag overrides layered on top of a config file (or the
// defaults); only flags the user actually passed take effect.
struct RunFlags {
  std::string config_path;
  std::optional<std::string> game, rule, init;
  std::optional<double> eta, gamma, cg_eps;
  std::optional<long long> iters, record_every, max_passes;
  std::optional<std::uint64_t> seed;
  std::optional<int> cg_max_iters;
  std::optional<int> gan_hidden, gan_layers, gan_noise, gan_batch;
  bool no_rmsprop = false;
  bool neumann_truncate_rhs = false;
  bool no_cgd_alternate = false;
};

void add_run_flags(CLI::App* cmd, RunFlags& f) {
  cmd->add_option("--config", f.config_path,
                  "key=value config file; flags override its entries");
  cmd->add_option("--game", f.game,
                  "game spec: bilinear:a, quadratic-cc:a, quadratic-xc:a, "
                  "covariance:d, gmm-gan");
  cmd->add_option("--rule", f.rule,
                  "update rule: gda, lcgd, sga, conopt, ogda, cgd, "
                  "cgd-neumann:N");
  cmd->add_option("--eta", f.eta, "stepsize");
  cmd->add_option("--gamma", f.gamma, "SGA/ConOpt weight");
  cmd->add_option("--cg-eps", f.cg_eps, "CG relative tolerance (default 1e-6)");
  cmd->add_option("--cg-max-iters", f.cg_max_iters, "CG iteration cap");
  cmd->add_option("--iters", f.iters, "outer iterations");
  cmd->add_option("--seed", f.seed, "run seed");
  cmd->add_option("--init", f.init,
                  "initial state: default, random, or coordinate list");
  cmd->add_option("--record-every", f.record_every, "recording cadence");
  cmd->add_option("--passes", f.max_passes,
                  "stop after this many forward passes (0 = unlimited)");
  cmd->add_option("--gan-hidden", f.gan_hidden, "gmm-gan hidden units");
  cmd->add_option("--gan-layers", f.gan_layers, "gmm-gan hidden layers");
  cmd->add_option("--gan-noise", f.gan_noise, "gmm-gan noise dimension");
  cmd->add_option("--gan-batch", f.gan_batch, "gmm-gan batch size per side");
  cmd->add_flag("--no-rmsprop", f.no_rmsprop, "disable RMSProp for gmm-gan");
  cmd->add_flag("--neumann-truncate-rhs", f.neumann_truncate_rhs,
                "drop the competitive term from the partial-sum RHS");
  cmd->add_flag("--no-cgd-alternate", f.no_cgd_alternate,
                "always solve player 1's CGD system");
}

harness::RunConfig apply_flags(const RunFlags& f, harness::RunConfig base) {
  if (!f.config_path.empty())
    base = config_from_text(read_text_file(f.config_path), std::move(base));
  if (f.game) base.game = *f.game;
  if (f.rule) base.rule = *f.rule;
  if (f.eta) base.hp.eta = *f.eta;
  if (f.gamma) base.hp.gamma = *f.gamma;
  if (f.cg_eps) base.hp.cg_epsilon = *f.cg_eps;
  if (f.cg_max_iters) base.hp.cg_max_iters = *f.cg_max_iters;
  if (f.iters) base.iterations = *f.iters;
  if (f.seed) base.seed = *f.seed;
  if (f.init) base.init = config_from_kv({{"init", *f.init}}, base).init;
  if (f.record_every) base.record_every = *f.record_every;
  if (f.max_passes) base.max_passes = *f.max_passes;
  if (f.gan_hidden) base.gan_hidden_units = *f.gan_hidden;
  if (f.gan_layers) base.gan_hidden_layers = *f.gan_layers;
  if (f.gan_noise) base.gan_noise_dim = *f.gan_noise;
  if (f.gan_batch) base.gan_batch = *f.gan_batch;
  if (f.no_rmsprop) base.gan_rmsprop = false;
  if (f.neumann_truncate_rhs) base.hp.neumann_truncate_rhs = true;
  if (f.no_cgd_alternate) base.cgd_alternate_sides = false;
  return base;
}

// ---- shared helpers -----------------------------------------------------------

std::string sanitize(std::string text) {
  for (char& c : text)
    if (c == ':') c = '-';
  return text;
}

std::string format_param(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

std::string verdict_of(const harness::Trajectory& t) {
  if (t.termination != harness::Termination::completed) return "diverges";
  if (static_cast<int>(t.points.size()) < 20) return "undecided";
  return harness::verdict_name(harness::convergence_verdict(t));
}

bool is_gan_game(const std::string& game) {
  return game.rfind("gmm-gan", 0) == 0;
}

nets::GanConfig gan_config_of(const harness::RunConfig& cfg) {
  nets::GanConfig gc;
  gc.noise_dim = cfg.gan_noise_dim;
  gc.batch_real = cfg.gan_batch;
  gc.batch_fake = cfg.gan_batch;
  return gc;
}

constexpr int kGanSampleCount = 4096;
constexpr double kModeRadiusMult = 3.0;

std::vector<std::array<double, 2>> gan_samples(const harness::RunConfig& cfg,
                                               const JointState& final_state) {
  harness::GameBundle bundle = harness::make_game(cfg);
  return bundle.sample2d(final_state, kGanSampleCount, cfg.seed + 4096033);
}

std::string samples_to_csv(const std::vector<std::array<double, 2>>& samples) {
  std::string out = "sample_x,sample_y\n";
  for (const auto& s : samples) {
    out += format_double(s[0]);
    out += ',';
    out += format_double(s[1]);
    out += '\n';
  }
  return out;
}

ordered_json manifest_entry(const std::string& file,
                            const harness::SweepEntry& entry,
                            const ResultRecord* record) {
  ordered_json j;
  j["file"] = file;
  j["config_hash"] = config_hash_hex(entry.config);
  j["config"] = config_to_kv(entry.config);
  if (entry.skipped) {
    j["skipped"] = true;
    j["skip_reason"] = entry.skip_reason;
    return j;
  }
  j["skipped"] = false;
  j["verdict"] = record->verdict;
  j["termination"] = record->termination;
  j["rows"] = record->rows.size();
  j["total_passes"] = entry.trajectory.total_passes;
  j["final_residual"] = entry.trajectory.points.back().residual;
  return j;
}

void write_manifest(const fs::path& dir, const std::string& experiment,
                    ordered_json runs) {
  ordered_json manifest;
  manifest["schema"] = "cgdlab-manifest-v1";
  manifest["experiment"] = experiment;
  manifest["csv_schema"] =
      "iter,x...,y...,norm,log10norm,residual,fwd_passes,cg_iters_x,"
      "cg_iters_y";
  manifest["coordinate_columns"] =
      "x0..x{m-1},y0..y{n-1} present when m+n <= 16, otherwise omitted";
  manifest["runs"] = std::move(runs);
  write_text_file((dir / "manifest.json").string(), manifest.dump(2) + "\n");
}

// ---- run ---------------------------------------------------------------------

struct RunCmdOpts {
  RunFlags flags;
  std::string out = "run.csv";
  std::string json_out;
};

int cmd_run(const RunCmdOpts& opts) {
  harness::RunConfig cfg = apply_flags(opts.flags, {});
  cfg.validate();
  const harness::Trajectory traj = harness::run(cfg);
  const std::string verdict = verdict_of(traj);

  const std::string run_id = fs::path(opts.out).stem().string();
  const ResultRecord record = record_from_trajectory(run_id, traj, verdict);
  write_text_file(opts.out, to_csv(record));

  std::cout << "run " << run_id << ": game=" << cfg.game << " rule=" << cfg.rule
            << " eta=" << format_param(cfg.hp.eta) << "\n";
  std::cout << "termination: " << record.termination;
  if (!traj.termination_note.empty())
    std::cout << " (" << traj.termination_note << ")";
  std::cout << "\n";
  std::cout << "verdict: " << verdict << "\n";
  const auto& last = traj.points.back();
  std::cout << "final: iter=" << last.iter << " norm=" << format_double(last.norm)
            << " residual=" << format_double(last.residual)
            << " passes=" << last.cum_passes << "\n";
  std::cout << "wrote " << opts.out << " (" << record.rows.size() << " rows)\n";

  ordered_json sidecar;
  if (!opts.json_out.empty()) {
    sidecar["run_id"] = run_id;
    sidecar["config"] = config_to_kv(cfg);
    sidecar["config_hash"] = config_hash_hex(cfg);
    sidecar["verdict"] = verdict;
    sidecar["termination"] = record.termination;
    sidecar["rows"] = record.rows.size();
    sidecar["total_passes"] = traj.total_passes;
    sidecar["final_residual"] = last.residual;
  }

  if (is_gan_game(cfg.game) && traj.final_state.n() > 0) {
    const auto samples = gan_samples(cfg, traj.final_state);
    const auto coverage =
        harness::mode_coverage(samples, gan_config_of(cfg), kModeRadiusMult);
    const fs::path samples_path =
        fs::path(opts.out).parent_path() / (run_id + "_samples.csv");
    write_text_file(samples_path.string(), samples_to_csv(samples));
    std::cout << "mode coverage: mode1=" << format_param(coverage.mode1)
              << " mode2=" << format_param(coverage.mode2)
              << " other=" << format_param(coverage.other) << "\n";
    std::cout << "wrote " << samples_path.string() << "\n";
    if (!opts.json_out.empty()) {
      sidecar["mode_coverage"] = {{"mode1", coverage.mode1},
                                  {"mode2", coverage.mode2},
                                  {"other", coverage.other}};
    }
  }

  if (!opts.json_out.empty())
    write_text_file(opts.json_out, sidecar.dump(2) + "\n");
  return 0;
}

// ---- experiment -----------------------------------------------------------------

struct ExperimentOpts {
  std::string name;
  std::string out_dir;
  RunFlags flags;
  std::optional<double> alpha;
  std::optional<int> d;
  std::optional<std::string> test;
};

std::vector<double> filtered(std::vector<double> values,
                             const std::optional<double>& only) {
  if (!only) return values;
  return {*only};
}

int cmd_experiment(const ExperimentOpts& opts) {
  harness::SweepGrid grid;
  std::string experiment = opts.name;

  if (opts.name == "exp1") {
    std::vector<std::string> tests = {"bilinear", "quadratic-cc",
                                      "quadratic-xc"};
    if (opts.test) {
      if (std::find(tests.begin(), tests.end(), *opts.test) == tests.end())
        throw std::invalid_argument(
            "--test must be bilinear, quadratic-cc, or quadratic-xc");
      tests = {*opts.test};
    }
    const std::vector<double> alphas = filtered({1.0, 3.0, 6.0}, opts.alpha);
    for (const auto& t : tests)
      for (const double a : alphas)
        grid.games.push_back(t + ":" + format_param(a));
    grid.rules = {"gda", "lcgd", "sga", "conopt", "ogda", "cgd"};
    grid.etas = {0.2};
    grid.base.iterations = 50;
    grid.base.record_every = 1;
  } else if (opts.name == "exp2") {
    std::vector<int> dims = {20, 40, 60};
    if (opts.d) dims = {*opts.d};
    for (const int d : dims)
      grid.games.push_back("covariance:" + std::to_string(d));
    grid.rules = {"ogda", "sga", "conopt", "cgd"};
    grid.etas = {0.005, 0.025, 0.1, 0.4};
    grid.seeds = {7};
    grid.base.iterations = 200000;
    grid.base.max_passes = 50000;
    grid.base.record_every = 10;
  } else if (opts.name == "exp3") {
    grid.games = {"gmm-gan"};
    grid.rules = {"sga", "conopt", "ogda", "cgd"};
    grid.etas = {0.4, 0.1, 0.025, 0.005};
    grid.seeds = {1};
    grid.base.iterations = 300;
    grid.base.record_every = 10;
  } else {
    throw std::invalid_argument("unknown experiment '" + opts.name +
                                "'; valid: exp1 exp2 exp3");
  }

  if (opts.flags.rule) grid.rules = {*opts.flags.rule};
  if (opts.flags.eta) grid.etas = {*opts.flags.eta};
  if (opts.flags.gamma) grid.gammas = {*opts.flags.gamma};
  if (opts.flags.seed) grid.seeds = {*opts.flags.seed};

  RunFlags base_flags = opts.flags;
  base_flags.rule = base_flags.game = std::nullopt;
  base_flags.eta = base_flags.gamma = std::nullopt;
  base_flags.seed = std::nullopt;
  grid.base = apply_flags(base_flags, grid.base);

  const fs::path dir =
      opts.out_dir.empty() ? fs::path("results_" + opts.name) : fs::path(opts.out_dir);
  fs::create_directories(dir);

  const auto entries = harness::sweep(grid);

  ordered_json runs = ordered_json::array();
  int written = 0;
  for (const auto& entry : entries) {
    std::string run_id = experiment + "_" + sanitize(entry.config.game) + "_" +
                         sanitize(entry.config.rule);
    if (grid.etas.size() > 1 || opts.name != "exp1")
      run_id += "_eta" + format_param(entry.config.hp.eta);

    if (entry.skipped) {
      runs.push_back(manifest_entry("", entry, nullptr));
      std::cout << "skip " << run_id << ": " << entry.skip_reason << "\n";
      continue;
    }
    const std::string verdict = verdict_of(entry.trajectory);
    const ResultRecord record =
        record_from_trajectory(run_id, entry.trajectory, verdict);
    const std::string file = run_id + ".csv";
    write_text_file((dir / file).string(), to_csv(record));
    ++written;

    ordered_json j = manifest_entry(file, entry, &record);
    if (is_gan_game(entry.config.game)) {
      const auto samples = gan_samples(entry.config, entry.trajectory.final_state);
      const auto coverage = harness::mode_coverage(
          samples, gan_config_of(entry.config), kModeRadiusMult);
      const std::string samples_file = run_id + "_samples.csv";
      write_text_file((dir / samples_file).string(), samples_to_csv(samples));
      j["samples_file"] = samples_file;
      j["mode_coverage"] = {{"mode1", coverage.mode1},
                            {"mode2", coverage.mode2},
                            {"other", coverage.other}};
    }
    runs.push_back(std::move(j));
    std::cout << run_id << ": " << verdict << " (" << record.termination
              << ", " << record.rows.size() << " rows)\n";
  }
  write_manifest(dir, experiment, std::move(runs));
  std::cout << "wrote " << written << " result file(s) + manifest to " << dir.string()
            << "\n";
  return 0;
}

// ---- plot ---------------------------------------------------------------------

struct PlotOpts {
  std::vector<std::string> inputs;
  std::string kind = "lognorm";
  std::string out = "plot.svg";
};

double clamped_log10(double v) { return std::log10(std::max(v, 1e-300)); }

int cmd_plot(const PlotOpts& opts) {
  if (opts.inputs.empty())
    throw std::invalid_argument("plot: no input files given");

  std::vector<Series> series;
  PlotOptions po;
  po.scatter = opts.kind == "scatter2d";

  for (const auto& path : opts.inputs) {
    const std::string label = fs::path(path).stem().string();
    const std::string text = read_text_file(path);
    Series s;
    s.label = label;

    if (opts.kind == "scatter2d") {
      // sample_x,sample_y files
      std::istringstream in(text);
      std::string line;
      if (!std::getline(in, line) || line != "sample_x,sample_y")
        throw std::runtime_error(path + ": not a samples file (want header sample_x,sample_y)");
      while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
          throw std::runtime_error(path + ": malformed sample row");
        s.points.emplace_back(std::stod(line.substr(0, comma)),
                              std::stod(line.substr(comma + 1)));
      }
      po.title = "generator samples";
      po.x_label = "x";
      po.y_label = "y";
    } else {
      const ParsedCsv parsed = parse_csv(text, path);
      if (opts.kind == "trajectory") {
        if (parsed.coord_m < 1 || parsed.coord_n < 1)
          throw std::runtime_error(path +
                                   ": no coordinate columns; trajectory plots "
                                   "need a low-dimensional game");
        for (const auto& row : parsed.rows)
          s.points.emplace_back(row.coords_x[0], row.coords_y[0]);
        po.title = "strategy trajectory";
        po.x_label = "x0";
        po.y_label = "y0";
      } else if (opts.kind == "lognorm") {
        for (const auto& row : parsed.rows)
          s.points.emplace_back(static_cast<double>(row.iter), row.log10_norm);
        po.title = "iterate norm";
        po.x_label = "iteration k";
        po.y_label = "log10 ||(x_k, y_k)||";
      } else if (opts.kind == "residual-vs-passes") {
        for (const auto& row : parsed.rows)
          s.points.emplace_back(static_cast<double>(row.fwd_passes),
                                clamped_log10(row.residual));
        po.title = "residual decay";
        po.x_label = "forward passes";
        po.y_label = "log10 residual";
      } else {
        throw std::invalid_argument(
            "unknown plot kind '" + opts.kind +
            "'; valid: trajectory lognorm residual-vs-passes scatter2d");
      }
    }
    series.push_back(std::move(s));
  }

  write_text_file(opts.out, render_plot(series, po));
  std::cout << "wrote " << opts.out << " (" << series.size() << " series)\n";
  return 0;
}

// ---- validate -------------------------------------------------------------------

std::vector<JointState> scalar_probe_states(int count, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<JointState> states;
  states.reserve(count);
  for (int i = 0; i < count; ++i)
    states.push_back({{rng.uniform(-2.0, 2.0)}, {rng.uniform(-2.0, 2.0)}});
  return states;
}

std::vector<JointState> boxed_probe_states(int count, int m, int n,
                                           std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<JointState> states;
  states.reserve(count);
  for (int i = 0; i < count; ++i) {
    JointState s;
    s.x.resize(m);
    s.y.resize(n);
    for (double& e : s.x) e = rng.uniform(-1.0, 1.0);
    for (double& e : s.y) e = rng.uniform(-1.0, 1.0);
    states.push_back(std::move(s));
  }
  return states;
}

// Largest relative gap between analytic and finite-difference HVPs over
// seeded probe pairs.
double fd_cross_check(const GameOracle& o,
                      const std::vector<JointState>& states,
                      std::uint64_t seed) {
  const oracles::FdHvpOracle fd(o);
  SplitMix64 rng(seed);
  double worst = 0.0;
  for (const auto& s : states) {
    Vec vy(o.dim_y());
    Vec vx(o.dim_x());
    for (double& e : vy) e = rng.uniform(-1.0, 1.0);
    for (double& e : vx) e = rng.uniform(-1.0, 1.0);
    const struct {
      Vec got, want;
    } checks[] = {
        {fd.hvp_xy_f(s, vy), o.hvp_xy_f(s, vy)},
        {fd.hvp_yx_g(s, vx), o.hvp_yx_g(s, vx)},
        {fd.hvp_xx_f(s, vx), o.hvp_xx_f(s, vx)},
        {fd.hvp_yy_g(s, vy), o.hvp_yy_g(s, vy)},
    };
    for (const auto& c : checks) {
      const double scale = std::max({nrm2(c.want), nrm2(c.got), 1.0});
      worst = std::max(worst, nrm2(sub(c.got, c.want)) / scale);
    }
  }
  return worst;
}

int cmd_validate() {
  struct Target {
    std::string game;
    int probes;
    double tol;
  };
  const std::vector<Target> targets = {
      {"bilinear:1", 100, 1e-8},   {"bilinear:3", 100, 1e-8},
      {"bilinear:6", 100, 1e-8},   {"quadratic-cc:1", 100, 1e-8},
      {"quadratic-cc:6", 100, 1e-8}, {"quadratic-xc:1", 100, 1e-8},
      {"covariance:3", 20, 1e-8},  {"covariance:6", 10, 1e-8},
  };

  bool ok = true;
  for (const auto& t : targets) {
    harness::RunConfig cfg;
    cfg.game = t.game;
    cfg.seed = 42;
    harness::GameBundle bundle = harness::make_game(cfg);
    const int m = bundle.oracle->dim_x();
    const int n = bundle.oracle->dim_y();
    const auto states = m == 1 && n == 1
                            ? scalar_probe_states(t.probes, 42)
                            : boxed_probe_states(t.probes, m, n, 42);
    const auto report = validate_oracle(*bundle.oracle, states, t.tol);
    const double fd_gap = fd_cross_check(*bundle.oracle, states, 77);
    const bool pass = report.passed() && fd_gap <= 1e-6;
    ok = ok && pass;
    std::cout << (pass ? "PASS " : "FAIL ") << t.game
              << "  oracle-checks=" << (report.passed() ? "ok" : report.summary())
              << "  fd-gap=" << format_param(fd_gap) << "\n";
  }

  {
    // Reduced GAN oracle: finite-difference products bound the tolerance.
    harness::RunConfig cfg;
    cfg.game = "gmm-gan";
    cfg.gan_hidden_units = 8;
    cfg.gan_hidden_layers = 2;
    cfg.gan_noise_dim = 4;
    cfg.gan_batch = 8;
    cfg.seed = 5;
    harness::GameBundle bundle = harness::make_game(cfg);
    std::vector<JointState> states;
    for (std::uint64_t s = 0; s < 3; ++s)
      states.push_back(bundle.default_init(cfg.seed + s));
    const auto report = validate_oracle(*bundle.oracle, states, 1e-4);
    ok = ok && report.passed();
    std::cout << (report.passed() ? "PASS " : "FAIL ") << "gmm-gan(reduced)"
              << "  oracle-checks="
              << (report.passed() ? "ok" : report.summary()) << "\n";
  }

  std::cout << (ok ? "all oracles pass" : "oracle validation FAILED") << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int run_main(int argc, char** argv) {
  CLI::App app{"competitive-games lab: update rules, equilibrium solver, "
               "experiment harness"};
  app.require_subcommand(1);

  RunCmdOpts run_opts;
  auto* run_cmd = app.add_subcommand("run", "execute one configuration");
  add_run_flags(run_cmd, run_opts.flags);
  run_cmd->add_option("--out", run_opts.out, "output CSV path")
      ->capture_default_str();
  run_cmd->add_option("--json", run_opts.json_out,
                      "also write a JSON summary to this path");

  ExperimentOpts exp_opts;
  auto* exp_cmd =
      app.add_subcommand("experiment", "run a preset grid (exp1, exp2, exp3)");
  exp_cmd->add_option("name", exp_opts.name, "exp1 | exp2 | exp3")->required();
  exp_cmd->add_option("--out", exp_opts.out_dir,
                      "output directory (default results_<name>)");
  exp_cmd->add_option("--alpha", exp_opts.alpha, "narrow exp1 to one alpha");
  exp_cmd->add_option("--d", exp_opts.d, "narrow exp2 to one dimension");
  exp_cmd->add_option("--test", exp_opts.test,
                      "narrow exp1 to one test case (bilinear, quadratic-cc, "
                      "quadratic-xc)");
  add_run_flags(exp_cmd, exp_opts.flags);

  PlotOpts plot_opts;
  auto* plot_cmd = app.add_subcommand("plot", "render result CSVs to SVG");
  plot_cmd->add_option("inputs", plot_opts.inputs, "result files")->required();
  plot_cmd->add_option("--kind", plot_opts.kind,
                       "trajectory | lognorm | residual-vs-passes | scatter2d")
      ->capture_default_str();
  plot_cmd->add_option("--out", plot_opts.out, "output SVG path")
      ->capture_default_str();

  auto* validate_cmd =
      app.add_subcommand("validate", "run oracle self-checks on built-in games");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (run_cmd->parsed()) return cmd_run(run_opts);
    if (exp_cmd->parsed()) return cmd_experiment(exp_opts);
    if (plot_cmd->parsed()) return cmd_plot(plot_opts);
    if (validate_cmd->parsed()) return cmd_validate();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace cgdlab::cli
