#include "cgdlab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "cgdlab/games.hpp"
#include "cgdlab/oracles.hpp"
#include "cgdlab/rng.hpp"

namespace cgdlab::harness {

namespace {

std::string join_fields(const std::vector<std::string>& fields) {
  std::ostringstream out;
  out << "invalid config:";
  for (const auto& f : fields) out << " [" << f << "]";
  return out.str();
}

}  // namespace

ConfigError::ConfigError(std::vector<std::string> bad_fields)
    : std::runtime_error(join_fields(bad_fields)), fields(std::move(bad_fields)) {}

void RunConfig::validate() const {
  std::vector<std::string> bad;
  if (iterations < 0) bad.push_back("iterations must be >= 0");
  if (record_every < 1) bad.push_back("record_every must be >= 1");
  if (max_passes < 0) bad.push_back("max_passes must be >= 0");
  try {
    hp.validate();
  } catch (const std::exception& e) {
    bad.push_back(e.what());
  }
  try {
    rules::parse_rule(rule);
  } catch (const std::exception& e) {
    bad.push_back(e.what());
  }
  if (gan_hidden_units < 1) bad.push_back("gan_hidden_units must be >= 1");
  if (gan_hidden_layers < 1) bad.push_back("gan_hidden_layers must be >= 1");
  if (gan_noise_dim < 1) bad.push_back("gan_noise_dim must be >= 1");
  if (gan_batch < 1) bad.push_back("gan_batch must be >= 1");
  if (!bad.empty()) throw ConfigError(std::move(bad));
}

// ---- game registry -----------------------------------------------------------

namespace {

struct Registry {
  std::map<std::string, std::function<GameBundle(const RunConfig&)>> factories;
  std::mutex mutex;
};

Registry& registry() {
  static Registry r;
  return r;
}

std::pair<std::string, std::string> split_game(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) return {text, ""};
  return {text.substr(0, colon), text.substr(colon + 1)};
}

double parse_param(const std::string& game, const std::string& value) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument("trailing junk");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad parameter '" + value + "' for game '" +
                                game + "'");
  }
}

JointState scalar_default_init() { return {{0.5}, {0.5}}; }

GameBundle scalar_bundle(std::string name, std::shared_ptr<GameOracle> oracle) {
  GameBundle b;
  b.name = std::move(name);
  b.oracle = std::move(oracle);
  b.default_init = [](std::uint64_t) { return scalar_default_init(); };
  // Scalar games track distance to the origin equilibrium.
  b.residual = [](const JointState& s) { return joint_norm(s); };
  return b;
}

GameBundle make_builtin(const RunConfig& cfg) {
  const auto [name, param] = split_game(cfg.game);
  if (name == "bilinear") {
    const double alpha = param.empty() ? 1.0 : parse_param(name, param);
    return scalar_bundle(cfg.game,
                         std::make_shared<games::BilinearGame>(alpha));
  }
  if (name == "quadratic-cc" || name == "quadratic-xc") {
    const double alpha = param.empty() ? 1.0 : parse_param(name, param);
    const auto sign = name == "quadratic-cc"
                          ? games::QuadraticSign::convex_concave
                          : games::QuadraticSign::concave_convex;
    return scalar_bundle(cfg.game,
                         std::make_shared<games::QuadraticGame>(alpha, sign));
  }
  if (name == "covariance") {
    const int d = param.empty() ? 20 : static_cast<int>(parse_param(name, param));
    if (d < 1) throw std::invalid_argument("covariance: d must be >= 1");
    auto game = std::make_shared<games::CovarianceGame>(d, cfg.seed);
    GameBundle b;
    b.name = cfg.game;
    b.oracle = game;
    b.default_init = [game](std::uint64_t seed) {
      return game->initial_state(seed + 1);
    };
    b.residual = [game](const JointState& s) { return game->residual(s); };
    return b;
  }
  if (name == "gmm-gan") {
    nets::GanConfig gan_cfg;
    gan_cfg.noise_dim = cfg.gan_noise_dim;
    gan_cfg.batch_real = cfg.gan_batch;
    gan_cfg.batch_fake = cfg.gan_batch;
    std::vector<int> gen_dims{cfg.gan_noise_dim};
    std::vector<int> disc_dims{2};
    for (int l = 0; l < cfg.gan_hidden_layers; ++l) {
      gen_dims.push_back(cfg.gan_hidden_units);
      disc_dims.push_back(cfg.gan_hidden_units);
    }
    gen_dims.push_back(2);
    disc_dims.push_back(1);
    auto game = std::make_shared<nets::GanOracle>(gan_cfg, gen_dims, disc_dims,
                                                  cfg.seed);
    GameBundle b;
    b.name = cfg.game;
    b.oracle = game;
    b.default_init = [game](std::uint64_t seed) {
      return game->initial_state(seed);
    };
    b.residual = [game](const JointState& s) { return game->eval_f(s); };
    b.on_iteration = [game]() { game->resample_minibatch(); };
    b.sample2d = [game](const JointState& s, int count, std::uint64_t seed) {
      return game->generate(s, count, seed);
    };
    b.use_rmsprop = cfg.gan_rmsprop;
    b.rmsprop_rho = gan_cfg.rmsprop_rho;
    b.rmsprop_eps = gan_cfg.rmsprop_eps;
    return b;
  }
  std::ostringstream msg;
  msg << "unknown game '" << cfg.game << "'; valid games:";
  for (const auto& g : game_names()) msg << " " << g;
  throw std::invalid_argument(msg.str());
}

}  // namespace

const std::vector<std::string>& game_names() {
  static const std::vector<std::string> names = {
      "bilinear:alpha", "quadratic-cc:alpha", "quadratic-xc:alpha",
      "covariance:d", "gmm-gan"};
  return names;
}

void register_game(const std::string& name,
                   std::function<GameBundle(const RunConfig&)> factory) {
  auto& r = registry();
  std::lock_guard<std::mutex> lock(r.mutex);
  r.factories[name] = std::move(factory);
}

GameBundle make_game(const RunConfig& cfg) {
  const auto [name, param] = split_game(cfg.game);
  {
    auto& r = registry();
    std::lock_guard<std::mutex> lock(r.mutex);
    const auto it = r.factories.find(name);
    if (it != r.factories.end()) return it->second(cfg);
  }
  return make_builtin(cfg);
}

// ---- run loop ------------------------------------------------------------------

namespace {

JointState build_initial_state(const RunConfig& cfg, const GameBundle& bundle) {
  const int m = bundle.oracle->dim_x();
  const int n = bundle.oracle->dim_y();
  switch (cfg.init.kind) {
    case InitSpec::Kind::game_default:
      return bundle.default_init(cfg.seed);
    case InitSpec::Kind::explicit_state: {
      if (static_cast<int>(cfg.init.coords.size()) != m + n)
        throw ConfigError({"init coords must have m+n entries"});
      JointState s;
      s.x.assign(cfg.init.coords.begin(), cfg.init.coords.begin() + m);
      s.y.assign(cfg.init.coords.begin() + m, cfg.init.coords.end());
      return s;
    }
    case InitSpec::Kind::seeded_random: {
      SplitMix64 rng(cfg.seed);
      JointState s;
      s.x.resize(m);
      s.y.resize(n);
      for (double& e : s.x) e = rng.uniform(-0.5, 0.5);
      for (double& e : s.y) e = rng.uniform(-0.5, 0.5);
      return s;
    }
  }
  throw std::logic_error("unreachable init kind");
}

double safe_log10(double norm) {
  return std::log10(std::max(norm, 1e-300));
}

TrajectoryPoint make_point(long long iter, const JointState& s,
                           const GameBundle& bundle, long long cum_passes,
                           int cg_x, int cg_y) {
  TrajectoryPoint p;
  p.iter = iter;
  p.state = s;
  p.norm = joint_norm(s);
  p.log10_norm = safe_log10(p.norm);
  p.residual = bundle.residual ? bundle.residual(s) : p.norm;
  p.cum_passes = cum_passes;
  p.cg_iterations_x = cg_x;
  p.cg_iterations_y = cg_y;
  return p;
}

}  // namespace

Trajectory run(const RunConfig& cfg) {
  GameBundle bundle = make_game(cfg);
  return run_with_bundle(cfg, bundle);
}

Trajectory run_with_bundle(const RunConfig& cfg, GameBundle& bundle) {
  cfg.validate();
  const rules::RuleSpec rule = rules::parse_rule(cfg.rule);
  if (rule.requires_zero_sum() && !bundle.oracle->is_zero_sum()) {
    throw rules::UnsupportedRuleError(rule.name() +
                                      " is defined for zero-sum games (g = -f) only");
  }

  oracles::PassCounter counter;
  oracles::CountingOracle counted(*bundle.oracle, counter);

  HyperParams hp = cfg.hp;
  hp.neumann_order = rule.kind == rules::RuleKind::cgd_neumann
                         ? rule.neumann_order
                         : hp.neumann_order;

  Trajectory traj;
  traj.config = cfg;

  JointState s = build_initial_state(cfg, bundle);
  require_dims(*bundle.oracle, s);

  rules::OgdaMemory ogda_mem;
  nets::RmsState rms;

  traj.points.push_back(make_point(0, s, bundle, 0, 0, 0));

  for (long long k = 0; k < cfg.iterations; ++k) {
    if (bundle.on_iteration) bundle.on_iteration();

    const long long passes_before = counter.forward_passes;
    rules::StepReport report;
    switch (rule.kind) {
      case rules::RuleKind::gda:
        report = rules::step_gda(counted, s, hp);
        break;
      case rules::RuleKind::lcgd:
        report = rules::step_lcgd(counted, s, hp);
        break;
      case rules::RuleKind::sga:
        report = rules::step_sga(counted, s, hp);
        break;
      case rules::RuleKind::conopt:
        report = rules::step_conopt(counted, s, hp);
        break;
      case rules::RuleKind::ogda: {
        auto [r, mem] = rules::step_ogda(counted, s, hp, ogda_mem);
        report = std::move(r);
        ogda_mem = std::move(mem);
        break;
      }
      case rules::RuleKind::cgd: {
        const auto side = (!cfg.cgd_alternate_sides || k % 2 == 0)
                              ? rules::SolveSide::player1
                              : rules::SolveSide::player2;
        report = rules::step_cgd(counted, s, hp, side);
        break;
      }
      case rules::RuleKind::cgd_neumann:
        report = rules::step_neumann(counted, s, hp);
        break;
    }
    report.forward_passes = counter.forward_passes - passes_before;

    if (report.diverged) {
      // No step was applied; the diagnostic explains the stop.
      traj.termination = report.diagnostic.rfind("cg", 0) == 0
                             ? Termination::cg_failed
                             : Termination::diverged;
      traj.termination_step = k;
      traj.termination_note = report.diagnostic;
      break;
    }

    if (bundle.use_rmsprop) {
      const Vec gx = counted.grad_x_f(s);
      const Vec gy = counted.grad_y_g(s);
      report.delta_x = nets::rmsprop_scale(report.delta_x, gx,
                                           rms.second_moment_x,
                                           bundle.rmsprop_rho, bundle.rmsprop_eps);
      report.delta_y = nets::rmsprop_scale(report.delta_y, gy,
                                           rms.second_moment_y,
                                           bundle.rmsprop_rho, bundle.rmsprop_eps);
      rms.initialized_x = rms.initialized_y = true;
    }

    axpy(1.0, report.delta_x, s.x);
    axpy(1.0, report.delta_y, s.y);
    traj.steps_taken = k + 1;

    const bool budget_spent =
        cfg.max_passes > 0 && counter.forward_passes >= cfg.max_passes;
    const bool diverged_now = is_diverged(s);
    const bool record = diverged_now || budget_spent ||
                        (k + 1) % cfg.record_every == 0 ||
                        k + 1 == cfg.iterations;
    if (record) {
      traj.points.push_back(make_point(k + 1, s, bundle,
                                       counter.forward_passes,
                                       report.cg_iterations_x,
                                       report.cg_iterations_y));
      traj.reports.push_back(std::move(report));
    }
    if (diverged_now) {
      traj.termination = Termination::diverged;
      traj.termination_step = k;
      break;
    }
    if (budget_spent) break;
  }

  traj.final_state = s;
  traj.total_passes = counter.forward_passes;
  return traj;
}

// ---- sweep ------------------------------------------------------------------

namespace {

int sweep_thread_cap() {
  if (const char* env = std::getenv("CGDLAB_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace

std::vector<SweepEntry> sweep(const SweepGrid& grid) {
  if (grid.games.empty()) throw ConfigError({"sweep games list is empty"});
  if (grid.rules.empty()) throw ConfigError({"sweep rules list is empty"});
  if (grid.etas.empty()) throw ConfigError({"sweep etas list is empty"});
  if (grid.gammas.empty()) throw ConfigError({"sweep gammas list is empty"});
  if (grid.seeds.empty()) throw ConfigError({"sweep seeds list is empty"});

  std::vector<RunConfig> configs;
  for (const auto& game : grid.games)
    for (const auto& rule : grid.rules)
      for (const double eta : grid.etas)
        for (const double gamma : grid.gammas)
          for (const std::uint64_t seed : grid.seeds) {
            RunConfig cfg = grid.base;
            cfg.game = game;
            cfg.rule = rule;
            cfg.hp.eta = eta;
            cfg.hp.gamma = gamma;
            cfg.seed = seed;
            configs.push_back(std::move(cfg));
          }

  std::vector<SweepEntry> results(configs.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= configs.size()) return;
      SweepEntry& entry = results[i];
      entry.config = configs[i];
      try {
        entry.trajectory = run(configs[i]);
      } catch (const rules::UnsupportedRuleError& e) {
        entry.skipped = true;
        entry.skip_reason = e.what();
      }
    }
  };

  const int threads =
      std::min<std::size_t>(sweep_thread_cap(), configs.size());
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return results;
}

// ---- verdicts ------------------------------------------------------------------

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::converges:
      return "converges";
    case Verdict::diverges:
      return "diverges";
    case Verdict::cycles:
      return "cycles";
    case Verdict::undecided:
      return "undecided";
  }
  return "?";
}

Verdict convergence_verdict(const Trajectory& t, int window, double grow_tol,
                            double shrink_tol) {
  if (t.termination != Termination::completed) return Verdict::diverges;
  if (window < 2) throw std::invalid_argument("verdict window must be >= 2");
  if (static_cast<int>(t.points.size()) < window)
    throw std::invalid_argument("trajectory shorter than the verdict window");

  const std::size_t start = t.points.size() - window;
  double first = t.points[start].log10_norm;
  double last = t.points.back().log10_norm;
  double lo = first;
  double hi = first;
  for (std::size_t i = start; i < t.points.size(); ++i) {
    lo = std::min(lo, t.points[i].log10_norm);
    hi = std::max(hi, t.points[i].log10_norm);
  }

  const double delta = last - first;
  if (delta <= -shrink_tol) return Verdict::converges;
  if (delta >= grow_tol) return Verdict::diverges;
  if (hi - lo < grow_tol) return Verdict::cycles;
  return Verdict::undecided;
}

ModeCoverage mode_coverage(const std::vector<std::array<double, 2>>& samples,
                           const nets::GanConfig& cfg, double radius_mult) {
  if (samples.empty())
    throw std::invalid_argument("mode_coverage: empty sample list");
  const double radius = radius_mult * cfg.sigma;
  long long n1 = 0;
  long long n2 = 0;
  for (const auto& s : samples) {
    const double d1 = std::hypot(s[0] - cfg.mu1[0], s[1] - cfg.mu1[1]);
    const double d2 = std::hypot(s[0] - cfg.mu2[0], s[1] - cfg.mu2[1]);
    if (d1 <= d2 && d1 <= radius) {
      ++n1;
    } else if (d2 < d1 && d2 <= radius) {
      ++n2;
    }
  }
  ModeCoverage mc;
  const double total = static_cast<double>(samples.size());
  mc.mode1 = n1 / total;
  mc.mode2 = n2 / total;
  mc.other = (samples.size() - n1 - n2) / total;
  return mc;
}

}  // namespace cgdlab::harness
