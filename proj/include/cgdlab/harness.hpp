#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "cgdlab/core.hpp"
#include "cgdlab/nets.hpp"
#include "cgdlab/rules.hpp"

namespace cgdlab::harness {

// ---- configuration -----------------------------------------------------------

struct InitSpec {
  enum class Kind { game_default, explicit_state, seeded_random };
  Kind kind = Kind::game_default;
  Vec coords;  // x entries then y entries, for explicit_state
};

struct RunConfig {
  std::string game = "bilinear:1";
  std::string rule = "gda";
  HyperParams hp;
  long long iterations = 50;
  InitSpec init;
  std::uint64_t seed = 0;
  long long record_every = 1;
  long long max_passes = 0;  // 0 = no forward-pass budget
  bool cgd_alternate_sides = true;

  // gmm-gan architecture knobs (reduced scale by default).
  int gan_hidden_units = 32;
  int gan_hidden_layers = 2;
  int gan_noise_dim = 16;
  int gan_batch = 64;
  bool gan_rmsprop = true;

  // Throws ConfigError listing every offending field.
  void validate() const;
};

struct ConfigError : std::runtime_error {
  explicit ConfigError(std::vector<std::string> bad_fields);
  std::vector<std::string> fields;
};

// ---- game registry -------------------------------------------------------------

// Everything the run loop needs to know about a game beyond the oracle:
// how to build a start state, which scalar to put in the residual column,
// per-iteration upkeep (minibatch resampling), and optional 2-d sampling
// for generator-style games.
struct GameBundle {
  std::string name;
  std::shared_ptr<GameOracle> oracle;
  std::function<JointState(std::uint64_t seed)> default_init;
  std::function<double(const JointState&)> residual;
  std::function<void()> on_iteration;  // may be null
  std::function<std::vector<std::array<double, 2>>(const JointState&, int,
                                                   std::uint64_t)>
      sample2d;  // may be null
  bool use_rmsprop = false;
  double rmsprop_rho = 0.9;
  double rmsprop_eps = 1e-8;
};

// Builds a bundle from the config's game string:
//   bilinear:alpha | quadratic-cc:alpha | quadratic-xc:alpha |
//   covariance:d | gmm-gan
// Unknown names raise std::invalid_argument listing the valid ones.
GameBundle make_game(const RunConfig& cfg);

// Test/extension hook: a factory registered under `name` (the part before
// ':') takes precedence over the built-ins.
void register_game(const std::string& name,
                   std::function<GameBundle(const RunConfig&)> factory);

const std::vector<std::string>& game_names();

// ---- trajectories -----------------------------------------------------------

enum class Termination { completed, diverged, cg_failed };

struct TrajectoryPoint {
  long long iter = 0;  // 0 is the initial state
  JointState state;
  double norm = 0.0;
  double log10_norm = 0.0;
  double residual = 0.0;
  long long cum_passes = 0;
  int cg_iterations_x = 0;
  int cg_iterations_y = 0;
};

struct Trajectory {
  RunConfig config;
  std::vector<TrajectoryPoint> points;          // sampled every record_every
  std::vector<rules::StepReport> reports;       // one per recorded step
  JointState final_state;
  Termination termination = Termination::completed;
  long long termination_step = -1;
  std::string termination_note;
  long long steps_taken = 0;
  long long total_passes = 0;
};

// Runs one configuration. Deterministic given the seed; stops early on a
// divergence flag, keeping the recorded prefix.
Trajectory run(const RunConfig& cfg);

// Same loop against a caller-supplied bundle (used by tests and sweep).
Trajectory run_with_bundle(const RunConfig& cfg, GameBundle& bundle);

// ---- sweeps -----------------------------------------------------------------

struct SweepGrid {
  std::vector<std::string> games;
  std::vector<std::string> rules;
  std::vector<double> etas;
  std::vector<double> gammas{1.0};
  std::vector<std::uint64_t> seeds{0};
  RunConfig base;  // iteration/recording/budget defaults for every run
};

struct SweepEntry {
  RunConfig config;
  bool skipped = false;
  std::string skip_reason;
  Trajectory trajectory;  // meaningful when !skipped
};

// Runs the full cartesian grid (games x rules x etas x gammas x seeds) in
// that nesting order. Rules that reject a game (e.g. SGA on a
// general-sum oracle) yield skipped entries, not errors. Runs may execute
// on several threads (capped by CGDLAB_THREADS); results keep grid order.
std::vector<SweepEntry> sweep(const SweepGrid& grid);

// ---- analysis -----------------------------------------------------------------

enum class Verdict { converges, diverges, cycles, undecided };

std::string verdict_name(Verdict v);

// Classifies the trailing `window` recorded points of the trajectory by
// the movement of log10 ||(x, y)||: more than shrink_tol decades down is
// convergence, more than grow_tol decades up (or a divergence-flagged
// termination) is divergence, a flat band narrower than grow_tol decades
// is cycling. Requires at least `window` recorded points.
Verdict convergence_verdict(const Trajectory& t, int window = 20,
                            double grow_tol = 1.0, double shrink_tol = 1.0);

struct ModeCoverage {
  double mode1 = 0.0;
  double mode2 = 0.0;
  double other = 0.0;
};

// Classifies each sample to the nearest mixture mean when it lies within
// radius_mult * sigma of it, else "other". Fractions sum to 1.
ModeCoverage mode_coverage(const std::vector<std::array<double, 2>>& samples,
                           const nets::GanConfig& cfg, double radius_mult);

}  // namespace cgdlab::harness
