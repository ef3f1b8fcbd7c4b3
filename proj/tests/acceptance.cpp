// Acceptance suite: each criterion prints exactly one PASS/FAIL line and
// the binary exits nonzero if any requested criterion fails. Run with no
// arguments for all criteria, or pass criterion numbers.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cgdlab/csv.hpp"
#include "cgdlab/games.hpp"
#include "cgdlab/harness.hpp"
#include "cgdlab/linalg.hpp"
#include "cgdlab/nets.hpp"
#include "cgdlab/oracles.hpp"
#include "cgdlab/rng.hpp"
#include "cgdlab/rules.hpp"
#include "test_util.hpp"

using namespace cgdlab;
namespace fs = std::filesystem;
namespace tu = cgdlab::testutil;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

HyperParams hp(double eta, double gamma = 1.0) {
  HyperParams h;
  h.eta = eta;
  h.gamma = gamma;
  return h;
}

JointState stepped(const JointState& s, const rules::StepReport& r) {
  JointState out = s;
  axpy(1.0, r.delta_x, out.x);
  axpy(1.0, r.delta_y, out.y);
  return out;
}

harness::Verdict run_verdict(const std::string& game, const std::string& rule,
                             double eta, double gamma, int iters = 50) {
  harness::RunConfig cfg;
  cfg.game = game;
  cfg.rule = rule;
  cfg.hp = hp(eta, gamma);
  cfg.iterations = iters;
  const auto t = harness::run(cfg);
  return harness::convergence_verdict(t);
}

// 1. Closed-form CGD step on bilinear alpha=1, eta=0.2 at (0.5, 0.5):
//    dx = -0.2 (1 + 0.04)^{-1} (0.5 + 0.2*0.5) = -3/26
//    dy = -0.2 (-0.5 + (-1)(-3/26))            = +1/13
bool criterion_1(std::string& detail) {
  Check c;
  const games::BilinearGame game(1.0);
  const auto r = rules::step_cgd(game, {{0.5}, {0.5}}, hp(0.2));
  const double want_dx = -3.0 / 26.0;
  const double want_dy = 1.0 / 13.0;
  {
    std::ostringstream os;
    os << "dx=" << r.delta_x[0] << " want " << want_dx << "; dy=" << r.delta_y[0]
       << " want " << want_dy;
    detail = os.str();
  }
  c.expect(std::abs(r.delta_x[0] - want_dx) <= 1e-9, detail);
  c.expect(std::abs(r.delta_y[0] - want_dy) <= 1e-9, detail);
  return c.ok;
}

// 2. Per-step norm ratios over 50 iterations: CGD 1/sqrt(1+e^2a^2), GDA
//    sqrt(1+e^2a^2), each within 1e-10, alpha in {1,3,6}; CGD's ratio < 1
//    (convergence), and at alpha=6 the five comparators all get verdict
//    "diverges".
bool criterion_2(std::string& detail) {
  Check c;
  const double eta = 0.2;
  for (const double alpha : {1.0, 3.0, 6.0}) {
    const games::BilinearGame game(alpha);
    const double cgd_factor = 1.0 / std::sqrt(1.0 + eta * eta * alpha * alpha);
    const double gda_factor = std::sqrt(1.0 + eta * eta * alpha * alpha);
    c.expect(cgd_factor < 1.0, "cgd factor not contractive");

    JointState s{{0.5}, {0.5}};
    for (int k = 0; k < 50; ++k) {
      const double before = joint_norm(s);
      s = stepped(s, rules::step_cgd(game, s, hp(eta),
                                     k % 2 == 0 ? rules::SolveSide::player1
                                                : rules::SolveSide::player2));
      std::ostringstream os;
      os << "cgd ratio off at alpha=" << alpha << " step " << k << ": "
         << joint_norm(s) / before << " want " << cgd_factor;
      c.expect(std::abs(joint_norm(s) / before - cgd_factor) <= 1e-10, os.str());
    }
    s = {{0.5}, {0.5}};
    for (int k = 0; k < 50; ++k) {
      const double before = joint_norm(s);
      s = stepped(s, rules::step_gda(game, s, hp(eta)));
      std::ostringstream os;
      os << "gda ratio off at alpha=" << alpha << " step " << k;
      c.expect(std::abs(joint_norm(s) / before - gda_factor) <= 1e-10, os.str());
    }
  }
  for (const char* rule : {"gda", "lcgd", "sga", "conopt", "ogda"}) {
    const auto v = run_verdict("bilinear:6", rule, eta, 1.0);
    std::ostringstream os;
    os << rule << " at alpha=6 got " << harness::verdict_name(v);
    c.expect(v == harness::Verdict::diverges, os.str());
  }
  detail = c.detail;
  return c.ok;
}

// 3. SGA and ConOpt coincide exactly on bilinear games.
bool criterion_3(std::string& detail) {
  Check c;
  SplitMix64 rng(77);
  for (const double alpha : {1.0, 3.0, 6.0}) {
    const games::BilinearGame game(alpha);
    for (const double gamma : {0.2, 0.5, 1.0}) {
      for (const double eta : {0.2, 0.9}) {
        const JointState s{{rng.uniform(-1, 1)}, {rng.uniform(-1, 1)}};
        const auto sga = rules::step_sga(game, s, hp(eta, gamma));
        const auto conopt = rules::step_conopt(game, s, hp(eta, gamma));
        std::ostringstream os;
        os << "mismatch at alpha=" << alpha << " gamma=" << gamma
           << " eta=" << eta;
        c.expect(sga.delta_x == conopt.delta_x && sga.delta_y == conopt.delta_y,
                 os.str());
      }
    }
  }
  detail = c.detail;
  return c.ok;
}

// 4. CGD stepsize monotonicity on bilinear alpha=6: measured per-step
//    contraction factors match 1/sqrt(1+eta^2 alpha^2) within 1e-6 and the
//    eta=0.9 factor is strictly smaller.
bool criterion_4(std::string& detail) {
  Check c;
  const games::BilinearGame game(6.0);
  auto measured_factor = [&](double eta) {
    JointState s{{0.5}, {0.5}};
    const double before = joint_norm(s);
    s = stepped(s, rules::step_cgd(game, s, hp(eta)));
    return joint_norm(s) / before;
  };
  const double f02 = measured_factor(0.2);
  const double f09 = measured_factor(0.9);
  const double want02 = 1.0 / std::sqrt(1.0 + 0.04 * 36.0);   // 0.6401844
  const double want09 = 1.0 / std::sqrt(1.0 + 0.81 * 36.0);   // 0.1820885
  {
    std::ostringstream os;
    os << "factors: eta=0.2 -> " << f02 << " (want " << want02
       << "), eta=0.9 -> " << f09 << " (want " << want09 << ")";
    detail = os.str();
  }
  c.expect(std::abs(f02 - want02) <= 1e-6, detail);
  c.expect(std::abs(f09 - want09) <= 1e-6, detail);
  c.expect(f09 < f02, detail);
  return c.ok;
}

// 5. Convex-concave verdicts at eta=0.2, gamma=1.0.
bool criterion_5(std::string& detail) {
  Check c;
  const std::vector<std::string> all = {"gda", "lcgd", "sga",
                                        "conopt", "ogda", "cgd"};
  for (const auto& rule : all) {
    const auto v = run_verdict("quadratic-cc:1", rule, 0.2, 1.0);
    c.expect(v == harness::Verdict::converges,
             rule + " at alpha=1 got " + harness::verdict_name(v));
  }
  for (const auto& rule : all) {
    const auto v = run_verdict("quadratic-cc:3", rule, 0.2, 1.0);
    const bool should_diverge = rule == "ogda" || rule == "conopt";
    const auto want =
        should_diverge ? harness::Verdict::diverges : harness::Verdict::converges;
    c.expect(v == want,
             rule + " at alpha=3 got " + harness::verdict_name(v));
  }
  for (const auto& rule : all) {
    const auto v = run_verdict("quadratic-cc:6", rule, 0.2, 1.0);
    c.expect(v == harness::Verdict::diverges,
             rule + " at alpha=6 got " + harness::verdict_name(v));
  }
  detail = c.detail;
  return c.ok;
}

// 6. Concave-convex spurious attractor: at alpha=1 only ConOpt converges,
//    to (0,0), with final norm < 1e-3 in 50 iterations; ConOpt diverges at
//    alpha in {3, 6}.
bool criterion_6(std::string& detail) {
  Check c;
  {
    harness::RunConfig cfg;
    cfg.game = "quadratic-xc:1";
    cfg.rule = "conopt";
    cfg.hp = hp(0.2, 1.0);
    cfg.iterations = 50;
    const auto t = harness::run(cfg);
    std::ostringstream os;
    os << "conopt final norm " << t.points.back().norm;
    c.expect(t.termination == harness::Termination::completed &&
                 t.points.back().norm < 1e-3,
             os.str());
    c.expect(harness::convergence_verdict(t) == harness::Verdict::converges,
             "conopt verdict at alpha=1");
  }
  for (const char* rule : {"gda", "lcgd", "sga", "ogda", "cgd"}) {
    const auto v = run_verdict("quadratic-xc:1", rule, 0.2, 1.0);
    c.expect(v == harness::Verdict::diverges,
             std::string(rule) + " at alpha=1 got " + harness::verdict_name(v));
  }
  for (const double alpha : {3.0, 6.0}) {
    const auto v = run_verdict("quadratic-xc:" + std::to_string(int(alpha)),
                               "conopt", 0.2, 1.0);
    std::ostringstream os;
    os << "conopt at alpha=" << alpha << " got " << harness::verdict_name(v);
    c.expect(v == harness::Verdict::diverges, os.str());
  }
  detail = c.detail;
  return c.ok;
}

// 7. CG against dense direct solves on 20 seeded SPD systems (d <= 50,
//    condition <= 100), with the exit criterion verified from scratch.
bool criterion_7(std::string& detail) {
  Check c;
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 5 + (trial * 9) % 46;
    const Mat A = tu::random_spd(n, 100.0, 500 + trial);
    SplitMix64 rng(900 + trial);
    Vec b(n);
    for (double& e : b) e = rng.uniform(-2, 2);

    const linalg::LinearOperator M{
        n, [&A](const Vec& v) {
          Vec out(A.rows, 0.0);
          for (int i = 0; i < A.rows; ++i)
            for (int j = 0; j < A.cols; ++j) out[i] += A(i, j) * v[j];
          return out;
        }};
    const auto res = linalg::cg_solve(M, b, 1e-6, 500);
    c.expect(res.converged, "cg did not converge on trial " +
                                std::to_string(trial));
    const Vec x_ref = tu::dense_solve(A, b);
    std::ostringstream os;
    os << "trial " << trial << " rel err " << tu::vec_rel_err(res.solution, x_ref);
    c.expect(tu::vec_rel_err(res.solution, x_ref) <= 1e-6, os.str());

    // The exit criterion, recomputed independently.
    Vec mx(n, 0.0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) mx[i] += A(i, j) * res.solution[j];
    const double true_residual = nrm2(sub(mx, b));
    std::ostringstream os2;
    os2 << "trial " << trial << " residual " << true_residual << " vs bound "
        << 1e-6 * nrm2(res.solution);
    c.expect(true_residual <= 1e-6 * nrm2(res.solution), os2.str());
  }
  detail = c.detail;
  return c.ok;
}

// 8. Forward-pass accounting on instrumented runs.
bool criterion_8(std::string& detail) {
  Check c;
  struct Row {
    const char* rule;
    long long want;
  };
  for (const Row row : {Row{"ogda", 2}, Row{"sga", 4}, Row{"conopt", 6}}) {
    harness::RunConfig cfg;
    cfg.game = "bilinear:3";
    cfg.rule = row.rule;
    cfg.hp = hp(0.2, 1.0);
    cfg.iterations = 10;
    const auto t = harness::run(cfg);
    for (std::size_t i = 1; i < t.points.size(); ++i) {
      const long long got = t.points[i].cum_passes - t.points[i - 1].cum_passes;
      std::ostringstream os;
      os << row.rule << " step " << i << " used " << got << " passes, want "
         << row.want;
      c.expect(got == row.want, os.str());
    }
  }
  {
    harness::RunConfig cfg;
    cfg.game = "covariance:4";
    cfg.rule = "cgd";
    cfg.hp = hp(0.2, 1.0);
    cfg.iterations = 10;
    cfg.seed = 3;
    const auto t = harness::run(cfg);
    c.expect(t.termination == harness::Termination::completed,
             "cgd instrumented run did not complete");
    for (std::size_t i = 1; i < t.points.size(); ++i) {
      const auto& p = t.points[i];
      const long long got = p.cum_passes - t.points[i - 1].cum_passes;
      const long long want = 4 + 2 * (p.cg_iterations_x + p.cg_iterations_y);
      std::ostringstream os;
      os << "cgd step " << i << " used " << got << " passes, want " << want;
      c.expect(got == want, os.str());
    }
  }
  detail = c.detail;
  return c.ok;
}

// 9. Covariance d=20, deterministic, gamma=1, eps=1e-6, seed 7: CGD at
//    eta=0.4 gains two residual decades within 5e4 passes; SGA and ConOpt
//    at eta=0.4 diverge; OGDA at eta=0.005 reaches the same threshold but
//    spends more passes than CGD did.
bool criterion_9(std::string& detail) {
  Check c;
  harness::RunConfig base;
  base.game = "covariance:20";
  base.seed = 7;
  base.hp = hp(0.4, 1.0);
  base.hp.cg_epsilon = 1e-6;
  base.record_every = 1;

  auto crossing_passes = [](const harness::Trajectory& t,
                            double threshold) -> long long {
    for (const auto& p : t.points)
      if (p.residual <= threshold) return p.cum_passes;
    return -1;
  };

  harness::RunConfig cgd = base;
  cgd.rule = "cgd";
  cgd.iterations = 1000000;
  cgd.max_passes = 50000;
  const auto t_cgd = harness::run(cgd);
  const double initial_residual = t_cgd.points.front().residual;
  const double threshold = initial_residual / 100.0;
  c.expect(t_cgd.termination == harness::Termination::completed,
           "cgd covariance run flagged: " + t_cgd.termination_note);
  const long long cgd_crossing = crossing_passes(t_cgd, threshold);
  {
    std::ostringstream os;
    os << "cgd crossing at " << cgd_crossing << " passes (budget 50000)";
    c.expect(cgd_crossing >= 0 && cgd_crossing <= 50000, os.str());
  }

  for (const char* rule : {"sga", "conopt"}) {
    harness::RunConfig r = base;
    r.rule = rule;
    r.iterations = 100000;
    r.max_passes = 50000;
    const auto t = harness::run(r);
    const auto v = t.termination != harness::Termination::completed
                       ? harness::Verdict::diverges
                       : harness::convergence_verdict(t);
    c.expect(v == harness::Verdict::diverges,
             std::string(rule) + " at eta=0.4 got " + harness::verdict_name(v));
  }

  harness::RunConfig ogda = base;
  ogda.rule = "ogda";
  ogda.hp.eta = 0.005;
  ogda.iterations = 400000;
  ogda.max_passes = 800000;
  ogda.record_every = 100;
  const auto t_ogda = harness::run(ogda);
  c.expect(t_ogda.termination == harness::Termination::completed,
           "ogda run flagged divergence");
  const long long ogda_crossing = crossing_passes(t_ogda, threshold);
  {
    std::ostringstream os;
    os << "ogda crossing at " << ogda_crossing << " passes vs cgd at "
       << cgd_crossing;
    c.expect(ogda_crossing > cgd_crossing && ogda_crossing > 0, os.str());
    if (c.ok) detail = os.str();
  }
  if (!c.ok) detail = c.detail;
  return c.ok;
}

// 10. Reduced-scale GAN under CGD stays bounded and covers both modes.
bool criterion_10(std::string& detail) {
  Check c;
  harness::RunConfig cfg;
  cfg.game = "gmm-gan";
  cfg.rule = "cgd";
  cfg.hp = hp(0.025, 1.0);
  cfg.iterations = 2000;
  cfg.seed = 1;
  cfg.record_every = 100;
  cfg.gan_hidden_units = 32;
  cfg.gan_hidden_layers = 2;
  cfg.gan_noise_dim = 16;
  cfg.gan_batch = 64;
  const auto t = harness::run(cfg);
  c.expect(t.termination == harness::Termination::completed,
           "gan run flagged: " + t.termination_note);

  harness::GameBundle bundle = harness::make_game(cfg);
  const auto samples = bundle.sample2d(t.final_state, 4096, cfg.seed + 4096033);
  nets::GanConfig gan_cfg;
  gan_cfg.noise_dim = cfg.gan_noise_dim;
  gan_cfg.batch_real = gan_cfg.batch_fake = cfg.gan_batch;
  const auto mc = harness::mode_coverage(samples, gan_cfg, 3.0);
  {
    std::ostringstream os;
    os << "mode coverage: mode1=" << mc.mode1 << " mode2=" << mc.mode2
       << " other=" << mc.other;
    detail = os.str();
  }
  c.expect(mc.mode1 >= 0.2, detail);
  c.expect(mc.mode2 >= 0.2, detail);
  c.expect(mc.other <= 0.4, detail);
  return c.ok;
}

// 11. Oracle validation: zero-sum, linearity, transpose at 1e-8; analytic
//     vs finite-difference HVP agreement at 1e-6 on 100 probes per game.
bool criterion_11(std::string& detail) {
  Check c;
  struct Target {
    std::string name;
    const GameOracle* oracle;
    int m, n;
  };
  const games::BilinearGame b1(1.0), b3(3.0), b6(6.0);
  const games::QuadraticGame qcc1(1.0, games::QuadraticSign::convex_concave);
  const games::QuadraticGame qcc6(6.0, games::QuadraticSign::convex_concave);
  const games::QuadraticGame qxc1(1.0, games::QuadraticSign::concave_convex);
  const games::QuadraticGame qxc3(3.0, games::QuadraticSign::concave_convex);
  const games::CovarianceGame cov3(3, 11), cov5(5, 12);

  std::vector<Target> targets = {
      {"bilinear:1", &b1, 1, 1},   {"bilinear:3", &b3, 1, 1},
      {"bilinear:6", &b6, 1, 1},   {"quadratic-cc:1", &qcc1, 1, 1},
      {"quadratic-cc:6", &qcc6, 1, 1}, {"quadratic-xc:1", &qxc1, 1, 1},
      {"quadratic-xc:3", &qxc3, 1, 1}, {"covariance:3", &cov3, 9, 9},
      {"covariance:5", &cov5, 25, 25}};

  for (const auto& t : targets) {
    SplitMix64 rng(1234);
    std::vector<JointState> states;
    for (int i = 0; i < 100; ++i) {
      JointState s;
      s.x.resize(t.m);
      s.y.resize(t.n);
      for (double& e : s.x) e = rng.uniform(-2, 2);
      for (double& e : s.y) e = rng.uniform(-2, 2);
      states.push_back(std::move(s));
    }
    const auto report = validate_oracle(*t.oracle, states, 1e-8);
    c.expect(report.passed(), t.name + ": " + report.summary());

    const oracles::FdHvpOracle fd(*t.oracle);
    for (int probe = 0; probe < 100; ++probe) {
      const JointState& s = states[probe];
      Vec vx(t.m);
      Vec vy(t.n);
      for (double& e : vx) e = rng.uniform(-1, 1);
      for (double& e : vy) e = rng.uniform(-1, 1);
      const bool agree =
          tu::vec_rel_err(fd.hvp_xy_f(s, vy), t.oracle->hvp_xy_f(s, vy)) <= 1e-6 &&
          tu::vec_rel_err(fd.hvp_yx_g(s, vx), t.oracle->hvp_yx_g(s, vx)) <= 1e-6 &&
          tu::vec_rel_err(fd.hvp_xx_f(s, vx), t.oracle->hvp_xx_f(s, vx)) <= 1e-6 &&
          tu::vec_rel_err(fd.hvp_yy_g(s, vy), t.oracle->hvp_yy_g(s, vy)) <= 1e-6;
      c.expect(agree, t.name + ": fd/analytic gap at probe " +
                          std::to_string(probe));
    }
  }
  detail = c.detail;
  return c.ok;
}

// 12. Partial-sum family: order 0 equals LCGD exactly; order 50 matches
//     CGD within 1e-10 on bilinear alpha=1, eta=0.2.
bool criterion_12(std::string& detail) {
  Check c;
  const games::BilinearGame game(1.0);
  SplitMix64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const JointState s{{rng.uniform(-1, 1)}, {rng.uniform(-1, 1)}};
    auto h = hp(0.2);
    h.neumann_order = 0;
    const auto n0 = rules::step_neumann(game, s, h);
    const auto lcgd = rules::step_lcgd(game, s, h);
    c.expect(n0.delta_x == lcgd.delta_x && n0.delta_y == lcgd.delta_y,
             "order 0 != lcgd at trial " + std::to_string(trial));

    h.neumann_order = 50;
    const auto n50 = rules::step_neumann(game, s, h);
    const auto cgd = rules::step_cgd(game, s, h);
    std::ostringstream os;
    os << "order 50 vs cgd gap "
       << std::abs(n50.delta_x[0] - cgd.delta_x[0]) << ", "
       << std::abs(n50.delta_y[0] - cgd.delta_y[0]);
    c.expect(std::abs(n50.delta_x[0] - cgd.delta_x[0]) <= 1e-10 &&
                 std::abs(n50.delta_y[0] - cgd.delta_y[0]) <= 1e-10,
             os.str());
  }
  detail = c.detail;
  return c.ok;
}

// 13. Byte-identical CSVs from repeated `experiment exp1` invocations.
bool criterion_13(std::string& detail) {
  Check c;
  const fs::path a = fs::temp_directory_path() / "cgdlab_acc13_a";
  const fs::path b = fs::temp_directory_path() / "cgdlab_acc13_b";
  fs::remove_all(a);
  fs::remove_all(b);
  const std::string cli = CGDLAB_CLI_PATH;
  for (const auto& dir : {a, b}) {
    const std::string cmd =
        cli + " experiment exp1 --out " + dir.string() + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    c.expect(WEXITSTATUS(status) == 0, "experiment exp1 exited nonzero");
  }
  int compared = 0;
  for (const auto& entry : fs::directory_iterator(a)) {
    const fs::path other = b / entry.path().filename();
    if (!fs::exists(other)) {
      c.expect(false, "missing " + other.string());
      continue;
    }
    const std::string left = cli::read_text_file(entry.path().string());
    const std::string right = cli::read_text_file(other.string());
    c.expect(left == right, "byte mismatch in " + entry.path().filename().string());
    ++compared;
  }
  std::ostringstream os;
  os << compared << " files compared (54 runs + manifest)";
  c.expect(compared == 55, os.str());
  if (c.ok) detail = os.str();
  else detail = c.detail;
  return c.ok;
}

struct Criterion {
  int id;
  const char* title;
  std::function<bool(std::string&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "closed-form CGD step on bilinear alpha=1, eta=0.2", criterion_1},
      {2, "bilinear contraction/expansion ratios and alpha=6 verdicts",
       criterion_2},
      {3, "SGA/ConOpt coincidence on bilinear games", criterion_3},
      {4, "CGD stepsize monotonicity on bilinear alpha=6", criterion_4},
      {5, "convex-concave verdict table (eta=0.2, gamma=1)", criterion_5},
      {6, "concave-convex spurious attractor behavior", criterion_6},
      {7, "CG solver vs dense solves with verified exit criterion",
       criterion_7},
      {8, "forward-pass accounting per rule", criterion_8},
      {9, "covariance d=20 residual/pass trade-off", criterion_9},
      {10, "reduced-scale GAN boundedness and mode coverage", criterion_10},
      {11, "oracle validation and FD agreement", criterion_11},
      {12, "Neumann partial-sum family endpoints", criterion_12},
      {13, "byte-identical experiment exp1 reruns", criterion_13},
  };

  std::vector<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.push_back(std::atoi(argv[i]));

  bool all_ok = true;
  for (const auto& criterion : criteria) {
    if (!wanted.empty() &&
        std::find(wanted.begin(), wanted.end(), criterion.id) == wanted.end())
      continue;
    std::string detail;
    const bool ok = criterion.run(detail);
    all_ok = all_ok && ok;
    std::printf("%s criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL",
                criterion.id, criterion.title, detail.empty() ? "" : " -- ",
                detail.c_str());
    std::fflush(stdout);
  }
  return all_ok ? 0 : 1;
}
