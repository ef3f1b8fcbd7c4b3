#include <doctest.h>

#include <cmath>

#include "cgdlab/games.hpp"
#include "cgdlab/harness.hpp"
#include "cgdlab/oracles.hpp"
#include "cgdlab/rng.hpp"
#include "test_util.hpp"

using namespace cgdlab;
using namespace cgdlab::games;
namespace tu = cgdlab::testutil;

TEST_CASE("bilinear derivatives") {
  const BilinearGame g1(1.0);
  const JointState s{{0.5}, {0.5}};
  CHECK(g1.grad_x_f(s)[0] == 0.5);
  CHECK(g1.grad_y_g(s)[0] == -0.5);
  CHECK(g1.eval_f({{0.0}, {123.0}}) == 0.0);

  const BilinearGame g6(6.0);
  CHECK(g6.hvp_xy_f(s, {1.0})[0] == 6.0);
  CHECK(g6.hvp_yx_g(s, {1.0})[0] == -6.0);
  CHECK(g6.hvp_xx_f(s, {1.0})[0] == 0.0);
}

TEST_CASE("quadratic derivatives") {
  const QuadraticGame cc(3.0, QuadraticSign::convex_concave);
  const JointState s{{0.5}, {0.5}};
  CHECK(cc.grad_x_f(s)[0] == 3.0);  // 2 alpha x
  CHECK(cc.hvp_xy_f(s, {5.0})[0] == 0.0);
  CHECK(cc.hvp_xx_f(s, {1.0})[0] == 6.0);

  const QuadraticGame xc(1.0, QuadraticSign::concave_convex);
  const JointState origin{{0.0}, {0.0}};
  CHECK(xc.grad_x_f(origin)[0] == 0.0);
  CHECK(xc.grad_y_g(origin)[0] == 0.0);
  CHECK(xc.hvp_xx_f(s, {1.0})[0] == -2.0);
}

TEST_CASE("covariance payoff is linear in W") {
  const CovarianceGame game(4, 17);
  const JointState s = game.initial_state(18);
  JointState doubled = s;
  for (double& e : doubled.x) e *= 2.0;
  CHECK(game.eval_f(doubled) ==
        doctest::Approx(2.0 * game.eval_f(s)).epsilon(1e-12));
}

TEST_CASE("covariance gradients match central differences") {
  const CovarianceGame game(2, 3);
  const JointState s = game.initial_state(4);
  const int n = 4;

  // d f / d W by scalar central differences
  for (int i = 0; i < n; ++i) {
    JointState plus = s;
    JointState minus = s;
    plus.x[i] += 1e-6;
    minus.x[i] -= 1e-6;
    const double fd = (game.eval_f(plus) - game.eval_f(minus)) / 2e-6;
    CHECK(game.grad_x_f(s)[i] == doctest::Approx(fd).epsilon(1e-6));
  }
  // d g / d V likewise
  for (int i = 0; i < n; ++i) {
    JointState plus = s;
    JointState minus = s;
    plus.y[i] += 1e-6;
    minus.y[i] -= 1e-6;
    const double fd = (game.eval_g(plus) - game.eval_g(minus)) / 2e-6;
    CHECK(game.grad_y_g(s)[i] == doctest::Approx(fd).epsilon(1e-6));
  }
}

TEST_CASE("covariance oracle passes validation and W=0 edge cases") {
  const CovarianceGame game(3, 5);
  std::vector<JointState> states;
  for (int i = 0; i < 10; ++i) states.push_back(game.initial_state(40 + i));
  CHECK(validate_oracle(game, states, 1e-8).passed());

  JointState zero_w = game.initial_state(50);
  zero_w.x.assign(zero_w.x.size(), 0.0);
  CHECK(nrm2(game.grad_y_g(zero_w)) == 0.0);
  CHECK(game.eval_f(zero_w) == 0.0);
}

TEST_CASE("covariance residual formula") {
  const int d = 4;
  const CovarianceGame game(d, 7);
  const Mat& u = game.ground_truth_factor();

  JointState s;
  s.x.assign(d * d, 0.0);
  s.y = u.a;
  CHECK(game.residual(s) == doctest::Approx(0.0).epsilon(1e-14));

  // Antisymmetric W keeps the first term zero.
  Mat anti(d, d);
  anti(0, 1) = 2.5;
  anti(1, 0) = -2.5;
  s.x = anti.a;
  CHECK(game.residual(s) == doctest::Approx(0.0).epsilon(1e-14));

  // W = Id contributes ||2 Id||_F / 2 = sqrt(d).
  s.x = Mat::identity(d).a;
  CHECK(game.residual(s) == doctest::Approx(std::sqrt(double(d))).epsilon(1e-12));
}

TEST_CASE("covariance init is seeded and within the stated box") {
  const CovarianceGame game(5, 11);
  const JointState a = game.initial_state(12);
  const JointState b = game.initial_state(12);
  const JointState c = game.initial_state(13);
  CHECK(a.x == b.x);
  CHECK(a.y == b.y);
  CHECK(a.x != c.x);

  const Mat& u = game.ground_truth_factor();
  for (double e : a.x) {
    CHECK(e >= -0.5);
    CHECK(e <= 0.5);
  }
  for (std::size_t i = 0; i < a.y.size(); ++i) {
    CHECK(a.y[i] - u.a[i] >= -0.5);
    CHECK(a.y[i] - u.a[i] <= 0.5);
  }
}

TEST_CASE("ground-truth factor is reproducible from the seed") {
  const CovarianceGame g1(3, 42);
  const CovarianceGame g2(3, 42);
  CHECK(g1.ground_truth_factor().a == g2.ground_truth_factor().a);
  // deterministic mode: Sigma_hat = U U^T
  const Mat uu = matmul(g1.ground_truth_factor(),
                        transpose(g1.ground_truth_factor()));
  CHECK(tu::vec_rel_err(g1.sigma_hat().a, uu.a) == 0.0);
}

TEST_CASE("sampled-covariance mode differs from Sigma but stays PSD-ish") {
  const CovarianceGame det(3, 9, true);
  const CovarianceGame sampled(3, 9, false, 200);
  CHECK(det.sigma_hat().a != sampled.sigma_hat().a);
  // symmetric by construction
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(sampled.sigma_hat()(i, j) ==
            doctest::Approx(sampled.sigma_hat()(j, i)).epsilon(1e-12));
}

TEST_CASE("quadratic trajectories are bit-identical under CGD and GDA") {
  harness::RunConfig cfg;
  cfg.game = "quadratic-cc:3";
  cfg.rule = "gda";
  cfg.iterations = 30;
  const auto gda = harness::run(cfg);
  cfg.rule = "cgd";
  const auto cgd = harness::run(cfg);
  REQUIRE(gda.points.size() == cgd.points.size());
  for (std::size_t i = 0; i < gda.points.size(); ++i) {
    CHECK(gda.points[i].state.x == cgd.points[i].state.x);
    CHECK(gda.points[i].state.y == cgd.points[i].state.y);
  }
}

TEST_CASE("sigma-conjugated payoff variant is exposed and differs") {
  const CovarianceGame gram(3, 21, true, 0, CovariancePayoff::factor_gram);
  const CovarianceGame conj(3, 21, true, 0,
                            CovariancePayoff::sigma_conjugated);
  const JointState s = gram.initial_state(22);
  CHECK(gram.eval_f(s) != conj.eval_f(s));
  // Both remain valid zero-sum oracles.
  CHECK(validate_oracle(conj, {s}, 1e-8).passed());
}
