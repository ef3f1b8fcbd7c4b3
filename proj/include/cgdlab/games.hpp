#pragma once

#include <cstdint>
#include <memory>

#include "cgdlab/core.hpp"
#include "cgdlab/mat.hpp"

namespace cgdlab::games {

// f(x, y) = alpha * x * y, g = -f, scalar strategies.
class BilinearGame final : public GameOracle {
 public:
  explicit BilinearGame(double alpha) : alpha_(alpha) {}

  double alpha() const { return alpha_; }
  int dim_x() const override { return 1; }
  int dim_y() const override { return 1; }
  bool is_zero_sum() const override { return true; }

  double eval_f(const JointState& s) const override;
  double eval_g(const JointState& s) const override;
  Vec grad_x_f(const JointState& s) const override;   // alpha * y
  Vec grad_y_g(const JointState& s) const override;   // -alpha * x
  Vec hvp_xy_f(const JointState& s, const Vec& v) const override;  // alpha v
  Vec hvp_yx_g(const JointState& s, const Vec& v) const override;  // -alpha v
  Vec hvp_xx_f(const JointState& s, const Vec& v) const override;  // 0
  Vec hvp_yy_g(const JointState& s, const Vec& v) const override;  // 0

 private:
  double alpha_;
};

enum class QuadraticSign {
  convex_concave,   // f = alpha (x^2 - y^2)
  concave_convex,   // f = alpha (-x^2 + y^2)
};

class QuadraticGame final : public GameOracle {
 public:
  QuadraticGame(double alpha, QuadraticSign sign) : alpha_(alpha), sign_(sign) {}

  double alpha() const { return alpha_; }
  QuadraticSign sign() const { return sign_; }
  int dim_x() const override { return 1; }
  int dim_y() const override { return 1; }
  bool is_zero_sum() const override { return true; }

  double eval_f(const JointState& s) const override;
  double eval_g(const JointState& s) const override;
  Vec grad_x_f(const JointState& s) const override;
  Vec grad_y_g(const JointState& s) const override;
  Vec hvp_xy_f(const JointState& s, const Vec& v) const override;  // 0
  Vec hvp_yx_g(const JointState& s, const Vec& v) const override;  // 0
  Vec hvp_xx_f(const JointState& s, const Vec& v) const override;
  Vec hvp_yy_g(const JointState& s, const Vec& v) const override;

 private:
  double alpha_;
  QuadraticSign sign_;
};

// The V-player's generated covariance in the payoff pairing. factor_gram
// pairs W against Sigma_hat - V V^T (the covariance of V z for standard
// Gaussian z, whose equilibrium V V^T = Sigma_hat zeroes the residual);
// sigma_conjugated pairs against Sigma_hat - V Sigma_hat V^T, whose
// equilibria leave ||U U^T - V V^T|| bounded away from zero.
enum class CovariancePayoff { factor_gram, sigma_conjugated };

// Covariance estimation as a zero-sum game over d x d matrices:
//   f(W, V) = <W, Sigma_hat - V V^T>_F,   g = -f   (factor_gram form).
// Player 1 is W (flattened row-major into x, m = d^2), player 2 is V
// (flattened into y, n = d^2). Sigma = U U^T with U i.i.d. standard
// Gaussian from the seed; deterministic mode sets Sigma_hat = Sigma,
// otherwise Sigma_hat is an empirical covariance of `samples` draws
// from N(0, Sigma).
class CovarianceGame final : public GameOracle {
 public:
  CovarianceGame(int d, std::uint64_t seed, bool deterministic = true,
                 int samples = 0,
                 CovariancePayoff payoff = CovariancePayoff::factor_gram);

  int d() const { return d_; }
  const Mat& ground_truth_factor() const { return u_; }
  const Mat& sigma_hat() const { return sigma_hat_; }

  int dim_x() const override { return d_ * d_; }
  int dim_y() const override { return d_ * d_; }
  bool is_zero_sum() const override { return true; }

  double eval_f(const JointState& s) const override;
  double eval_g(const JointState& s) const override;
  Vec grad_x_f(const JointState& s) const override;  // Sigma_hat - gram(V)
  Vec grad_y_g(const JointState& s) const override;
  Vec hvp_xy_f(const JointState& s, const Vec& v) const override;
  Vec hvp_yx_g(const JointState& s, const Vec& v) const override;
  Vec hvp_xx_f(const JointState& s, const Vec& v) const override;  // 0
  Vec hvp_yy_g(const JointState& s, const Vec& v) const override;

  // ||W + W^T||_F / 2 + ||U U^T - V V^T||_F
  double residual(const JointState& s) const;

  // W_1 = dW, V_1 = U + dV with entries of dW, dV i.i.d. uniform in
  // [-0.5, 0.5], drawn deterministically from the seed.
  JointState initial_state(std::uint64_t seed) const;

 private:
  Mat w_of(const JointState& s) const { return Mat::from_flat(s.x, d_, d_); }
  Mat v_of(const JointState& s) const { return Mat::from_flat(s.y, d_, d_); }

  int d_;
  Mat u_;
  Mat sigma_;
  Mat sigma_hat_;
  CovariancePayoff payoff_;
  // Both payoff forms pair W against Sigma_hat - V core V^T; core is the
  // identity (factor_gram) or Sigma_hat (sigma_conjugated).
  Mat core_;
};

std::unique_ptr<GameOracle> bilinear_oracle(double alpha);
std::unique_ptr<GameOracle> quadratic_oracle(double alpha, QuadraticSign sign);
std::unique_ptr<CovarianceGame> covariance_oracle(int d, std::uint64_t seed,
                                                  bool deterministic = true);

}  // namespace cgdlab::games
