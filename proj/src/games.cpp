#include "cgdlab/games.hpp"

#include <stdexcept>

#include "cgdlab/rng.hpp"

namespace cgdlab::games {

// ---- bilinear ------------------------------------------------------------

double BilinearGame::eval_f(const JointState& s) const {
  require_dims(*this, s);
  return alpha_ * s.x[0] * s.y[0];
}

double BilinearGame::eval_g(const JointState& s) const { return -eval_f(s); }

Vec BilinearGame::grad_x_f(const JointState& s) const {
  require_dims(*this, s);
  return {alpha_ * s.y[0]};
}

Vec BilinearGame::grad_y_g(const JointState& s) const {
  require_dims(*this, s);
  return {-alpha_ * s.x[0]};
}

Vec BilinearGame::hvp_xy_f(const JointState&, const Vec& v) const {
  return {alpha_ * v[0]};
}

Vec BilinearGame::hvp_yx_g(const JointState&, const Vec& v) const {
  return {-alpha_ * v[0]};
}

Vec BilinearGame::hvp_xx_f(const JointState&, const Vec& v) const {
  return Vec(v.size(), 0.0);
}

Vec BilinearGame::hvp_yy_g(const JointState&, const Vec& v) const {
  return Vec(v.size(), 0.0);
}

// ---- quadratic -------------------------------------------------------------

// convex_concave: f = a (x^2 - y^2), g = a (y^2 - x^2)
// concave_convex: f = a (-x^2 + y^2), g = a (x^2 - y^2)
double QuadraticGame::eval_f(const JointState& s) const {
  require_dims(*this, s);
  const double q = s.x[0] * s.x[0] - s.y[0] * s.y[0];
  return sign_ == QuadraticSign::convex_concave ? alpha_ * q : -alpha_ * q;
}

double QuadraticGame::eval_g(const JointState& s) const { return -eval_f(s); }

Vec QuadraticGame::grad_x_f(const JointState& s) const {
  require_dims(*this, s);
  const double c = sign_ == QuadraticSign::convex_concave ? 1.0 : -1.0;
  return {c * 2.0 * alpha_ * s.x[0]};
}

Vec QuadraticGame::grad_y_g(const JointState& s) const {
  require_dims(*this, s);
  const double c = sign_ == QuadraticSign::convex_concave ? 1.0 : -1.0;
  return {c * 2.0 * alpha_ * s.y[0]};
}

Vec QuadraticGame::hvp_xy_f(const JointState&, const Vec& v) const {
  return Vec(v.size(), 0.0);
}

Vec QuadraticGame::hvp_yx_g(const JointState&, const Vec& v) const {
  return Vec(v.size(), 0.0);
}

Vec QuadraticGame::hvp_xx_f(const JointState&, const Vec& v) const {
  const double c = sign_ == QuadraticSign::convex_concave ? 1.0 : -1.0;
  return {c * 2.0 * alpha_ * v[0]};
}

Vec QuadraticGame::hvp_yy_g(const JointState&, const Vec& v) const {
  const double c = sign_ == QuadraticSign::convex_concave ? 1.0 : -1.0;
  return {c * 2.0 * alpha_ * v[0]};
}

// ---- covariance ------------------------------------------------------------

CovarianceGame::CovarianceGame(int d, std::uint64_t seed, bool deterministic,
                               int samples, CovariancePayoff payoff)
    : d_(d), u_(d, d), sigma_(d, d), sigma_hat_(d, d), payoff_(payoff) {
  if (d < 1) throw std::invalid_argument("covariance game: d must be >= 1");
  SplitMix64 rng(seed);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) u_(i, j) = rng.gaussian();
  sigma_ = matmul(u_, transpose(u_));

  if (deterministic) {
    sigma_hat_ = sigma_;
  } else {
    // Empirical covariance of draws z = U g, g ~ N(0, Id).
    const int count = samples > 0 ? samples : 10 * d;
    Mat acc(d, d);
    Vec z(d);
    for (int k = 0; k < count; ++k) {
      Vec g(d);
      for (double& e : g) e = rng.gaussian();
      for (int i = 0; i < d; ++i) {
        double s = 0.0;
        for (int j = 0; j < d; ++j) s += u_(i, j) * g[j];
        z[i] = s;
      }
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) acc(i, j) += z[i] * z[j];
    }
    sigma_hat_ = mscale(1.0 / count, acc);
  }
  core_ = payoff_ == CovariancePayoff::factor_gram ? Mat::identity(d)
                                                   : sigma_hat_;
}

// f = <W, Sigma_hat - V core V^T>; the derivatives below follow from the
// bilinear pairing and the symmetry of core.

double CovarianceGame::eval_f(const JointState& s) const {
  require_dims(*this, s);
  const Mat V = v_of(s);
  const Mat inner = msub(sigma_hat_, matmul(matmul(V, core_), transpose(V)));
  return frob_inner(w_of(s), inner);
}

double CovarianceGame::eval_g(const JointState& s) const { return -eval_f(s); }

Vec CovarianceGame::grad_x_f(const JointState& s) const {
  require_dims(*this, s);
  const Mat V = v_of(s);
  return msub(sigma_hat_, matmul(matmul(V, core_), transpose(V))).a;
}

Vec CovarianceGame::grad_y_g(const JointState& s) const {
  require_dims(*this, s);
  const Mat W = w_of(s);
  const Mat V = v_of(s);
  return matmul(matmul(madd(W, transpose(W)), V), core_).a;
}

Vec CovarianceGame::hvp_xy_f(const JointState& s, const Vec& v) const {
  require_dims(*this, s);
  const Mat dV = Mat::from_flat(v, d_, d_);
  const Mat V = v_of(s);
  const Mat t1 = matmul(matmul(dV, core_), transpose(V));
  const Mat t2 = matmul(matmul(V, core_), transpose(dV));
  return mscale(-1.0, madd(t1, t2)).a;
}

Vec CovarianceGame::hvp_yx_g(const JointState& s, const Vec& v) const {
  require_dims(*this, s);
  const Mat dW = Mat::from_flat(v, d_, d_);
  const Mat V = v_of(s);
  return matmul(matmul(madd(dW, transpose(dW)), V), core_).a;
}

Vec CovarianceGame::hvp_xx_f(const JointState&, const Vec& v) const {
  return Vec(v.size(), 0.0);
}

Vec CovarianceGame::hvp_yy_g(const JointState& s, const Vec& v) const {
  require_dims(*this, s);
  const Mat dV = Mat::from_flat(v, d_, d_);
  const Mat W = w_of(s);
  return matmul(matmul(madd(W, transpose(W)), dV), core_).a;
}

double CovarianceGame::residual(const JointState& s) const {
  require_dims(*this, s);
  const Mat W = w_of(s);
  const Mat V = v_of(s);
  const double sym_part = frob_norm(madd(W, transpose(W))) / 2.0;
  const Mat uu = matmul(u_, transpose(u_));
  const Mat vv = matmul(V, transpose(V));
  return sym_part + frob_norm(msub(uu, vv));
}

JointState CovarianceGame::initial_state(std::uint64_t seed) const {
  SplitMix64 rng(seed);
  JointState s;
  s.x.resize(static_cast<std::size_t>(d_) * d_);
  s.y.resize(static_cast<std::size_t>(d_) * d_);
  for (double& e : s.x) e = rng.uniform(-0.5, 0.5);
  for (std::size_t i = 0; i < s.y.size(); ++i)
    s.y[i] = u_.a[i] + rng.uniform(-0.5, 0.5);
  return s;
}

std::unique_ptr<GameOracle> bilinear_oracle(double alpha) {
  return std::make_unique<BilinearGame>(alpha);
}

std::unique_ptr<GameOracle> quadratic_oracle(double alpha, QuadraticSign sign) {
  return std::make_unique<QuadraticGame>(alpha, sign);
}

std::unique_ptr<CovarianceGame> covariance_oracle(int d, std::uint64_t seed,
                                                  bool deterministic) {
  return std::make_unique<CovarianceGame>(d, seed, deterministic);
}

}  // namespace cgdlab::games
