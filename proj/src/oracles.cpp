#include "cgdlab/oracles.hpp"

#include <cmath>
#include <stdexcept>

namespace cgdlab::oracles {

namespace {

// The perturbed slot is named by the second letter of the block.
bool perturbs_y(HvpBlock which) {
  return which == HvpBlock::xy || which == HvpBlock::yy;
}

JointState perturbed(const JointState& s, const Vec& v, double h, bool in_y) {
  JointState out = s;
  Vec& slot = in_y ? out.y : out.x;
  for (std::size_t i = 0; i < v.size(); ++i) slot[i] += h * v[i];
  return out;
}

}  // namespace

Vec fd_hvp(const GradFn& grad, const JointState& s, const Vec& v,
           HvpBlock which, const FdConfig& cfg) {
  const bool in_y = perturbs_y(which);
  const int slot_dim = in_y ? s.n() : s.m();
  if (static_cast<int>(v.size()) != slot_dim)
    throw std::invalid_argument("fd_hvp: direction dimension mismatch");

  const double v_norm = nrm2(v);
  if (v_norm == 0.0) {
    // Result dimension equals the gradient's; probe once to size it.
    return Vec(grad(s).size(), 0.0);
  }

  const double h =
      cfg.effective_base_step() * (1.0 + joint_norm(s)) / std::max(v_norm, 1e-30);

  Vec out;
  if (cfg.step_mode == FdMode::central) {
    const Vec plus = grad(perturbed(s, v, h, in_y));
    const Vec minus = grad(perturbed(s, v, -h, in_y));
    out = sub(plus, minus);
    for (double& e : out) e /= 2.0 * h;
  } else {
    const Vec base = grad(s);
    const Vec plus = grad(perturbed(s, v, h, in_y));
    out = sub(plus, base);
    for (double& e : out) e /= h;
  }
  if (!all_finite(out))
    throw std::runtime_error("fd_hvp: non-finite gradient evaluation");
  return out;
}

double CountingOracle::eval_f(const JointState& s) const {
  counter_.forward_passes += model_.function_eval;
  return inner_.eval_f(s);
}

double CountingOracle::eval_g(const JointState& s) const {
  counter_.forward_passes += model_.function_eval;
  return inner_.eval_g(s);
}

Vec CountingOracle::grad_x_f(const JointState& s) const {
  counter_.forward_passes += model_.gradient_eval;
  return inner_.grad_x_f(s);
}

Vec CountingOracle::grad_y_g(const JointState& s) const {
  counter_.forward_passes += model_.gradient_eval;
  return inner_.grad_y_g(s);
}

Vec CountingOracle::hvp_xy_f(const JointState& s, const Vec& v) const {
  counter_.forward_passes += model_.hvp_eval;
  return inner_.hvp_xy_f(s, v);
}

Vec CountingOracle::hvp_yx_g(const JointState& s, const Vec& v) const {
  counter_.forward_passes += model_.hvp_eval;
  return inner_.hvp_yx_g(s, v);
}

Vec CountingOracle::hvp_xx_f(const JointState& s, const Vec& v) const {
  counter_.forward_passes += model_.hvp_eval;
  return inner_.hvp_xx_f(s, v);
}

Vec CountingOracle::hvp_yy_g(const JointState& s, const Vec& v) const {
  counter_.forward_passes += model_.hvp_eval;
  return inner_.hvp_yy_g(s, v);
}

Vec FdHvpOracle::hvp_xy_f(const JointState& s, const Vec& v) const {
  return fd_hvp([this](const JointState& t) { return inner_.grad_x_f(t); }, s,
                v, HvpBlock::xy, cfg_);
}

Vec FdHvpOracle::hvp_yx_g(const JointState& s, const Vec& v) const {
  return fd_hvp([this](const JointState& t) { return inner_.grad_y_g(t); }, s,
                v, HvpBlock::yx, cfg_);
}

Vec FdHvpOracle::hvp_xx_f(const JointState& s, const Vec& v) const {
  return fd_hvp([this](const JointState& t) { return inner_.grad_x_f(t); }, s,
                v, HvpBlock::xx, cfg_);
}

Vec FdHvpOracle::hvp_yy_g(const JointState& s, const Vec& v) const {
  return fd_hvp([this](const JointState& t) { return inner_.grad_y_g(t); }, s,
                v, HvpBlock::yy, cfg_);
}

}  // namespace cgdlab::oracles
