#pragma once

#include <functional>
#include <memory>

#include "cgdlab/core.hpp"

namespace cgdlab::oracles {

enum class FdMode { central, forward };

struct FdConfig {
  FdMode step_mode = FdMode::central;
  double base_step = 0.0;  // 0 means the per-mode default

  double effective_base_step() const {
    if (base_step > 0.0) return base_step;
    return step_mode == FdMode::central ? 1e-5 : 1e-6;
  }
};

// Which second derivative block is being approximated; the first letter
// names the gradient slot, the second the perturbed slot.
enum class HvpBlock { xy, yx, xx, yy };

using GradFn = std::function<Vec(const JointState&)>;

// Directional derivative of `grad` along v by finite differences:
//   central:  (grad(s + h v) - grad(s - h v)) / (2h)
//   forward:  (grad(s + h v) - grad(s)) / h
// with h = base_step * (1 + ||s||) / max(||v||, tiny). A zero direction
// returns the zero vector exactly. Non-finite gradient values propagate as
// a runtime error.
Vec fd_hvp(const GradFn& grad, const JointState& s, const Vec& v,
           HvpBlock which, const FdConfig& cfg = {});

// ---- forward-pass accounting ----------------------------------------------

struct PassCounter {
  long long forward_passes = 0;
};

// Per-call costs in "forward passes". The default (1/1/1) is the unique
// small-integer assignment that reproduces the published per-iteration
// totals for every rule: GDA 2, OGDA 2, LCGD 4, SGA 4, ConOpt 6,
// CGD 4 + 2 * CG iterations.
struct PassCostModel {
  int function_eval = 1;
  int gradient_eval = 1;
  int hvp_eval = 1;
};

// Transparent wrapper: forwards every call to the inner oracle unchanged
// while charging the counter.
class CountingOracle final : public GameOracle {
 public:
  CountingOracle(const GameOracle& inner, PassCounter& counter,
                 PassCostModel model = {})
      : inner_(inner), counter_(counter), model_(model) {}

  int dim_x() const override { return inner_.dim_x(); }
  int dim_y() const override { return inner_.dim_y(); }
  bool is_zero_sum() const override { return inner_.is_zero_sum(); }

  double eval_f(const JointState& s) const override;
  double eval_g(const JointState& s) const override;
  Vec grad_x_f(const JointState& s) const override;
  Vec grad_y_g(const JointState& s) const override;
  Vec hvp_xy_f(const JointState& s, const Vec& v) const override;
  Vec hvp_yx_g(const JointState& s, const Vec& v) const override;
  Vec hvp_xx_f(const JointState& s, const Vec& v) const override;
  Vec hvp_yy_g(const JointState& s, const Vec& v) const override;

 private:
  const GameOracle& inner_;
  PassCounter& counter_;
  PassCostModel model_;
};

// Replaces the inner oracle's HVPs with finite differences of its
// gradients; everything else passes through. Used as a cross-check against
// analytic HVPs and as the backing for gradient-only games.
class FdHvpOracle final : public GameOracle {
 public:
  FdHvpOracle(const GameOracle& inner, FdConfig cfg = {})
      : inner_(inner), cfg_(cfg) {}

  int dim_x() const override { return inner_.dim_x(); }
  int dim_y() const override { return inner_.dim_y(); }
  bool is_zero_sum() const override { return inner_.is_zero_sum(); }

  double eval_f(const JointState& s) const override { return inner_.eval_f(s); }
  double eval_g(const JointState& s) const override { return inner_.eval_g(s); }
  Vec grad_x_f(const JointState& s) const override { return inner_.grad_x_f(s); }
  Vec grad_y_g(const JointState& s) const override { return inner_.grad_y_g(s); }
  Vec hvp_xy_f(const JointState& s, const Vec& v) const override;
  Vec hvp_yx_g(const JointState& s, const Vec& v) const override;
  Vec hvp_xx_f(const JointState& s, const Vec& v) const override;
  Vec hvp_yy_g(const JointState& s, const Vec& v) const override;

 private:
  const GameOracle& inner_;
  FdConfig cfg_;
};

}  // namespace cgdlab::oracles
