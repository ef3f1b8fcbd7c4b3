#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cgdlab/core.hpp"
#include "cgdlab/linalg.hpp"

namespace cgdlab::rules {

// One applied update. Deltas are the full step (stepsize included); the
// CG fields stay zero for rules that never solve a system. forward_passes
// is filled by the caller that owns the pass counter.
struct StepReport {
  Vec delta_x;
  Vec delta_y;
  int cg_iterations_x = 0;
  int cg_iterations_y = 0;
  long long forward_passes = 0;
  std::string rule_name;
  bool diverged = false;
  std::string diagnostic;
};

// Lagged gradients carried between optimistic steps; empty before step 0.
struct OgdaMemory {
  std::optional<Vec> previous_grad_x;
  std::optional<Vec> previous_grad_y;
};

struct UnsupportedRuleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Simultaneous gradient descent on both costs:
//   dx = -eta grad_x f,  dy = -eta grad_y g.
StepReport step_gda(const GameOracle& o, const JointState& s,
                    const HyperParams& h);

// CGD with the equilibrium inverse replaced by the identity:
//   dx = -eta (grad_x f - eta D2xy_f grad_y g)
//   dy = -eta (grad_y g - eta D2yx_g grad_x f).
StepReport step_lcgd(const GameOracle& o, const JointState& s,
                     const HyperParams& h);

// Gradient step plus the competitive correction, zero-sum only:
//   dx = -eta (grad_x f + gamma D2xy_f grad_y f)
//   dy = -eta (grad_y g + gamma D2yx_g grad_x g)
// with grad_y f = -grad_y g and grad_x g = -grad_x f.
StepReport step_sga(const GameOracle& o, const JointState& s,
                    const HyperParams& h);

// SGA plus the consensus term built from each player's own Hessian:
//   dx gains -eta gamma D2xx_f grad_x f,  dy gains -eta gamma D2yy_g grad_y g.
StepReport step_conopt(const GameOracle& o, const JointState& s,
                       const HyperParams& h);

// Optimistic extrapolation with the previous iterate's gradients:
//   dx = -eta (2 grad_x f(s_k) - grad_x f(s_{k-1})), same shape for y.
// An empty memory defines the previous gradient as the current one, so
// the first step coincides with GDA. Returns the updated memory.
std::pair<StepReport, OgdaMemory> step_ogda(const GameOracle& o,
                                            const JointState& s,
                                            const HyperParams& h,
                                            const OgdaMemory& mem);

enum class SolveSide { player1, player2 };

// Competitive gradient descent. One side is solved with matrix-free CG,
//   (Id - eta^2 D2xy_f D2yx_g) z = grad_x f - eta D2xy_f grad_y g,
//   dx = -eta z,
// and the other side is the closed-form optimal counter strategy,
//   dy = -eta (grad_y g + D2yx_g dx).
// `side` selects which player's system is solved. The equilibrium
// operator is symmetric positive definite for zero-sum games; for
// general-sum games CG is still used and positive definiteness is the
// caller's responsibility (an indefinite system surfaces as a divergence
// flag).
StepReport step_cgd(const GameOracle& o, const JointState& s,
                    const HyperParams& h,
                    SolveSide side = SolveSide::player1);

// Truncated-series variant of CGD: applies the partial sum
// sum_{k=0..N} A^k of the equilibrium inverse (A = eta^2 D2xy_f D2yx_g)
// to the CGD right-hand side, mirrored on the y side. Order 0 equals
// LCGD; with h.neumann_truncate_rhs the competitive term is dropped from
// the right-hand side as well, and order 0 equals GDA. The series only
// approaches the CGD step when eta^2 ||D2xy_f D2yx_g|| < 1; that is not
// enforced.
StepReport step_neumann(const GameOracle& o, const JointState& s,
                        const HyperParams& h);

// ---- rule naming ------------------------------------------------------------

enum class RuleKind { gda, lcgd, sga, conopt, ogda, cgd, cgd_neumann };

struct RuleSpec {
  RuleKind kind = RuleKind::gda;
  int neumann_order = 0;

  std::string name() const;
  bool requires_zero_sum() const {
    return kind == RuleKind::sga || kind == RuleKind::conopt;
  }
  bool uses_memory() const { return kind == RuleKind::ogda; }
};

// Accepts: gda, lcgd, sga, conopt, ogda, cgd, cgd-neumann:N.
// Throws std::invalid_argument listing the valid names.
RuleSpec parse_rule(const std::string& text);

const std::vector<std::string>& rule_names();

}  // namespace cgdlab::rules
