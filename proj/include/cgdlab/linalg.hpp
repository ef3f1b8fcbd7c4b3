#pragma once

#include <functional>
#include <stdexcept>

#include "cgdlab/core.hpp"

namespace cgdlab::linalg {

// Matrix-free linear operator: all the solver ever needs is the action
// v -> M v and the dimension.
struct LinearOperator {
  int dim = 0;
  std::function<Vec(const Vec&)> apply;
};

LinearOperator identity_operator(int dim);
LinearOperator diagonal_operator(Vec diag);

struct CgResult {
  Vec solution;
  int iterations = 0;
  double final_residual_norm = 0.0;
  bool converged = false;
};

// Raised when the iteration encounters non-finite values or a direction of
// non-positive curvature (an indefinite or ill-scaled operator).
struct CgError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Conjugate gradients on M x = b from the zero start, terminating once
// ||M x - b|| <= epsilon * ||x||. The criterion is degenerate at x = 0, so
// ||b|| = 0 returns immediately and the test is applied from iteration 1
// onward. The recurrence residual is recomputed from scratch every 50
// iterations to limit drift. M must be symmetric positive definite.
CgResult cg_solve(const LinearOperator& M, const Vec& b, double epsilon,
                  int max_iters);

// Default iteration cap: the operator dimension, capped at 500.
int default_cg_max_iters(int dim);

enum class Side { player1, player2 };

// The equilibrium-term operator, applied matrix-free:
//   player1:  v -> v - eta^2 * D2xy_f( D2yx_g(v) )   (dim m)
//   player2:  v -> v - eta^2 * D2yx_g( D2xy_f(v) )   (dim n)
// Each apply costs exactly two HVP evaluations.
LinearOperator operator_from_game(const GameOracle& o, const JointState& s,
                                  double eta, Side side);

}  // namespace cgdlab::linalg
