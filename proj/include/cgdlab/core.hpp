#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cgdlab {

using Vec = std::vector<double>;

// ---- small vector helpers ----------------------------------------------

double dot(const Vec& a, const Vec& b);
double nrm2(const Vec& v);
void axpy(double alpha, const Vec& x, Vec& y);  // y += alpha * x
Vec scaled(double alpha, const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
bool all_finite(const Vec& v);

// ---- joint strategy state ------------------------------------------------

// The pair of player strategies, x for the minimizer of f, y for the
// minimizer of g. Dimensions are fixed for the lifetime of a run.
struct JointState {
  Vec x;
  Vec y;

  int m() const { return static_cast<int>(x.size()); }
  int n() const { return static_cast<int>(y.size()); }
};

// Euclidean norm of the concatenation (x, y).
double joint_norm(const JointState& s);

bool all_finite(const JointState& s);

// Norm threshold past which a run is considered numerically divergent.
inline constexpr double kDivergenceNorm = 1e10;

// True when the state left the trusted region: non-finite entries or
// joint norm above kDivergenceNorm.
bool is_diverged(const JointState& s);

// ---- game oracle -----------------------------------------------------------

// Evaluation interface of a two-player game  min_x f(x,y), min_y g(x,y).
// Mixed and own second derivatives are exposed only through their action
// on vectors:
//   hvp_xy_f(s, v) = D^2_xy f(s) . v   (v has dim n, result dim m)
//   hvp_yx_g(s, v) = D^2_yx g(s) . v   (v has dim m, result dim n)
//   hvp_xx_f(s, v) = D^2_xx f(s) . v   (dim m -> m)
//   hvp_yy_g(s, v) = D^2_yy g(s) . v   (dim n -> n)
class GameOracle {
 public:
  virtual ~GameOracle() = default;

  virtual int dim_x() const = 0;
  virtual int dim_y() const = 0;
  virtual bool is_zero_sum() const = 0;

  virtual double eval_f(const JointState& s) const = 0;
  virtual double eval_g(const JointState& s) const = 0;
  virtual Vec grad_x_f(const JointState& s) const = 0;
  virtual Vec grad_y_g(const JointState& s) const = 0;
  virtual Vec hvp_xy_f(const JointState& s, const Vec& v) const = 0;
  virtual Vec hvp_yx_g(const JointState& s, const Vec& v) const = 0;
  virtual Vec hvp_xx_f(const JointState& s, const Vec& v) const = 0;
  virtual Vec hvp_yy_g(const JointState& s, const Vec& v) const = 0;
};

// Throws std::invalid_argument unless s matches the oracle dimensions.
void require_dims(const GameOracle& o, const JointState& s);

// ---- hyperparameters -------------------------------------------------------

struct HyperParams {
  double eta = 0.2;          // stepsize
  double gamma = 1.0;        // competitive/consensus weight (SGA, ConOpt)
  double cg_epsilon = 1e-6;  // CG relative termination tolerance
  // CG iteration cap; unset means min(operator dim, 500).
  std::optional<int> cg_max_iters;
  int neumann_order = 0;            // partial-sum order N
  bool neumann_truncate_rhs = false;  // drop the competitive term from the RHS

  // Throws std::invalid_argument listing the offending field.
  void validate() const;
};

// ---- oracle validation -----------------------------------------------------

struct OracleViolation {
  std::string check;   // "zero-sum" | "linearity:<which>" | "transpose" | ...
  int state_index = 0;
  double magnitude = 0.0;
  std::string detail;
};

struct OracleReport {
  std::vector<OracleViolation> violations;

  bool passed() const { return violations.empty(); }
  std::string summary() const;
};

// Probes zero-sum consistency, linearity of the four HVP maps, and (for
// zero-sum games) transpose consistency <u, D2xy_f v> = -<D2yx_g u, v>.
// Probe directions are derived deterministically from direction_seed.
// Dimension-incompatible probe states are a hard error.
OracleReport validate_oracle(const GameOracle& o,
                             const std::vector<JointState>& probe_states,
                             double tol,
                             std::uint64_t direction_seed = 12345);

}  // namespace cgdlab
