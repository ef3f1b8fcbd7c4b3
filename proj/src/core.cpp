#include "cgdlab/core.hpp"

#include <cmath>
#include <sstream>

#include "cgdlab/rng.hpp"

namespace cgdlab {

double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double nrm2(const Vec& v) { return std::sqrt(dot(v, v)); }

void axpy(double alpha, const Vec& x, Vec& y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

Vec scaled(double alpha, const Vec& v) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = alpha * v[i];
  return out;
}

Vec add(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

bool all_finite(const Vec& v) {
  for (double e : v) {
    if (!std::isfinite(e)) return false;
  }
  return true;
}

double joint_norm(const JointState& s) {
  return std::sqrt(dot(s.x, s.x) + dot(s.y, s.y));
}

bool all_finite(const JointState& s) {
  return all_finite(s.x) && all_finite(s.y);
}

bool is_diverged(const JointState& s) {
  if (!all_finite(s)) return true;
  return joint_norm(s) > kDivergenceNorm;
}

void require_dims(const GameOracle& o, const JointState& s) {
  if (s.m() != o.dim_x() || s.n() != o.dim_y()) {
    std::ostringstream msg;
    msg << "state dims (" << s.m() << ", " << s.n() << ") do not match oracle ("
        << o.dim_x() << ", " << o.dim_y() << ")";
    throw std::invalid_argument(msg.str());
  }
}

void HyperParams::validate() const {
  if (!(eta > 0.0)) throw std::invalid_argument("eta must be > 0");
  if (gamma < 0.0) throw std::invalid_argument("gamma must be >= 0");
  if (!(cg_epsilon > 0.0)) throw std::invalid_argument("cg_epsilon must be > 0");
  if (cg_max_iters && *cg_max_iters < 1)
    throw std::invalid_argument("cg_max_iters must be >= 1");
  if (neumann_order < 0) throw std::invalid_argument("neumann_order must be >= 0");
}

std::string OracleReport::summary() const {
  if (violations.empty()) return "ok";
  std::ostringstream out;
  out << violations.size() << " violation(s):";
  for (const auto& v : violations) {
    out << "\n  [" << v.check << "] state " << v.state_index << " magnitude "
        << v.magnitude;
    if (!v.detail.empty()) out << " (" << v.detail << ")";
  }
  return out.str();
}

namespace {

Vec random_direction(SplitMix64& rng, int dim) {
  Vec v(dim);
  for (double& e : v) e = rng.uniform(-1.0, 1.0);
  return v;
}

double rel_mismatch(const Vec& got, const Vec& want) {
  const double scale = std::max({nrm2(got), nrm2(want), 1e-30});
  return nrm2(sub(got, want)) / scale;
}

}  // namespace

OracleReport validate_oracle(const GameOracle& o,
                             const std::vector<JointState>& probe_states,
                             double tol,
                             std::uint64_t direction_seed) {
  OracleReport report;
  SplitMix64 rng(direction_seed);
  const int m = o.dim_x();
  const int n = o.dim_y();

  for (std::size_t i = 0; i < probe_states.size(); ++i) {
    const JointState& s = probe_states[i];
    require_dims(o, s);
    const int idx = static_cast<int>(i);

    if (o.is_zero_sum()) {
      const double f = o.eval_f(s);
      const double g = o.eval_g(s);
      const double err = std::abs(f + g) / std::max(1.0, std::abs(f));
      if (err > tol)
        report.violations.push_back({"zero-sum", idx, err, "g != -f"});
    }

    // Linearity of each HVP map: hvp(a v + b w) = a hvp(v) + b hvp(w).
    struct HvpCase {
      const char* name;
      int in_dim;
    };
    const HvpCase cases[] = {{"xy", n}, {"yx", m}, {"xx", m}, {"yy", n}};
    for (const auto& c : cases) {
      const Vec v = random_direction(rng, c.in_dim);
      const Vec w = random_direction(rng, c.in_dim);
      const double a = rng.uniform(-2.0, 2.0);
      const double b = rng.uniform(-2.0, 2.0);
      Vec combo(c.in_dim);
      for (int k = 0; k < c.in_dim; ++k) combo[k] = a * v[k] + b * w[k];

      auto apply = [&](const Vec& dir) -> Vec {
        if (c.name[0] == 'x' && c.name[1] == 'y') return o.hvp_xy_f(s, dir);
        if (c.name[0] == 'y' && c.name[1] == 'x') return o.hvp_yx_g(s, dir);
        if (c.name[0] == 'x') return o.hvp_xx_f(s, dir);
        return o.hvp_yy_g(s, dir);
      };
      const Vec lhs = apply(combo);
      Vec rhs = scaled(a, apply(v));
      axpy(b, apply(w), rhs);
      const double err = rel_mismatch(lhs, rhs);
      if (err > tol)
        report.violations.push_back(
            {std::string("linearity:") + c.name, idx, err, ""});
    }

    // Zero-sum transpose consistency: D2yx_g = -(D2xy_f)^T.
    if (o.is_zero_sum()) {
      const Vec u = random_direction(rng, m);
      const Vec v = random_direction(rng, n);
      const double lhs = dot(u, o.hvp_xy_f(s, v));
      const double rhs = -dot(o.hvp_yx_g(s, u), v);
      const double err =
          std::abs(lhs - rhs) / std::max({std::abs(lhs), std::abs(rhs), 1.0});
      if (err > tol)
        report.violations.push_back({"transpose", idx, err, ""});
    }
  }
  return report;
}

}  // namespace cgdlab
