#include "cgdlab/rules.hpp"

#include <cmath>
#include <sstream>

namespace cgdlab::rules {

namespace {

StepReport diverged_report(std::string rule, int m, int n, std::string why) {
  StepReport r;
  r.rule_name = std::move(rule);
  r.delta_x.assign(m, 0.0);
  r.delta_y.assign(n, 0.0);
  r.diverged = true;
  r.diagnostic = std::move(why);
  return r;
}

bool finite_pair(const Vec& a, const Vec& b) {
  return all_finite(a) && all_finite(b);
}

void require_zero_sum(const GameOracle& o, const char* rule) {
  if (!o.is_zero_sum()) {
    std::ostringstream msg;
    msg << rule << " is defined for zero-sum games (g = -f) only";
    throw UnsupportedRuleError(msg.str());
  }
}

// -eta * (grad + weight * correction)
Vec corrected_step(double eta, const Vec& grad, double weight,
                   const Vec& correction) {
  Vec out(grad.size());
  for (std::size_t i = 0; i < grad.size(); ++i)
    out[i] = -eta * (grad[i] + weight * correction[i]);
  return out;
}

// grad - eta * hvp. Shared by LCGD, CGD, and the partial-sum family so
// their right-hand sides are bit-identical.
Vec competitive_rhs(double eta, const Vec& grad, const Vec& hvp) {
  Vec out(grad.size());
  for (std::size_t i = 0; i < grad.size(); ++i)
    out[i] = grad[i] - eta * hvp[i];
  return out;
}

}  // namespace

StepReport step_gda(const GameOracle& o, const JointState& s,
                    const HyperParams& h) {
  require_dims(o, s);
  const Vec gx = o.grad_x_f(s);
  const Vec gy = o.grad_y_g(s);
  if (!finite_pair(gx, gy))
    return diverged_report("gda", s.m(), s.n(), "non-finite gradient");
  StepReport r;
  r.rule_name = "gda";
  r.delta_x = scaled(-h.eta, gx);
  r.delta_y = scaled(-h.eta, gy);
  return r;
}

StepReport step_lcgd(const GameOracle& o, const JointState& s,
                     const HyperParams& h) {
  require_dims(o, s);
  const Vec gx = o.grad_x_f(s);
  const Vec gy = o.grad_y_g(s);
  if (!finite_pair(gx, gy))
    return diverged_report("lcgd", s.m(), s.n(), "non-finite gradient");
  StepReport r;
  r.rule_name = "lcgd";
  r.delta_x = scaled(-h.eta, competitive_rhs(h.eta, gx, o.hvp_xy_f(s, gy)));
  r.delta_y = scaled(-h.eta, competitive_rhs(h.eta, gy, o.hvp_yx_g(s, gx)));
  if (!finite_pair(r.delta_x, r.delta_y))
    return diverged_report("lcgd", s.m(), s.n(), "non-finite update");
  return r;
}

StepReport step_sga(const GameOracle& o, const JointState& s,
                    const HyperParams& h) {
  require_zero_sum(o, "sga");
  require_dims(o, s);
  const Vec gx = o.grad_x_f(s);
  const Vec gy = o.grad_y_g(s);
  if (!finite_pair(gx, gy))
    return diverged_report("sga", s.m(), s.n(), "non-finite gradient");
  // grad_y f = -grad_y g and grad_x g = -grad_x f in a zero-sum game.
  const Vec grad_y_f = scaled(-1.0, gy);
  const Vec grad_x_g = scaled(-1.0, gx);
  StepReport r;
  r.rule_name = "sga";
  r.delta_x = corrected_step(h.eta, gx, h.gamma, o.hvp_xy_f(s, grad_y_f));
  r.delta_y = corrected_step(h.eta, gy, h.gamma, o.hvp_yx_g(s, grad_x_g));
  if (!finite_pair(r.delta_x, r.delta_y))
    return diverged_report("sga", s.m(), s.n(), "non-finite update");
  return r;
}

StepReport step_conopt(const GameOracle& o, const JointState& s,
                       const HyperParams& h) {
  require_zero_sum(o, "conopt");
  require_dims(o, s);
  const Vec gx = o.grad_x_f(s);
  const Vec gy = o.grad_y_g(s);
  if (!finite_pair(gx, gy))
    return diverged_report("conopt", s.m(), s.n(), "non-finite gradient");
  const Vec grad_y_f = scaled(-1.0, gy);
  const Vec grad_x_g = scaled(-1.0, gx);

  Vec corr_x = o.hvp_xy_f(s, grad_y_f);
  axpy(1.0, o.hvp_xx_f(s, gx), corr_x);
  Vec corr_y = o.hvp_yx_g(s, grad_x_g);
  axpy(1.0, o.hvp_yy_g(s, gy), corr_y);

  StepReport r;
  r.rule_name = "conopt";
  r.delta_x = corrected_step(h.eta, gx, h.gamma, corr_x);
  r.delta_y = corrected_step(h.eta, gy, h.gamma, corr_y);
  if (!finite_pair(r.delta_x, r.delta_y))
    return diverged_report("conopt", s.m(), s.n(), "non-finite update");
  return r;
}

std::pair<StepReport, OgdaMemory> step_ogda(const GameOracle& o,
                                            const JointState& s,
                                            const HyperParams& h,
                                            const OgdaMemory& mem) {
  require_dims(o, s);
  const Vec gx = o.grad_x_f(s);
  const Vec gy = o.grad_y_g(s);
  OgdaMemory next{gx, gy};
  if (!finite_pair(gx, gy))
    return {diverged_report("ogda", s.m(), s.n(), "non-finite gradient"),
            next};
  const Vec& prev_x = mem.previous_grad_x ? *mem.previous_grad_x : gx;
  const Vec& prev_y = mem.previous_grad_y ? *mem.previous_grad_y : gy;

  StepReport r;
  r.rule_name = "ogda";
  r.delta_x.resize(gx.size());
  r.delta_y.resize(gy.size());
  for (std::size_t i = 0; i < gx.size(); ++i)
    r.delta_x[i] = -h.eta * (2.0 * gx[i] - prev_x[i]);
  for (std::size_t i = 0; i < gy.size(); ++i)
    r.delta_y[i] = -h.eta * (2.0 * gy[i] - prev_y[i]);
  return {std::move(r), std::move(next)};
}

StepReport step_cgd(const GameOracle& o, const JointState& s,
                    const HyperParams& h, SolveSide side) {
  require_dims(o, s);
  const Vec gx = o.grad_x_f(s);
  const Vec gy = o.grad_y_g(s);
  if (!finite_pair(gx, gy))
    return diverged_report("cgd", s.m(), s.n(), "non-finite gradient");

  StepReport r;
  r.rule_name = "cgd";
  const bool solve_x = side == SolveSide::player1;
  const int solve_dim = solve_x ? s.m() : s.n();
  const int max_iters =
      h.cg_max_iters ? *h.cg_max_iters : linalg::default_cg_max_iters(solve_dim);

  try {
    if (solve_x) {
      const Vec rhs = competitive_rhs(h.eta, gx, o.hvp_xy_f(s, gy));
      const auto M =
          linalg::operator_from_game(o, s, h.eta, linalg::Side::player1);
      const auto cg = linalg::cg_solve(M, rhs, h.cg_epsilon, max_iters);
      r.cg_iterations_x = cg.iterations;
      if (!cg.converged) {
        return diverged_report("cgd", s.m(), s.n(),
                               "cg failed to converge on player 1 system");
      }
      r.delta_x = scaled(-h.eta, cg.solution);
      // Optimal counter strategy, no second solve:
      // dy = -eta (grad_y g + D2yx_g dx)
      Vec counter = gy;
      axpy(1.0, o.hvp_yx_g(s, r.delta_x), counter);
      r.delta_y = scaled(-h.eta, counter);
    } else {
      const Vec rhs = competitive_rhs(h.eta, gy, o.hvp_yx_g(s, gx));
      const auto M =
          linalg::operator_from_game(o, s, h.eta, linalg::Side::player2);
      const auto cg = linalg::cg_solve(M, rhs, h.cg_epsilon, max_iters);
      r.cg_iterations_y = cg.iterations;
      if (!cg.converged) {
        return diverged_report("cgd", s.m(), s.n(),
                               "cg failed to converge on player 2 system");
      }
      r.delta_y = scaled(-h.eta, cg.solution);
      Vec counter = gx;
      axpy(1.0, o.hvp_xy_f(s, r.delta_y), counter);
      r.delta_x = scaled(-h.eta, counter);
    }
  } catch (const linalg::CgError& e) {
    return diverged_report("cgd", s.m(), s.n(), e.what());
  }
  if (!finite_pair(r.delta_x, r.delta_y))
    return diverged_report("cgd", s.m(), s.n(), "non-finite update");
  return r;
}

StepReport step_neumann(const GameOracle& o, const JointState& s,
                        const HyperParams& h) {
  require_dims(o, s);
  const std::string name =
      RuleSpec{RuleKind::cgd_neumann, h.neumann_order}.name();
  const Vec gx = o.grad_x_f(s);
  const Vec gy = o.grad_y_g(s);
  if (!finite_pair(gx, gy))
    return diverged_report(name, s.m(), s.n(), "non-finite gradient");
  const double eta2 = h.eta * h.eta;

  // Accumulates sum_{k=0..N} A^k b with A = eta^2 D2xy_f D2yx_g on the x
  // side and the mirrored product on the y side.
  auto partial_sum = [&](const Vec& b, bool x_side) {
    Vec sum = b;
    Vec term = b;
    for (int k = 1; k <= h.neumann_order; ++k) {
      term = x_side ? scaled(eta2, o.hvp_xy_f(s, o.hvp_yx_g(s, term)))
                    : scaled(eta2, o.hvp_yx_g(s, o.hvp_xy_f(s, term)));
      axpy(1.0, term, sum);
    }
    return sum;
  };

  const Vec rhs_x = h.neumann_truncate_rhs
                        ? gx
                        : competitive_rhs(h.eta, gx, o.hvp_xy_f(s, gy));
  const Vec rhs_y = h.neumann_truncate_rhs
                        ? gy
                        : competitive_rhs(h.eta, gy, o.hvp_yx_g(s, gx));

  StepReport r;
  r.rule_name = name;
  r.delta_x = scaled(-h.eta, partial_sum(rhs_x, true));
  r.delta_y = scaled(-h.eta, partial_sum(rhs_y, false));
  if (!finite_pair(r.delta_x, r.delta_y))
    return diverged_report(name, s.m(), s.n(), "non-finite update");
  return r;
}

std::string RuleSpec::name() const {
  switch (kind) {
    case RuleKind::gda:
      return "gda";
    case RuleKind::lcgd:
      return "lcgd";
    case RuleKind::sga:
      return "sga";
    case RuleKind::conopt:
      return "conopt";
    case RuleKind::ogda:
      return "ogda";
    case RuleKind::cgd:
      return "cgd";
    case RuleKind::cgd_neumann:
      return "cgd-neumann:" + std::to_string(neumann_order);
  }
  return "?";
}

const std::vector<std::string>& rule_names() {
  static const std::vector<std::string> names = {
      "gda", "lcgd", "sga", "conopt", "ogda", "cgd", "cgd-neumann:N"};
  return names;
}

RuleSpec parse_rule(const std::string& text) {
  if (text == "gda") return {RuleKind::gda};
  if (text == "lcgd") return {RuleKind::lcgd};
  if (text == "sga") return {RuleKind::sga};
  if (text == "conopt") return {RuleKind::conopt};
  if (text == "ogda") return {RuleKind::ogda};
  if (text == "cgd") return {RuleKind::cgd};
  const std::string prefix = "cgd-neumann:";
  if (text.rfind(prefix, 0) == 0) {
    const std::string order = text.substr(prefix.size());
    try {
      std::size_t used = 0;
      const int n = std::stoi(order, &used);
      if (n < 0 || used != order.size()) throw std::invalid_argument("bad");
      return {RuleKind::cgd_neumann, n};
    } catch (const std::exception&) {
      throw std::invalid_argument("invalid neumann order '" + order +
                                  "' in rule '" + text + "'");
    }
  }
  std::ostringstream msg;
  msg << "unknown rule '" << text << "'; valid rules:";
  for (const auto& n : rule_names()) msg << " " << n;
  throw std::invalid_argument(msg.str());
}

}  // namespace cgdlab::rules
