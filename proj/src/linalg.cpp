#include "cgdlab/linalg.hpp"

#include <cmath>

namespace cgdlab::linalg {

LinearOperator identity_operator(int dim) {
  return {dim, [](const Vec& v) { return v; }};
}

LinearOperator diagonal_operator(Vec diag) {
  const int dim = static_cast<int>(diag.size());
  return {dim, [d = std::move(diag)](const Vec& v) {
            Vec out(v.size());
            for (std::size_t i = 0; i < v.size(); ++i) out[i] = d[i] * v[i];
            return out;
          }};
}

int default_cg_max_iters(int dim) { return dim < 500 ? dim : 500; }

CgResult cg_solve(const LinearOperator& M, const Vec& b, double epsilon,
                  int max_iters) {
  if (static_cast<int>(b.size()) != M.dim)
    throw std::invalid_argument("cg_solve: rhs dimension mismatch");
  if (!all_finite(b)) throw CgError("cg_solve: non-finite right-hand side");
  if (max_iters < 1) throw std::invalid_argument("cg_solve: max_iters < 1");

  Vec x(b.size(), 0.0);
  if (nrm2(b) == 0.0) return {x, 0, 0.0, true};

  Vec r = b;  // residual of the zero start
  Vec p = r;
  double rr = dot(r, r);

  for (int it = 1; it <= max_iters; ++it) {
    const Vec q = M.apply(p);
    const double p_q = dot(p, q);
    if (!std::isfinite(p_q) || p_q <= 0.0)
      throw CgError("cg_solve: operator is not positive definite");

    const double alpha = rr / p_q;
    axpy(alpha, p, x);
    axpy(-alpha, q, r);

    if (it % 50 == 0) r = sub(b, M.apply(x));

    const double res_norm = nrm2(r);
    if (!std::isfinite(res_norm))
      throw CgError("cg_solve: non-finite residual");
    if (res_norm <= epsilon * nrm2(x)) return {x, it, res_norm, true};

    const double rr_next = dot(r, r);
    const double beta = rr_next / rr;
    rr = rr_next;
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = r[i] + beta * p[i];
  }
  return {x, max_iters, nrm2(r), false};
}

LinearOperator operator_from_game(const GameOracle& o, const JointState& s,
                                  double eta, Side side) {
  require_dims(o, s);
  const double eta2 = eta * eta;
  if (side == Side::player1) {
    return {o.dim_x(), [&o, s, eta2](const Vec& v) {
              Vec out = v;
              axpy(-eta2, o.hvp_xy_f(s, o.hvp_yx_g(s, v)), out);
              return out;
            }};
  }
  return {o.dim_y(), [&o, s, eta2](const Vec& v) {
            Vec out = v;
            axpy(-eta2, o.hvp_yx_g(s, o.hvp_xy_f(s, v)), out);
            return out;
          }};
}

}  // namespace cgdlab::linalg
