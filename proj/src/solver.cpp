#include "gflasso/solver.hpp"

#include <chrono>
#include <cmath>

namespace gflasso {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

bool all_finite(const Matrix& M) { return M.allFinite(); }

double power_iteration(const Matrix& M, Vector v, double tol, int max_iters) {
  const double n0 = v.norm();
  if (n0 == 0.0) return 0.0;
  v /= n0;
  Vector w(v.size());
  double lambda = 0.0;
  for (int it = 0; it < max_iters; ++it) {
    w.noalias() = M * v;
    const double next = v.dot(w);
    const double norm = w.norm();
    if (norm == 0.0) return 0.0;
    v = w / norm;
    if (it > 0 && std::abs(next - lambda) <= tol * std::abs(next)) return next;
    lambda = next;
  }
  return lambda;
}

// Sum of |z| and of the smoothed entries in one pass over Gamma(B).
struct PenaltyValues {
  double exact = 0.0;
  double smooth = 0.0;
};

PenaltyValues penalty_values(const Matrix& gamma_B, double mu) {
  PenaltyValues v;
  const double* z = gamma_B.data();
  const Index n = gamma_B.size();
  for (Index i = 0; i < n; ++i) {
    const double az = std::abs(z[i]);
    v.exact += az;
    v.smooth += az >= mu ? az - 0.5 * mu : 0.5 * z[i] * z[i] / mu;
  }
  return v;
}

}  // namespace

void SolverConfig::validate() const {
  if (mu_mode == MuMode::fixed && !(mu_fixed > 0.0)) throw ParameterError("solver: mu must be positive");
  if (mu_mode == MuMode::accuracy && !(epsilon > 0.0)) throw ParameterError("solver: epsilon must be positive");
  if (!(rel_obj_tol > 0.0)) throw ParameterError("solver: rel_obj_tol must be positive");
  if (max_iters < 1) throw ParameterError("solver: max_iters must be positive");
}

GramData GramData::from(const Matrix& X, const Matrix& Y) {
  require_dims(X.rows() == Y.rows(), "X and Y must have the same number of rows");
  if (!all_finite(X) || !all_finite(Y)) throw NumericError("non-finite entries in X or Y");
  const auto start = Clock::now();
  GramData g;
  g.XtX.noalias() = X.transpose() * X;
  g.XtY.noalias() = X.transpose() * Y;
  g.half_yty = 0.5 * Y.squaredNorm();
  g.lambda_max = largest_eigenvalue(g.XtX);
  g.samples = X.rows();
  g.seconds = seconds_since(start);
  return g;
}

double GramData::loss(const Matrix& B, const Matrix& XtX_B) const {
  return half_yty - (B.array() * XtY.array()).sum() + 0.5 * (B.array() * XtX_B.array()).sum();
}

double GramData::loss(const Matrix& B) const {
  Matrix XtX_B = XtX * B;
  return loss(B, XtX_B);
}

double largest_eigenvalue(const Matrix& M, double tol, int max_iters) {
  require_dims(M.rows() == M.cols(), "largest_eigenvalue: matrix must be square");
  if (!all_finite(M)) throw NumericError("largest_eigenvalue: non-finite entries");
  const Index n = M.rows();
  if (n == 0) return 0.0;
  const double first = power_iteration(M, Vector::Ones(n), tol, max_iters);
  // A second fixed start guards against the all-ones vector being orthogonal
  // to the leading eigenvector.
  Vector alt(n);
  for (Index i = 0; i < n; ++i) alt[i] = 1.0 + 0.5 * std::sin(1.0 + 2.0 * static_cast<double>(i));
  alt[n - 1] = -alt[n - 1];
  const double second = n > 1 ? power_iteration(M, alt, tol, max_iters) : first;
  return std::max(first, second);
}

double lipschitz_upper(double lambda_max_XtX, const PenaltyMap& op, double mu) {
  if (!(mu > 0.0)) throw ParameterError("lipschitz_upper: mu must be positive");
  const double nb = op.norm_bound();
  return lambda_max_XtX + nb * nb / mu;
}

double lipschitz_upper(const Matrix& X, const FusionOperator& op, double mu) {
  Matrix XtX = X.transpose() * X;
  return lipschitz_upper(largest_eigenvalue(XtX), op, mu);
}

Matrix smooth_objective_gradient(const GramData& gram, const PenaltyMap& op, const Matrix& B,
                                 double mu) {
  require_dims(B.rows() == gram.inputs() && B.cols() == gram.outputs(), "B shape vs X, Y");
  Matrix G = gram.XtX * B - gram.XtY;
  G += penalty_gradient(op, B, mu);
  return G;
}

double exact_objective(const GramData& gram, const PenaltyMap& op, const Matrix& B) {
  return gram.loss(B) + gamma_apply(op, B).cwiseAbs().sum();
}

Solution prox_grad_fit(const GramData& gram, const PenaltyMap& op, const SolverConfig& config) {
  config.validate();
  const Index J = gram.inputs();
  const Index K = gram.outputs();
  op.check_domain(J, K);
  const auto [rows, cols] = op.range_shape(J, K);
  const double D = 0.5 * static_cast<double>(rows) * static_cast<double>(cols);
  const double mu = config.mu_mode == MuMode::fixed ? config.mu_fixed : config.epsilon / (2.0 * D);
  const double L = lipschitz_upper(gram.lambda_max, op, mu);
  if (!(L > 0.0) || !std::isfinite(L)) {
    throw DegenerateInputError("prox_grad_fit: Lipschitz bound is zero (X is zero and no penalty)");
  }

  Solution sol;
  sol.mu_used = mu;
  sol.lipschitz_used = L;
  sol.gap_D = D;
  sol.timing.precompute_seconds = gram.seconds;

  Matrix W = Matrix::Zero(J, K);
  Matrix B = Matrix::Zero(J, K);
  Matrix G(J, K);
  Matrix Zsum = Matrix::Zero(J, K);
  Matrix adj(J, K);
  Matrix XtX_v(J, K);
  Matrix aux(rows, cols);
  const bool have_target = !std::isnan(config.target_objective);

  const auto start = Clock::now();
  double f_prev = 0.0;
  int t = 0;
  for (; t < config.max_iters; ++t) {
    // (1) gradient of the smoothed objective at W^t
    XtX_v.noalias() = gram.XtX * W;
    op.apply(W, aux);
    aux = aux.unaryExpr([mu](double z) { return shrink(z / mu); });
    op.adjoint(aux, adj);
    G = XtX_v - gram.XtY + adj;
    // (2) gradient step
    B = W - G / L;
    // (3) Z^t = -(1/L) sum_i (i+1)/2 g_i, kept as the running sum
    Zsum += (0.5 * (t + 1)) * G;
    // (4) convex combination
    const double td = static_cast<double>(t);
    W = ((td + 1.0) / (td + 3.0)) * B - (2.0 / ((td + 3.0) * L)) * Zsum;

    XtX_v.noalias() = gram.XtX * B;
    const double loss = gram.loss(B, XtX_v);
    op.apply(B, aux);
    const PenaltyValues pv = penalty_values(aux, mu);
    const double f = loss + pv.exact;
    if (!std::isfinite(f)) throw NumericError("prox_grad_fit: objective became non-finite");
    if (config.record_trace) sol.trace.push_back({t, f, loss + pv.smooth, G.norm()});
    sol.objective_exact = f;
    sol.objective_smooth = loss + pv.smooth;

    if (have_target && f <= config.target_objective) {
      sol.reached_target = true;
      sol.converged = true;
      ++t;
      break;
    }
    if (t > 0) {
      const double denom = std::max(std::abs(f_prev), std::numeric_limits<double>::min());
      if (std::abs(f_prev - f) / denom < config.rel_obj_tol) {
        sol.converged = true;
        ++t;
        break;
      }
    }
    f_prev = f;
  }
  sol.iterations = t;
  sol.timing.iterate_seconds = seconds_since(start);
  sol.timing.per_iteration_seconds = t > 0 ? sol.timing.iterate_seconds / t : 0.0;
  sol.B_hat = std::move(B);
  return sol;
}

Solution prox_grad_fit(const Matrix& X, const Matrix& Y, const PenaltyMap& op,
                       const SolverConfig& config) {
  return prox_grad_fit(GramData::from(X, Y), op, config);
}

Solution subgradient_fit(const GramData& gram, const PenaltyMap& op,
                         const SubgradientConfig& config) {
  if (config.max_iters < 1) throw ParameterError("subgradient_fit: max_iters must be positive");
  const Index J = gram.inputs();
  const Index K = gram.outputs();
  op.check_domain(J, K);
  const auto [rows, cols] = op.range_shape(J, K);
  double c = config.step_scale;
  if (!(c > 0.0)) {
    if (!(gram.lambda_max > 0.0)) throw DegenerateInputError("subgradient_fit: X^T X is zero");
    c = 1.0 / gram.lambda_max;
  }
  const long long every = std::max(1LL, config.trace_every);
  const bool have_target = !std::isnan(config.target_objective);

  Solution sol;
  sol.lipschitz_used = gram.lambda_max;
  sol.gap_D = 0.5 * static_cast<double>(rows) * static_cast<double>(cols);
  sol.timing.precompute_seconds = gram.seconds;

  Matrix B = Matrix::Zero(J, K);
  Matrix best = B;
  Matrix G(J, K);
  Matrix adj(J, K);
  Matrix XtX_B(J, K);
  Matrix aux(rows, cols);
  double best_f = std::numeric_limits<double>::infinity();

  const auto start = Clock::now();
  long long t = 0;
  for (; t < config.max_iters; ++t) {
    XtX_B.noalias() = gram.XtX * B;
    op.apply(B, aux);
    const double f = gram.loss(B, XtX_B) + aux.cwiseAbs().sum();
    if (!std::isfinite(f)) throw NumericError("subgradient_fit: objective became non-finite");
    if (f < best_f) {
      best_f = f;
      best = B;
    }
    aux = aux.unaryExpr([](double z) { return z > 0.0 ? 1.0 : (z < 0.0 ? -1.0 : 0.0); });
    op.adjoint(aux, adj);
    G = XtX_B - gram.XtY + adj;
    if (config.record_trace && (t % every == 0 || t + 1 == config.max_iters)) {
      sol.trace.push_back({static_cast<int>(t), best_f, f, G.norm()});
    }
    if (have_target && best_f <= config.target_objective) {
      sol.reached_target = true;
      sol.converged = true;
      break;
    }
    B -= (c / std::sqrt(static_cast<double>(t + 1))) * G;
  }
  if (!sol.reached_target) {
    // Score the final iterate too.
    const double f = exact_objective(gram, op, B);
    if (f < best_f) {
      best_f = f;
      best = B;
    }
  }
  sol.iterations = static_cast<int>(std::min<long long>(t, std::numeric_limits<int>::max()));
  sol.timing.iterate_seconds = seconds_since(start);
  sol.timing.per_iteration_seconds = t > 0 ? sol.timing.iterate_seconds / static_cast<double>(t) : 0.0;
  sol.B_hat = std::move(best);
  sol.objective_exact = best_f;
  sol.objective_smooth = best_f;
  return sol;
}

Solution subgradient_fit(const Matrix& X, const Matrix& Y, const PenaltyMap& op,
                         const SubgradientConfig& config) {
  return subgradient_fit(GramData::from(X, Y), op, config);
}

double iteration_bound(double norm_B_star, double eps, double D, double gamma_norm_U,
                       double lambda_max_XtX) {
  return std::sqrt(4.0 * norm_B_star * norm_B_star / eps *
                   (lambda_max_XtX + 2.0 * D * gamma_norm_U * gamma_norm_U / eps));
}

}  // namespace gflasso
