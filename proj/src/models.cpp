#include "gflasso/models.hpp"

#include "gflasso/numeric.hpp"

#include <chrono>
#include <cmath>

namespace gflasso {

namespace {

using Clock = std::chrono::steady_clock;

double half_squared_residual(const Matrix& X, const Matrix& Y, const Matrix& B) {
  require_dims(X.rows() == Y.rows(), "X and Y row counts");
  require_dims(X.cols() == B.rows() && Y.cols() == B.cols(), "B shape vs X, Y");
  const Matrix R = Y - X * B;
  return 0.5 * pairwise_sum(static_cast<std::size_t>(R.size()),
                            [&](std::size_t i) { return R.data()[i] * R.data()[i]; });
}

double l1(const Matrix& B) {
  return pairwise_sum(static_cast<std::size_t>(B.size()),
                      [&](std::size_t i) { return std::abs(B.data()[i]); });
}

double edge_fusion_sum(const Matrix& B, const TaskGraph& graph, const EdgeWeightFn& tau) {
  double total = 0.0;
  for (const Edge& e : graph.edges()) {
    const double s = edge_sign(e.r);
    total += tau(e.r) * pairwise_sum(static_cast<std::size_t>(B.rows()), [&](std::size_t j) {
               return std::abs(B(j, e.m) - s * B(j, e.l));
             });
  }
  return total;
}

FitResult finish(Solution sol, ModelKind kind, PenaltySpec spec, GraphSummary graph,
                 const Centered& c, double objective, Clock::time_point start) {
  FitResult fit;
  fit.solution = std::move(sol);
  fit.kind = kind;
  fit.penalty = std::move(spec);
  fit.graph = graph;
  fit.x_mean = c.x_mean;
  fit.y_mean = c.y_mean;
  fit.objective = objective;
  fit.runtime_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return fit;
}

}  // namespace

std::string to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::gflasso: return "gflasso";
    case ModelKind::lasso: return "lasso";
    case ModelKind::group_l1l2: return "l1l2";
    case ModelKind::fused_univariate: return "fused";
  }
  return "unknown";
}

ModelKind model_kind_from_string(const std::string& name) {
  if (name == "gflasso") return ModelKind::gflasso;
  if (name == "lasso") return ModelKind::lasso;
  if (name == "l1l2" || name == "group_l1l2") return ModelKind::group_l1l2;
  if (name == "fused" || name == "fused_univariate") return ModelKind::fused_univariate;
  throw ParameterError("unknown method '" + name + "'");
}

void PenaltySpec::validate() const {
  if (!(lambda >= 0.0) || !(gamma >= 0.0) || !std::isfinite(lambda) || !std::isfinite(gamma)) {
    throw ParameterError("penalty: lambda and gamma must be finite and non-negative");
  }
  if (!tau.tau) throw ParameterError("penalty: missing edge weight function");
}

Matrix FitResult::predict(const Matrix& X_new) const {
  require_dims(X_new.cols() == x_mean.size(), "prediction input has wrong number of columns");
  return (X_new.rowwise() - x_mean) * solution.B_hat + y_mean.replicate(X_new.rows(), 1);
}

Centered center_columns(const Matrix& X, const Matrix& Y) {
  require_dims(X.rows() == Y.rows(), "X and Y must have the same number of rows");
  if (X.rows() < 1) throw DegenerateInputError("no samples");
  Centered c;
  c.x_mean = X.colwise().mean();
  c.y_mean = Y.colwise().mean();
  c.X = X.rowwise() - c.x_mean;
  c.Y = Y.rowwise() - c.y_mean;
  return c;
}

double objective_gflasso(const Matrix& X, const Matrix& Y, const Matrix& B,
                         const TaskGraph& graph, const PenaltySpec& spec) {
  require_dims(graph.node_count() == B.cols(), "graph nodes vs tasks");
  return half_squared_residual(X, Y, B) + spec.lambda * l1(B) +
         spec.gamma * edge_fusion_sum(B, graph, spec.tau);
}

double objective_group_l1l2(const Matrix& X, const Matrix& Y, const Matrix& B, double lambda) {
  double groups = 0.0;
  for (Index j = 0; j < B.rows(); ++j) groups += B.row(j).norm();
  return half_squared_residual(X, Y, B) + lambda * groups;
}

double objective_fused_univariate(const Matrix& X, const Vector& y, const Vector& beta,
                                  const TaskGraph& input_graph, double lambda, double gamma) {
  require_dims(input_graph.node_count() == beta.size(), "graph nodes vs inputs");
  const Matrix Y = y;
  const Matrix B = beta;
  const Matrix row = beta.transpose();
  return half_squared_residual(X, Y, B) + lambda * l1(B) +
         gamma * edge_fusion_sum(row, input_graph, EdgeWeightFn::unit());
}

FitResult fit_gflasso(const Matrix& X, const Matrix& Y, const TaskGraph& graph,
                      const PenaltySpec& spec, const SolverConfig& config) {
  const auto start = Clock::now();
  spec.validate();
  require_dims(graph.node_count() == Y.cols(), "graph nodes vs columns of Y");
  const Centered c = center_columns(X, Y);
  const FusionOperator op(spec.lambda, spec.gamma, graph, spec.tau);
  Solution sol = prox_grad_fit(c.X, c.Y, op, config);
  const double objective = objective_gflasso(c.X, c.Y, sol.B_hat, graph, spec);
  return finish(std::move(sol), ModelKind::gflasso, spec,
                {graph.node_count(), graph.num_edges(), graph.threshold()}, c, objective, start);
}

FitResult fit_lasso(const Matrix& X, const Matrix& Y, const PenaltySpec& spec,
                    const SolverConfig& config) {
  const auto start = Clock::now();
  spec.validate();
  const Centered c = center_columns(X, Y);
  const TaskGraph empty(static_cast<int>(Y.cols()), {});
  PenaltySpec lasso_spec = spec;
  lasso_spec.gamma = 0.0;
  const FusionOperator op(spec.lambda, 0.0, empty, spec.tau);
  Solution sol = prox_grad_fit(c.X, c.Y, op, config);
  const double objective = objective_gflasso(c.X, c.Y, sol.B_hat, empty, lasso_spec);
  return finish(std::move(sol), ModelKind::lasso, lasso_spec,
                {empty.node_count(), 0, std::nullopt}, c, objective, start);
}

FitResult fit_group_l1l2(const Matrix& X, const Matrix& Y, double lambda,
                         const SolverConfig& config) {
  const auto start = Clock::now();
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) throw ParameterError("l1/l2: lambda must be non-negative");
  config.validate();
  const Centered c = center_columns(X, Y);
  const GramData gram = GramData::from(c.X, c.Y);
  const double L = gram.lambda_max;
  if (!(L > 0.0)) throw DegenerateInputError("l1/l2: X^T X is zero");
  const Index J = gram.inputs();
  const Index K = gram.outputs();

  auto objective_of = [&](const Matrix& B, const Matrix& XtX_B) {
    double groups = 0.0;
    for (Index j = 0; j < J; ++j) groups += B.row(j).norm();
    return gram.loss(B, XtX_B) + lambda * groups;
  };

  // FISTA with the row-wise group soft-threshold prox.
  Matrix B = Matrix::Zero(J, K);
  Matrix B_prev = B;
  Matrix V = B;
  Matrix G(J, K);
  Matrix XtX_v(J, K);
  double momentum = 1.0;
  double f_prev = 0.0;
  Solution sol;
  sol.lipschitz_used = L;
  sol.timing.precompute_seconds = gram.seconds;
  const auto iter_start = Clock::now();
  int t = 0;
  for (; t < config.max_iters; ++t) {
    XtX_v.noalias() = gram.XtX * V;
    G = XtX_v - gram.XtY;
    B_prev.swap(B);
    B = V - G / L;
    for (Index j = 0; j < J; ++j) {
      const double norm = B.row(j).norm();
      const double scale = norm > 0.0 ? std::max(0.0, 1.0 - lambda / (L * norm)) : 0.0;
      B.row(j) *= scale;
    }
    const double next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * momentum * momentum));
    V = B + ((momentum - 1.0) / next) * (B - B_prev);
    momentum = next;

    XtX_v.noalias() = gram.XtX * B;
    const double f = objective_of(B, XtX_v);
    if (!std::isfinite(f)) throw NumericError("l1/l2: objective became non-finite");
    if (config.record_trace) sol.trace.push_back({t, f, f, G.norm()});
    sol.objective_exact = f;
    sol.objective_smooth = f;
    if (t > 0 && std::abs(f_prev - f) / std::max(std::abs(f_prev), 1e-300) < config.rel_obj_tol) {
      sol.converged = true;
      ++t;
      break;
    }
    f_prev = f;
  }
  sol.iterations = t;
  sol.timing.iterate_seconds = std::chrono::duration<double>(Clock::now() - iter_start).count();
  sol.timing.per_iteration_seconds = t > 0 ? sol.timing.iterate_seconds / t : 0.0;
  sol.B_hat = std::move(B);
  const double objective = objective_group_l1l2(c.X, c.Y, sol.B_hat, lambda);
  PenaltySpec spec;
  spec.lambda = lambda;
  return finish(std::move(sol), ModelKind::group_l1l2, spec,
                {static_cast<int>(K), 0, std::nullopt}, c, objective, start);
}

FitResult fit_fused_univariate(const Matrix& X, const Vector& y, const TaskGraph& input_graph,
                               double lambda, double gamma, const SolverConfig& config) {
  const auto start = Clock::now();
  PenaltySpec spec{lambda, gamma, EdgeWeightFn::unit()};
  spec.validate();
  require_dims(input_graph.node_count() == X.cols(), "input graph nodes vs columns of X");
  const Matrix Y = y;
  const Centered c = center_columns(X, Y);
  const InputFusionOperator op(lambda, gamma, input_graph);
  Solution sol = prox_grad_fit(c.X, c.Y, op, config);
  const double objective =
      objective_fused_univariate(c.X, c.Y.col(0), sol.B_hat.col(0), input_graph, lambda, gamma);
  return finish(std::move(sol), ModelKind::fused_univariate, spec,
                {input_graph.node_count(), input_graph.num_edges(), input_graph.threshold()}, c,
                objective, start);
}

}  // namespace gflasso
