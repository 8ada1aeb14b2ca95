#pragma once

#include "gflasso/common.hpp"
#include "gflasso/graph.hpp"
#include "gflasso/solver.hpp"

#include <optional>
#include <string>

namespace gflasso {

enum class ModelKind { gflasso, lasso, group_l1l2, fused_univariate };

std::string to_string(ModelKind kind);
ModelKind model_kind_from_string(const std::string& name);

struct PenaltySpec {
  double lambda = 0.0;
  double gamma = 0.0;
  EdgeWeightFn tau = EdgeWeightFn::absolute();

  void validate() const;
};

struct GraphSummary {
  int nodes = 0;
  int num_edges = 0;
  std::optional<double> rho;
};

// Fitted model on centered data. Immutable once returned.
struct FitResult {
  Solution solution;
  ModelKind kind = ModelKind::gflasso;
  PenaltySpec penalty;
  GraphSummary graph;
  RowVector x_mean;
  RowVector y_mean;
  // Exact objective recomputed from B_hat on the centered training data.
  double objective = 0.0;
  double runtime_seconds = 0.0;

  const Matrix& coefficients() const { return solution.B_hat; }
  // (X_new - x_mean) B_hat + y_mean
  Matrix predict(const Matrix& X_new) const;
};

struct Centered {
  Matrix X;
  Matrix Y;
  RowVector x_mean;
  RowVector y_mean;
};
Centered center_columns(const Matrix& X, const Matrix& Y);

// 1/2||Y - XB||^2 + lambda ||B||_1 + gamma sum_e tau(r_e) sum_j |b_jm - sign(r_e) b_jl|
// by direct summation.
double objective_gflasso(const Matrix& X, const Matrix& Y, const Matrix& B,
                         const TaskGraph& graph, const PenaltySpec& spec);
// 1/2||Y - XB||^2 + lambda sum_j ||b^j||_2 (rows of B).
double objective_group_l1l2(const Matrix& X, const Matrix& Y, const Matrix& B, double lambda);
// 1/2||y - X beta||^2 + lambda ||beta||_1 + gamma sum_e |b_m - sign(r_e) b_l|
double objective_fused_univariate(const Matrix& X, const Vector& y, const Vector& beta,
                                  const TaskGraph& input_graph, double lambda, double gamma);

FitResult fit_gflasso(const Matrix& X, const Matrix& Y, const TaskGraph& graph,
                      const PenaltySpec& spec, const SolverConfig& config);
FitResult fit_lasso(const Matrix& X, const Matrix& Y, const PenaltySpec& spec,
                    const SolverConfig& config);
// Accelerated proximal gradient with the row-wise group soft-threshold.
FitResult fit_group_l1l2(const Matrix& X, const Matrix& Y, double lambda,
                         const SolverConfig& config);
FitResult fit_fused_univariate(const Matrix& X, const Vector& y, const TaskGraph& input_graph,
                               double lambda, double gamma, const SolverConfig& config);

}  // namespace gflasso
