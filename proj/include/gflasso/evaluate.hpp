#pragma once

#include "gflasso/common.hpp"
#include "gflasso/graph.hpp"
#include "gflasso/models.hpp"
#include "gflasso/simulate.hpp"
#include "gflasso/solver.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gflasso {

struct RocPoint {
  double fpr = 0.0;
  double tpr = 0.0;
};

struct RocCurve {
  std::vector<RocPoint> points;
  double auc = 0.0;
};

// Sweeps a magnitude threshold over the distinct values of |B_hat|.
RocCurve roc_curve(const Matrix& B_hat, const Matrix& B_true);

// Mean squared error over all N_test * K entries.
double prediction_error(const FitResult& fit, const Matrix& X_test, const Matrix& Y_test);

// log-spaced values from lo to hi inclusive.
std::vector<double> logspace(double lo, double hi, int n);

struct GridPoint {
  double lambda = 0.0;
  double gamma = 0.0;
};

struct GridEvaluation {
  GridPoint point;
  bool ok = false;
  double validation_mse = 0.0;
  int iterations = 0;
  bool converged = false;
  std::string error;
};

struct Selection {
  GridPoint best;
  std::vector<GridEvaluation> table;
  FitResult final_fit;
};

// Train on the first N - holdout rows, validate on the last holdout rows, pick
// the minimal validation MSE (ties: larger lambda, then larger gamma) and
// refit on all N rows. gamma is ignored for lasso and group_l1l2.
Selection select_regularization(const Matrix& X, const Matrix& Y, const TaskGraph& graph,
                                ModelKind method, const std::vector<GridPoint>& grid,
                                int holdout, const SolverConfig& config,
                                const EdgeWeightFn& tau = EdgeWeightFn::absolute(),
                                int threads = 1);

std::vector<GridPoint> make_grid(ModelKind method, const std::vector<double>& lambdas,
                                 const std::vector<double>& gammas);

// Number of worker threads: explicit value if > 0, else GFLASSO_THREADS, else
// hardware concurrency.
int resolve_threads(int requested);

struct ExperimentConfig {
  SimulationSpec sim;
  int n_test = 50;
  double rho = 0.1;
  int replicates = 10;
  int holdout = 30;
  std::vector<double> lambda_grid = logspace(1e-3, 1e1, 10);
  std::vector<double> gamma_grid = logspace(1e-3, 1e1, 10);
  std::vector<ModelKind> methods{ModelKind::gflasso, ModelKind::lasso, ModelKind::group_l1l2};
  SolverConfig solver;
  int threads = 0;
  bool include_timing = false;

  void validate() const;
};

struct MethodOutcome {
  ModelKind method = ModelKind::gflasso;
  bool ok = false;
  std::string error;
  double auc = 0.0;
  double test_mse = 0.0;
  GridPoint selected;
  int iterations = 0;
  bool converged = false;
  double fit_seconds = 0.0;
  RocCurve roc;
};

struct ReplicateResult {
  int index = 0;
  std::uint64_t seed = 0;
  int num_edges = 0;
  std::vector<MethodOutcome> outcomes;

  const MethodOutcome* find(ModelKind method) const;
};

struct MethodSummary {
  ModelKind method = ModelKind::gflasso;
  int succeeded = 0;
  double auc_mean = 0.0;
  double auc_sd = 0.0;
  double mse_mean = 0.0;
  double mse_sd = 0.0;
  double seconds_mean = 0.0;
  double iterations_mean = 0.0;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::vector<ReplicateResult> replicates;
  std::vector<MethodSummary> summaries;
  // Replicates where gflasso AUC >= method AUC, keyed by the other method.
  std::map<std::string, int> gflasso_wins;
  int failures = 0;

  const MethodSummary* summary(ModelKind method) const;
};

ExperimentReport run_replicates(const ExperimentConfig& config);

enum class BenchAxis { J, N, K, rho };
std::string to_string(BenchAxis axis);
BenchAxis bench_axis_from_string(const std::string& name);

enum class BenchMethod { proxgrad, subgrad };
std::string to_string(BenchMethod method);
BenchMethod bench_method_from_string(const std::string& name);

struct BenchConfig {
  BenchAxis axis = BenchAxis::J;
  std::vector<double> values{50, 100, 150, 200};
  std::vector<BenchMethod> methods{BenchMethod::proxgrad};
  int N = 200;
  int J = 50;
  int K = 10;
  double rho = 0.5;
  double b = 0.8;
  double lambda = 1.0;
  double gamma = 1.0;
  std::uint64_t seed = 0;
  SolverConfig solver;
  long long subgradient_iters = 1000;

  void validate() const;
};

struct BenchRow {
  BenchAxis axis = BenchAxis::J;
  double value = 0.0;
  BenchMethod method = BenchMethod::proxgrad;
  int N = 0;
  int J = 0;
  int K = 0;
  double rho = 0.0;
  int num_edges = 0;
  int iterations = 0;
  double objective = 0.0;
  double precompute_seconds = 0.0;
  double total_seconds = 0.0;
  double per_iteration_seconds = 0.0;
  bool converged = false;
};

// Runs sequentially so timings are not skewed by contention.
std::vector<BenchRow> run_bench(const BenchConfig& config);

}  // namespace gflasso
