#pragma once

#include "gflasso/common.hpp"
#include "gflasso/smoothing.hpp"

#include <limits>
#include <vector>

namespace gflasso {

enum class MuMode { fixed, accuracy };

struct SolverConfig {
  // fixed: mu = mu_fixed. accuracy: mu = epsilon / (2 D).
  MuMode mu_mode = MuMode::fixed;
  double mu_fixed = 1e-4;
  double epsilon = 1e-3;
  double rel_obj_tol = 1e-6;
  int max_iters = 50000;
  bool record_trace = false;
  // Stop as soon as the exact objective drops to this value. NaN disables.
  double target_objective = std::numeric_limits<double>::quiet_NaN();

  void validate() const;
};

struct TraceEntry {
  int iter = 0;
  double f_exact = 0.0;
  double f_smooth = 0.0;
  double grad_norm = 0.0;
};

// Wall-clock figures; excluded from determinism comparisons.
struct SolveTiming {
  double precompute_seconds = 0.0;
  double iterate_seconds = 0.0;
  double per_iteration_seconds = 0.0;
};

struct Solution {
  Matrix B_hat;
  double objective_exact = 0.0;
  double objective_smooth = 0.0;
  int iterations = 0;
  bool converged = false;
  bool reached_target = false;
  std::vector<TraceEntry> trace;
  double lipschitz_used = 0.0;
  double mu_used = 0.0;
  double gap_D = 0.0;
  SolveTiming timing;
};

// Sufficient statistics of the squared loss 1/2 ||Y - X B||_F^2.
struct GramData {
  Matrix XtX;
  Matrix XtY;
  double half_yty = 0.0;
  double lambda_max = 0.0;  // largest eigenvalue of XtX
  Index samples = 0;
  double seconds = 0.0;

  static GramData from(const Matrix& X, const Matrix& Y);

  Index inputs() const { return XtX.rows(); }
  Index outputs() const { return XtY.cols(); }
  // 1/2 ||Y - X B||^2 given XtX B.
  double loss(const Matrix& B, const Matrix& XtX_B) const;
  double loss(const Matrix& B) const;
};

// Power iteration from the normalized all-ones vector.
double largest_eigenvalue(const Matrix& M, double tol = 1e-8, int max_iters = 100000);

// L_U = lambda_max(XtX) + norm_bound^2 / mu.
double lipschitz_upper(double lambda_max_XtX, const PenaltyMap& op, double mu);
double lipschitz_upper(const Matrix& X, const FusionOperator& op, double mu);

// grad of 1/2||Y - XB||^2 + f_mu(B): XtX B - XtY + Gamma*(A*).
Matrix smooth_objective_gradient(const GramData& gram, const PenaltyMap& op,
                                 const Matrix& B, double mu);

// Accelerated three-sequence scheme on the smoothed objective. Stops on the
// relative change of the exact objective. Hitting max_iters is reported via
// Solution::converged, not an exception.
Solution prox_grad_fit(const GramData& gram, const PenaltyMap& op, const SolverConfig& config);
Solution prox_grad_fit(const Matrix& X, const Matrix& Y, const PenaltyMap& op,
                       const SolverConfig& config);

struct SubgradientConfig {
  // Step c / sqrt(t + 1). c <= 0 selects c = 1 / lambda_max(XtX).
  double step_scale = 0.0;
  long long max_iters = 100000;
  bool record_trace = false;
  // Trace every n-th iteration (plus the last one).
  long long trace_every = 1;
  double target_objective = std::numeric_limits<double>::quiet_NaN();
};

// Subgradient method on the exact objective; returns the best iterate seen.
// Trace entries hold the best-so-far objective in f_exact and the current
// iterate's objective in f_smooth.
Solution subgradient_fit(const GramData& gram, const PenaltyMap& op,
                         const SubgradientConfig& config);
Solution subgradient_fit(const Matrix& X, const Matrix& Y, const PenaltyMap& op,
                         const SubgradientConfig& config);

// Iteration bound for reaching f(B^t) - f(B*) <= eps with mu = eps / (2D):
// sqrt(4 ||B*||^2 / eps * (lambda_max + 2 D ||Gamma||_U^2 / eps)).
double iteration_bound(double norm_B_star, double eps, double D, double gamma_norm_U,
                       double lambda_max_XtX);

// Exact objective from the sufficient statistics: loss + ||Gamma(B)||_1.
double exact_objective(const GramData& gram, const PenaltyMap& op, const Matrix& B);

}  // namespace gflasso
