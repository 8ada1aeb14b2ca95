#include "gflasso/evaluate.hpp"

#include "gflasso/rng.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <thread>

namespace gflasso {

namespace {

// Runs fn(i) for i in [0, n) on up to `threads` workers. Each index is
// written by exactly one worker, so results stored per index are
// independent of scheduling.
template <class Fn>
void parallel_for(std::size_t n, int threads, const Fn& fn) {
  const std::size_t workers = std::min<std::size_t>(n, static_cast<std::size_t>(std::max(1, threads)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < n; i = next++) fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

double mean_of(const std::vector<double>& v) {
  if (v.empty()) return 0.0;
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

double sd_of(const std::vector<double>& v) {
  if (v.size() < 2) return 0.0;
  const double m = mean_of(v);
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return std::sqrt(s / static_cast<double>(v.size() - 1));
}

FitResult fit_method(ModelKind method, const Matrix& X, const Matrix& Y, const TaskGraph& graph,
                     const GridPoint& p, const SolverConfig& config, const EdgeWeightFn& tau) {
  switch (method) {
    case ModelKind::gflasso:
      return fit_gflasso(X, Y, graph, {p.lambda, p.gamma, tau}, config);
    case ModelKind::lasso:
      return fit_lasso(X, Y, {p.lambda, 0.0, tau}, config);
    case ModelKind::group_l1l2:
      return fit_group_l1l2(X, Y, p.lambda, config);
    case ModelKind::fused_univariate:
      require_dims(Y.cols() == 1, "fused model needs a single response column");
      return fit_fused_univariate(X, Y.col(0), graph, p.lambda, p.gamma, config);
  }
  throw ParameterError("unknown model kind");
}

}  // namespace

RocCurve roc_curve(const Matrix& B_hat, const Matrix& B_true) {
  require_dims(B_hat.rows() == B_true.rows() && B_hat.cols() == B_true.cols(),
               "roc_curve: B_hat and B_true shapes");
  struct Item {
    double score;
    bool positive;
  };
  std::vector<Item> items;
  items.reserve(static_cast<std::size_t>(B_hat.size()));
  std::size_t positives = 0;
  for (Index i = 0; i < B_hat.size(); ++i) {
    const bool pos = B_true.data()[i] != 0.0;
    positives += pos ? 1 : 0;
    items.push_back({std::abs(B_hat.data()[i]), pos});
  }
  const std::size_t negatives = items.size() - positives;
  if (positives == 0) throw DegenerateInputError("roc_curve: true support is empty");
  if (negatives == 0) throw DegenerateInputError("roc_curve: true support covers every entry");
  std::stable_sort(items.begin(), items.end(),
                   [](const Item& a, const Item& b) { return a.score > b.score; });

  RocCurve roc;
  roc.points.push_back({0.0, 0.0});
  std::size_t tp = 0, fp = 0;
  for (std::size_t i = 0; i < items.size();) {
    // Entries sharing a magnitude cross the threshold together.
    std::size_t j = i;
    while (j < items.size() && items[j].score == items[i].score) {
      (items[j].positive ? tp : fp) += 1;
      ++j;
    }
    roc.points.push_back({static_cast<double>(fp) / static_cast<double>(negatives),
                          static_cast<double>(tp) / static_cast<double>(positives)});
    i = j;
  }
  for (std::size_t i = 1; i < roc.points.size(); ++i) {
    const RocPoint& a = roc.points[i - 1];
    const RocPoint& b = roc.points[i];
    roc.auc += (b.fpr - a.fpr) * 0.5 * (a.tpr + b.tpr);
  }
  return roc;
}

double prediction_error(const FitResult& fit, const Matrix& X_test, const Matrix& Y_test) {
  require_dims(X_test.rows() == Y_test.rows(), "test X and Y row counts");
  require_dims(Y_test.cols() == fit.y_mean.size(), "test Y columns vs fitted tasks");
  if (X_test.rows() == 0) throw DegenerateInputError("prediction_error: empty test set");
  const Matrix R = Y_test - fit.predict(X_test);
  return R.squaredNorm() / static_cast<double>(R.size());
}

std::vector<double> logspace(double lo, double hi, int n) {
  if (n < 1 || !(lo > 0.0) || !(hi > 0.0)) throw ParameterError("logspace: need n >= 1 and positive bounds");
  std::vector<double> out;
  if (n == 1) return {lo};
  const double a = std::log10(lo);
  const double b = std::log10(hi);
  for (int i = 0; i < n; ++i) out.push_back(std::pow(10.0, a + (b - a) * i / (n - 1)));
  return out;
}

std::vector<GridPoint> make_grid(ModelKind method, const std::vector<double>& lambdas,
                                 const std::vector<double>& gammas) {
  std::vector<GridPoint> grid;
  const bool uses_gamma = method == ModelKind::gflasso || method == ModelKind::fused_univariate;
  for (double l : lambdas) {
    if (!uses_gamma) {
      grid.push_back({l, 0.0});
      continue;
    }
    for (double g : gammas) grid.push_back({l, g});
  }
  return grid;
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("GFLASSO_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

Selection select_regularization(const Matrix& X, const Matrix& Y, const TaskGraph& graph,
                                ModelKind method, const std::vector<GridPoint>& grid,
                                int holdout, const SolverConfig& config,
                                const EdgeWeightFn& tau, int threads) {
  require_dims(X.rows() == Y.rows(), "X and Y row counts");
  if (grid.empty()) throw ParameterError("select_regularization: empty grid");
  if (holdout < 1 || holdout >= X.rows()) {
    throw ParameterError("select_regularization: holdout must be in [1, N)");
  }
  const Index n_train = X.rows() - holdout;
  const Matrix X_train = X.topRows(n_train);
  const Matrix Y_train = Y.topRows(n_train);
  const Matrix X_val = X.bottomRows(holdout);
  const Matrix Y_val = Y.bottomRows(holdout);

  Selection sel;
  sel.table.resize(grid.size());
  parallel_for(grid.size(), threads, [&](std::size_t i) {
    GridEvaluation& row = sel.table[i];
    row.point = grid[i];
    try {
      const FitResult fit = fit_method(method, X_train, Y_train, graph, grid[i], config, tau);
      row.validation_mse = prediction_error(fit, X_val, Y_val);
      row.iterations = fit.solution.iterations;
      row.converged = fit.solution.converged;
      row.ok = std::isfinite(row.validation_mse);
      if (!row.ok) row.error = "non-finite validation error";
    } catch (const Error& e) {
      row.ok = false;
      row.error = e.what();
    }
  });

  const GridEvaluation* best = nullptr;
  for (const GridEvaluation& row : sel.table) {
    if (!row.ok) continue;
    if (best == nullptr || row.validation_mse < best->validation_mse) {
      best = &row;
      continue;
    }
    if (row.validation_mse == best->validation_mse) {
      const bool larger_lambda = row.point.lambda > best->point.lambda;
      const bool same_lambda = row.point.lambda == best->point.lambda;
      if (larger_lambda || (same_lambda && row.point.gamma > best->point.gamma)) best = &row;
    }
  }
  if (best == nullptr) throw Error("select_regularization: every grid point failed");
  sel.best = best->point;
  sel.final_fit = fit_method(method, X, Y, graph, sel.best, config, tau);
  return sel;
}

void ExperimentConfig::validate() const {
  sim.validate();
  if (n_test < 1) throw ParameterError("experiment: n_test must be at least 1");
  if (replicates < 1) throw ParameterError("experiment: replicates must be at least 1");
  if (holdout < 1 || holdout >= sim.N) throw ParameterError("experiment: holdout must be in [1, N)");
  if (!(rho >= 0.0 && rho < 1.0)) throw ParameterError("experiment: rho must be in [0, 1)");
  if (lambda_grid.empty() || gamma_grid.empty()) throw ParameterError("experiment: empty grid");
  if (methods.empty()) throw ParameterError("experiment: no methods");
  for (ModelKind m : methods) {
    if (m == ModelKind::fused_univariate) throw ParameterError("experiment: fused model is univariate");
  }
  solver.validate();
}

const MethodOutcome* ReplicateResult::find(ModelKind method) const {
  for (const auto& o : outcomes) {
    if (o.method == method) return &o;
  }
  return nullptr;
}

const MethodSummary* ExperimentReport::summary(ModelKind method) const {
  for (const auto& s : summaries) {
    if (s.method == method) return &s;
  }
  return nullptr;
}

ExperimentReport run_replicates(const ExperimentConfig& config) {
  config.validate();
  ExperimentReport report;
  report.config = config;
  report.replicates.resize(static_cast<std::size_t>(config.replicates));

  parallel_for(report.replicates.size(), resolve_threads(config.threads), [&](std::size_t r) {
    ReplicateResult& rep = report.replicates[r];
    rep.index = static_cast<int>(r);
    rep.seed = replicate_seed(config.sim.seed, r);
    SimulationSpec spec = config.sim;
    spec.seed = rep.seed;
    const SimulatedData data = simulate(spec, config.n_test);
    TaskGraph graph;
    std::string graph_error;
    try {
      graph = build_correlation_graph(data.Y, config.rho);
      rep.num_edges = graph.num_edges();
    } catch (const Error& e) {
      graph_error = e.what();
    }
    for (ModelKind method : config.methods) {
      MethodOutcome out;
      out.method = method;
      try {
        if (!graph_error.empty()) throw Error(graph_error);
        const auto grid = make_grid(method, config.lambda_grid, config.gamma_grid);
        const Selection sel = select_regularization(data.X, data.Y, graph, method, grid,
                                                    config.holdout, config.solver);
        out.selected = sel.best;
        out.roc = roc_curve(sel.final_fit.coefficients(), data.truth.B_true);
        out.auc = out.roc.auc;
        out.test_mse = prediction_error(sel.final_fit, data.X_test, data.Y_test);
        out.iterations = sel.final_fit.solution.iterations;
        out.converged = sel.final_fit.solution.converged;
        out.fit_seconds = sel.final_fit.runtime_seconds;
        out.ok = true;
      } catch (const Error& e) {
        out.ok = false;
        out.error = e.what();
      }
      rep.outcomes.push_back(std::move(out));
    }
  });

  for (ModelKind method : config.methods) {
    MethodSummary s;
    s.method = method;
    std::vector<double> aucs, mses, secs, iters;
    for (const auto& rep : report.replicates) {
      const MethodOutcome* o = rep.find(method);
      if (o == nullptr || !o->ok) continue;
      aucs.push_back(o->auc);
      mses.push_back(o->test_mse);
      secs.push_back(o->fit_seconds);
      iters.push_back(o->iterations);
    }
    s.succeeded = static_cast<int>(aucs.size());
    s.auc_mean = mean_of(aucs);
    s.auc_sd = sd_of(aucs);
    s.mse_mean = mean_of(mses);
    s.mse_sd = sd_of(mses);
    s.seconds_mean = mean_of(secs);
    s.iterations_mean = mean_of(iters);
    report.summaries.push_back(s);
  }
  for (const auto& rep : report.replicates) {
    bool failed = false;
    for (const auto& o : rep.outcomes) failed |= !o.ok;
    report.failures += failed ? 1 : 0;
    const MethodOutcome* gf = rep.find(ModelKind::gflasso);
    if (gf == nullptr || !gf->ok) continue;
    for (const auto& o : rep.outcomes) {
      if (o.method == ModelKind::gflasso) continue;
      int& wins = report.gflasso_wins[to_string(o.method)];
      if (o.ok && gf->auc >= o.auc) ++wins;
    }
  }
  return report;
}

std::string to_string(BenchAxis axis) {
  switch (axis) {
    case BenchAxis::J: return "J";
    case BenchAxis::N: return "N";
    case BenchAxis::K: return "K";
    case BenchAxis::rho: return "rho";
  }
  return "?";
}

BenchAxis bench_axis_from_string(const std::string& name) {
  if (name == "J") return BenchAxis::J;
  if (name == "N") return BenchAxis::N;
  if (name == "K") return BenchAxis::K;
  if (name == "rho") return BenchAxis::rho;
  throw ParameterError("unknown bench axis '" + name + "' (expected J, N, K or rho)");
}

std::string to_string(BenchMethod method) {
  return method == BenchMethod::proxgrad ? "proxgrad" : "subgrad";
}

BenchMethod bench_method_from_string(const std::string& name) {
  if (name == "proxgrad") return BenchMethod::proxgrad;
  if (name == "subgrad") return BenchMethod::subgrad;
  throw ParameterError("unknown bench method '" + name + "' (expected proxgrad or subgrad)");
}

void BenchConfig::validate() const {
  if (values.empty()) throw ParameterError("bench: no sweep values");
  if (methods.empty()) throw ParameterError("bench: no methods");
  if (subgradient_iters < 1) throw ParameterError("bench: subgradient_iters must be positive");
  solver.validate();
}

std::vector<BenchRow> run_bench(const BenchConfig& config) {
  config.validate();
  std::vector<BenchRow> rows;
  for (double value : config.values) {
    SimulationSpec spec;
    spec.N = config.N;
    spec.J = config.J;
    spec.K = config.K;
    spec.b = config.b;
    spec.seed = config.seed;
    double rho = config.rho;
    switch (config.axis) {
      case BenchAxis::J: spec.J = static_cast<int>(std::lround(value)); break;
      case BenchAxis::N: spec.N = static_cast<int>(std::lround(value)); break;
      case BenchAxis::K: spec.K = static_cast<int>(std::lround(value)); break;
      case BenchAxis::rho: rho = value; break;
    }
    spec.group_sizes = default_group_sizes(spec.K);
    const SimulatedData data = simulate(spec);
    const TaskGraph graph = build_correlation_graph(data.Y, rho);
    const Centered c = center_columns(data.X, data.Y);
    const GramData gram = GramData::from(c.X, c.Y);
    const FusionOperator op(config.lambda, config.gamma, graph);
    for (BenchMethod method : config.methods) {
      Solution sol;
      if (method == BenchMethod::proxgrad) {
        sol = prox_grad_fit(gram, op, config.solver);
      } else {
        SubgradientConfig sc;
        sc.max_iters = config.subgradient_iters;
        sol = subgradient_fit(gram, op, sc);
      }
      BenchRow row;
      row.axis = config.axis;
      row.value = value;
      row.method = method;
      row.N = spec.N;
      row.J = spec.J;
      row.K = spec.K;
      row.rho = rho;
      row.num_edges = graph.num_edges();
      row.iterations = sol.iterations;
      row.objective = sol.objective_exact;
      row.precompute_seconds = gram.seconds;
      row.total_seconds = gram.seconds + sol.timing.iterate_seconds;
      row.per_iteration_seconds = sol.timing.per_iteration_seconds;
      row.converged = sol.converged;
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace gflasso
