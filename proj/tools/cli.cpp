#include "cli.hpp"

#include "gflasso/evaluate.hpp"
#include "gflasso/graph.hpp"
#include "gflasso/io.hpp"
#include "gflasso/models.hpp"
#include "gflasso/simulate.hpp"
#include "gflasso/solver.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <optional>
#include <ostream>

namespace gflasso::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// Output files are staged in memory and only written once the command has
// fully succeeded, each through write-temp-then-rename.
class Artifacts {
 public:
  Artifacts(std::string command, const std::vector<std::string>& argv, fs::path dir)
      : command_(std::move(command)), argv_(argv), dir_(std::move(dir)) {}

  void add(const std::string& name, std::string content) {
    files_.emplace_back(name, std::move(content));
  }
  void add_input(const fs::path& path, const std::string& content) {
    inputs_.push_back({{"path", path.string()}, {"sha256", sha256_hex(content)}});
  }
  void set_config(json config) { config_ = std::move(config); }
  void set_seed(std::uint64_t seed) { seed_ = seed; }

  void commit() {
    json artifacts = json::array();
    for (const auto& [name, content] : files_) {
      artifacts.push_back({{"path", name}, {"sha256", sha256_hex(content)}});
    }
    json manifest = {{"command", command_},
                     {"argv", json(std::vector<std::string>(argv_.begin() + 1, argv_.end()))},
                     {"version", kVersion},
                     {"config", config_},
                     {"config_digest", sha256_hex(config_.dump())},
                     {"inputs", inputs_},
                     {"artifacts", artifacts}};
    manifest["seed"] = seed_ ? json(*seed_) : json(nullptr);
    for (const auto& [name, content] : files_) write_file_atomic(dir_ / name, content);
    write_file_atomic(dir_ / "manifest.json", manifest.dump(2) + "\n");
  }

 private:
  std::string command_;
  std::vector<std::string> argv_;
  fs::path dir_;
  std::vector<std::pair<std::string, std::string>> files_;
  json inputs_ = json::array();
  json config_ = json::object();
  std::optional<std::uint64_t> seed_;
};

void require_output_dir(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw ParameterError("output directory '" + dir.string() + "' does not exist");
}

struct SolverFlags {
  double mu = 1e-4;
  double epsilon = 0.0;
  double tol = 1e-6;
  int max_iters = 50000;

  void add_to(CLI::App* app) {
    app->add_option("--mu", mu, "Smoothing parameter (fixed-mu mode)")->capture_default_str();
    app->add_option("--epsilon", epsilon,
                    "Target accuracy; when > 0 selects mu = epsilon / (2D) instead of --mu");
    app->add_option("--tol", tol, "Relative objective-change stopping tolerance")->capture_default_str();
    app->add_option("--max-iters", max_iters, "Iteration cap")->capture_default_str();
  }

  SolverConfig config() const {
    SolverConfig c;
    c.mu_fixed = mu;
    if (epsilon > 0.0) {
      c.mu_mode = MuMode::accuracy;
      c.epsilon = epsilon;
    }
    c.rel_obj_tol = tol;
    c.max_iters = max_iters;
    c.validate();
    return c;
  }
};

std::vector<std::string> ids(const std::string& prefix, Index n) {
  std::vector<std::string> out;
  for (Index i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i + 1));
  return out;
}

struct LoadedData {
  Matrix X;
  Matrix Y;
};

LoadedData load_xy(const std::string& x_path, const std::string& y_path, Artifacts& art) {
  const std::string xs = read_file(x_path);
  const std::string ys = read_file(y_path);
  art.add_input(x_path, xs);
  art.add_input(y_path, ys);
  LoadedData d;
  try {
    d.X = matrix_from_csv(xs);
  } catch (const ParseError& e) {
    throw ParseError(x_path + ": " + e.what(), e.line(), e.column());
  }
  try {
    d.Y = matrix_from_csv(ys);
  } catch (const ParseError& e) {
    throw ParseError(y_path + ": " + e.what(), e.line(), e.column());
  }
  if (d.X.rows() != d.Y.rows()) {
    throw DimensionError("dimension mismatch: X has " + std::to_string(d.X.rows()) + " rows but Y has " +
                         std::to_string(d.Y.rows()));
  }
  return d;
}

// --- simulate ---------------------------------------------------------------

struct SimulateCmd {
  std::string out;
  std::string spec_file;
  SimulationSpec spec;
  std::vector<int> groups;
  int n_test = 0;

  void add_to(CLI::App* app) {
    app->add_option("--out", out, "Existing output directory")->required();
    app->add_option("--spec", spec_file, "JSON simulation spec (overrides the flags below)");
    app->add_option("--n", spec.N, "Training samples")->capture_default_str();
    app->add_option("--j", spec.J, "Inputs")->capture_default_str();
    app->add_option("--k", spec.K, "Outputs")->capture_default_str();
    app->add_option("--b", spec.b, "Non-zero coefficient value")->capture_default_str();
    app->add_option("--noise-sd", spec.noise_sd, "Noise standard deviation")->capture_default_str();
    app->add_option("--seed", spec.seed, "Master seed")->capture_default_str();
    app->add_option("--groups", groups, "Output group sizes, comma separated (default K/3,K/3,rest)")
        ->delimiter(',');
    app->add_option("--n-test", n_test, "Extra test samples written to X_test.csv/Y_test.csv")
        ->capture_default_str();
  }

  int run(const std::vector<std::string>& argv, std::ostream& out_stream) {
    require_output_dir(out);
    Artifacts art("simulate", argv, out);
    if (!spec_file.empty()) {
      const std::string text = read_file(spec_file);
      art.add_input(spec_file, text);
      json j;
      try {
        j = json::parse(text);
      } catch (const json::exception& e) {
        throw ParameterError(std::string("spec file: ") + e.what());
      }
      spec = simulation_spec_from_json(j);
    } else {
      spec.group_sizes = groups.empty() ? default_group_sizes(spec.K) : groups;
    }
    const SimulatedData data = simulate(spec, n_test);
    json spec_json = to_json(spec);
    spec_json["n_test"] = n_test;
    art.set_config(spec_json);
    art.set_seed(spec.seed);
    art.add("X.csv", matrix_to_csv(data.X, ids("x", data.X.cols())));
    art.add("Y.csv", matrix_to_csv(data.Y, ids("y", data.Y.cols())));
    art.add("B_true.csv", matrix_to_csv(data.truth.B_true, ids("y", data.truth.B_true.cols())));
    if (n_test > 0) {
      art.add("X_test.csv", matrix_to_csv(data.X_test, ids("x", data.X_test.cols())));
      art.add("Y_test.csv", matrix_to_csv(data.Y_test, ids("y", data.Y_test.cols())));
    }
    art.add("spec.json", spec_json.dump(2) + "\n");
    art.commit();
    out_stream << "simulated N=" << spec.N << " J=" << spec.J << " K=" << spec.K
               << " support=" << data.truth.support.size() << " -> " << out << "\n";
    return kOk;
  }
};

// --- fit --------------------------------------------------------------------

struct FitCmd {
  std::string method = "gflasso";
  std::string x, y, out;
  double rho = 0.1;
  double lambda = 1.0;
  double gamma = 1.0;
  std::string graph_file;
  std::string input_graph_file;
  bool trace = false;
  bool timing = false;
  SolverFlags solver;

  void add_to(CLI::App* app) {
    app->add_option("--method", method, "gflasso | lasso | l1l2 | fused")->capture_default_str();
    app->add_option("--x", x, "Input matrix CSV (N x J)")->required();
    app->add_option("--y", y, "Output matrix CSV (N x K; N x 1 for fused)")->required();
    app->add_option("--out", out, "Existing output directory")->required();
    app->add_option("--rho", rho,
                    "Correlation threshold; edge iff |r| > rho (strict, ties excluded)")
        ->capture_default_str();
    app->add_option("--lambda", lambda, "Sparsity penalty")->capture_default_str();
    app->add_option("--gamma", gamma, "Fusion penalty")->capture_default_str();
    app->add_option("--graph", graph_file, "Task edge list CSV (m,l,r; 1-based) instead of thresholding");
    app->add_option("--input-graph", input_graph_file,
                    "fused: edge list over inputs (default: chain 1-2-...-J)");
    app->add_flag("--trace", trace, "Write trace.csv");
    app->add_flag("--timing", timing, "Include wall-clock timings in fit.json");
    solver.add_to(app);
  }

  int run(const std::vector<std::string>& argv, std::ostream& out_stream) {
    require_output_dir(out);
    Artifacts art("fit", argv, out);
    const ModelKind kind = model_kind_from_string(method);
    SolverConfig config = solver.config();
    config.record_trace = trace;
    const LoadedData d = load_xy(x, y, art);
    json cfg = {{"method", to_string(kind)}, {"lambda", lambda}, {"gamma", gamma},
                {"rho", rho}, {"solver", to_json(config)}};

    FitResult fit;
    std::optional<TaskGraph> graph;
    switch (kind) {
      case ModelKind::gflasso:
        if (!graph_file.empty()) {
          const std::string text = read_file(graph_file);
          art.add_input(graph_file, text);
          graph = graph_from_csv(text, static_cast<int>(d.Y.cols()));
        } else {
          graph = build_correlation_graph(d.Y, rho);
        }
        fit = fit_gflasso(d.X, d.Y, *graph, {lambda, gamma, EdgeWeightFn::absolute()}, config);
        break;
      case ModelKind::lasso:
        fit = fit_lasso(d.X, d.Y, {lambda, 0.0, EdgeWeightFn::absolute()}, config);
        break;
      case ModelKind::group_l1l2:
        fit = fit_group_l1l2(d.X, d.Y, lambda, config);
        break;
      case ModelKind::fused_univariate: {
        if (d.Y.cols() != 1) throw DimensionError("dimension mismatch: fused needs a single-column Y");
        if (!input_graph_file.empty()) {
          const std::string text = read_file(input_graph_file);
          art.add_input(input_graph_file, text);
          graph = graph_from_csv(text, static_cast<int>(d.X.cols()));
        } else {
          graph = chain_graph(static_cast<int>(d.X.cols()));
        }
        fit = fit_fused_univariate(d.X, d.Y.col(0), *graph, lambda, gamma, config);
        break;
      }
    }
    art.set_config(cfg);
    art.add("B_hat.csv", matrix_to_csv(fit.coefficients(), ids("y", fit.coefficients().cols())));
    art.add("fit.json", fit_to_json(fit, timing).dump(2) + "\n");
    if (graph) art.add("graph.csv", graph_to_csv(*graph));
    if (trace) art.add("trace.csv", trace_to_csv(fit.solution.trace));
    art.commit();
    out_stream << to_string(kind) << ": objective=" << format_double(fit.objective)
               << " iterations=" << fit.solution.iterations
               << (fit.solution.converged ? " converged" : " NOT converged (max iterations)") << "\n";
    return fit.solution.converged ? kOk : kNotConverged;
  }
};

// --- cv ---------------------------------------------------------------------

struct CvCmd {
  std::string method = "gflasso";
  std::string x, y, out;
  double rho = 0.1;
  std::vector<double> lambdas;
  std::vector<double> gammas;
  int holdout = 30;
  int threads = 0;
  SolverFlags solver;

  void add_to(CLI::App* app) {
    app->add_option("--method", method, "gflasso | lasso | l1l2 | fused")->capture_default_str();
    app->add_option("--x", x, "Input matrix CSV")->required();
    app->add_option("--y", y, "Output matrix CSV")->required();
    app->add_option("--out", out, "Existing output directory")->required();
    app->add_option("--rho", rho, "Correlation threshold (strict |r| > rho)")->capture_default_str();
    app->add_option("--lambdas", lambdas, "lambda grid, comma separated (default logspace(1e-3,10,10))")
        ->delimiter(',');
    app->add_option("--gammas", gammas, "gamma grid, comma separated (default logspace(1e-3,10,10))")
        ->delimiter(',');
    app->add_option("--holdout", holdout, "Validation rows taken from the end")->capture_default_str();
    app->add_option("--threads", threads, "Worker cap (default: GFLASSO_THREADS or all cores)");
    solver.add_to(app);
  }

  int run(const std::vector<std::string>& argv, std::ostream& out_stream) {
    require_output_dir(out);
    Artifacts art("cv", argv, out);
    const ModelKind kind = model_kind_from_string(method);
    const SolverConfig config = solver.config();
    const LoadedData d = load_xy(x, y, art);
    if (holdout < 1 || holdout >= d.X.rows()) {
      throw ParameterError("holdout must be in [1, N) with N = " + std::to_string(d.X.rows()));
    }
    if (lambdas.empty()) lambdas = logspace(1e-3, 1e1, 10);
    if (gammas.empty()) gammas = logspace(1e-3, 1e1, 10);
    TaskGraph graph;
    if (kind == ModelKind::gflasso) graph = build_correlation_graph(d.Y, rho);
    if (kind == ModelKind::fused_univariate) graph = chain_graph(static_cast<int>(d.X.cols()));
    const auto grid = make_grid(kind, lambdas, gammas);
    const Selection sel = select_regularization(d.X, d.Y, graph, kind, grid, holdout, config,
                                                EdgeWeightFn::absolute(), resolve_threads(threads));
    json cfg = {{"method", to_string(kind)}, {"rho", rho},         {"lambdas", lambdas},
                {"gammas", gammas},          {"holdout", holdout}, {"solver", to_json(config)}};
    art.set_config(cfg);
    json result = selection_to_json(sel, kind, holdout);
    result["rho"] = rho;
    art.add("cv.json", result.dump(2) + "\n");
    art.commit();
    out_stream << "selected lambda=" << format_double(sel.best.lambda)
               << " gamma=" << format_double(sel.best.gamma) << "\n";
    return kOk;
  }
};

// --- bench ------------------------------------------------------------------

struct BenchCmd {
  std::string axis = "J";
  std::vector<double> values;
  std::vector<std::string> methods{"proxgrad"};
  std::string out;
  BenchConfig config;
  int max_iters = 2000;
  double tol = 1e-6;
  double mu = 1e-4;

  void add_to(CLI::App* app) {
    app->add_option("--axis", axis, "Sweep axis: J | N | K | rho")->capture_default_str();
    app->add_option("--values", values, "Sweep values, comma separated")->delimiter(',');
    app->add_option("--methods", methods, "proxgrad,subgrad")->delimiter(',');
    app->add_option("--out", out, "Existing output directory")->required();
    app->add_option("--n", config.N, "Samples when not swept")->capture_default_str();
    app->add_option("--j", config.J, "Inputs when not swept")->capture_default_str();
    app->add_option("--k", config.K, "Outputs when not swept")->capture_default_str();
    app->add_option("--rho", config.rho, "Threshold when not swept")->capture_default_str();
    app->add_option("--b", config.b, "Signal value")->capture_default_str();
    app->add_option("--lambda", config.lambda, "Sparsity penalty")->capture_default_str();
    app->add_option("--gamma", config.gamma, "Fusion penalty")->capture_default_str();
    app->add_option("--seed", config.seed, "Data seed")->capture_default_str();
    app->add_option("--mu", mu, "Smoothing parameter")->capture_default_str();
    app->add_option("--tol", tol, "Relative objective tolerance")->capture_default_str();
    app->add_option("--max-iters", max_iters, "proxgrad iteration cap")->capture_default_str();
    app->add_option("--subgrad-iters", config.subgradient_iters, "subgradient iterations")
        ->capture_default_str();
  }

  int run(const std::vector<std::string>& argv, std::ostream& out_stream) {
    require_output_dir(out);
    Artifacts art("bench", argv, out);
    config.axis = bench_axis_from_string(axis);
    if (values.empty()) {
      switch (config.axis) {
        case BenchAxis::J: values = {50, 100, 150, 200}; break;
        case BenchAxis::N: values = {500, 1000, 2000, 4000}; break;
        case BenchAxis::K: values = {10, 20, 30, 40}; break;
        case BenchAxis::rho: values = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}; break;
      }
    }
    config.values = values;
    config.methods.clear();
    for (const auto& m : methods) config.methods.push_back(bench_method_from_string(m));
    config.solver.mu_fixed = mu;
    config.solver.rel_obj_tol = tol;
    config.solver.max_iters = max_iters;
    const auto rows = run_bench(config);
    json cfg = {{"axis", axis},         {"values", values},       {"methods", methods},
                {"N", config.N},        {"J", config.J},          {"K", config.K},
                {"rho", config.rho},    {"b", config.b},          {"lambda", config.lambda},
                {"gamma", config.gamma}, {"solver", to_json(config.solver)},
                {"subgrad_iters", config.subgradient_iters}};
    art.set_config(cfg);
    art.set_seed(config.seed);
    art.add("bench.csv", bench_to_csv(rows));
    art.commit();
    out_stream << "wrote " << rows.size() << " bench rows\n";
    return kOk;
  }
};

// --- experiment -------------------------------------------------------------

struct ExperimentCmd {
  std::string out;
  ExperimentConfig config;
  std::vector<std::string> methods{"gflasso", "lasso", "l1l2"};
  std::vector<double> lambdas;
  std::vector<double> gammas;
  bool timing = false;
  SolverFlags solver;

  void add_to(CLI::App* app) {
    app->add_option("--out", out, "Existing output directory")->required();
    app->add_option("--replicates", config.replicates, "Simulated datasets")->capture_default_str();
    app->add_option("--n", config.sim.N, "Training samples")->capture_default_str();
    app->add_option("--j", config.sim.J, "Inputs")->capture_default_str();
    app->add_option("--k", config.sim.K, "Outputs")->capture_default_str();
    app->add_option("--b", config.sim.b, "Signal value")->capture_default_str();
    app->add_option("--noise-sd", config.sim.noise_sd, "Noise sd")->capture_default_str();
    app->add_option("--seed", config.sim.seed, "Master seed")->capture_default_str();
    app->add_option("--rho", config.rho, "Correlation threshold (strict)")->capture_default_str();
    app->add_option("--n-test", config.n_test, "Test samples per replicate")->capture_default_str();
    app->add_option("--holdout", config.holdout, "Validation rows")->capture_default_str();
    app->add_option("--methods", methods, "gflasso,lasso,l1l2")->delimiter(',');
    app->add_option("--lambdas", lambdas, "lambda grid")->delimiter(',');
    app->add_option("--gammas", gammas, "gamma grid")->delimiter(',');
    app->add_option("--threads", config.threads, "Worker cap (default: GFLASSO_THREADS or all cores)");
    app->add_flag("--timing", timing, "Include wall-clock timings in report.json");
    solver.add_to(app);
  }

  int run(const std::vector<std::string>& argv, std::ostream& out_stream) {
    require_output_dir(out);
    Artifacts art("experiment", argv, out);
    config.sim.group_sizes = default_group_sizes(config.sim.K);
    config.methods.clear();
    for (const auto& m : methods) config.methods.push_back(model_kind_from_string(m));
    if (!lambdas.empty()) config.lambda_grid = lambdas;
    if (!gammas.empty()) config.gamma_grid = gammas;
    config.solver = solver.config();
    config.include_timing = timing;
    const ExperimentReport report = run_replicates(config);
    const json j = report_to_json(report);
    art.set_config(j.at("config"));
    art.set_seed(config.sim.seed);
    std::vector<std::pair<std::string, RocCurve>> series;
    for (const auto& rep : report.replicates) {
      for (const auto& o : rep.outcomes) {
        if (o.ok) series.emplace_back(to_string(o.method) + "/" + std::to_string(rep.index), o.roc);
      }
    }
    art.add("report.json", j.dump(2) + "\n");
    art.add("roc.csv", roc_to_csv(series));
    art.commit();
    for (const auto& s : report.summaries) {
      out_stream << to_string(s.method) << ": AUC " << s.auc_mean << " (sd " << s.auc_sd << "), test MSE "
                 << s.mse_mean << "\n";
    }
    return kOk;
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph-guided fused lasso for multi-task regression"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  SimulateCmd simulate_cmd;
  FitCmd fit_cmd;
  CvCmd cv_cmd;
  BenchCmd bench_cmd;
  ExperimentCmd experiment_cmd;
  auto* sim = app.add_subcommand("simulate", "Generate a synthetic block-structured dataset");
  simulate_cmd.add_to(sim);
  auto* fit = app.add_subcommand("fit", "Fit one model at fixed regularization");
  fit_cmd.add_to(fit);
  auto* cv = app.add_subcommand("cv", "Select (lambda, gamma) on a holdout set, then refit");
  cv_cmd.add_to(cv);
  auto* bench = app.add_subcommand("bench", "Time solvers while sweeping J, N, K or rho");
  bench_cmd.add_to(bench);
  auto* experiment = app.add_subcommand("experiment", "Replicated simulation study with ROC/AUC");
  experiment_cmd.add_to(experiment);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (*sim) return simulate_cmd.run(args, out);
    if (*fit) return fit_cmd.run(args, out);
    if (*cv) return cv_cmd.run(args, out);
    if (*bench) return bench_cmd.run(args, out);
    if (*experiment) return experiment_cmd.run(args, out);
  } catch (const NumericError& e) {
    err << "numeric error: " << e.what() << "\n";
    return kNumericError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kNumericError;
  }
  return kUsageError;
}

}  // namespace gflasso::cli
