#include "gflasso/io.hpp"

#include <openssl/evp.h>

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>
#include <unistd.h>

namespace gflasso {

namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(',', start);
    if (pos == std::string_view::npos) {
      cells.push_back(trim(line.substr(start)));
      return cells;
    }
    cells.push_back(trim(line.substr(start, pos - start)));
    start = pos + 1;
  }
}

std::vector<std::string_view> lines_of(const std::string& text) {
  std::vector<std::string_view> lines;
  std::string_view all(text);
  std::size_t start = 0;
  while (start <= all.size()) {
    const std::size_t pos = all.find('\n', start);
    const std::size_t end = pos == std::string_view::npos ? all.size() : pos;
    lines.push_back(all.substr(start, end - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return lines;
}

double parse_cell(std::string_view cell, int line, int column) {
  double v = 0.0;
  const char* first = cell.data();
  const char* last = cell.data() + cell.size();
  if (!cell.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (cell.empty() || ec != std::errc() || ptr != last || !std::isfinite(v)) {
    std::ostringstream msg;
    msg << "malformed CSV: non-numeric value '" << cell << "' at row " << line << ", column "
        << column;
    throw ParseError(msg.str(), line, column);
  }
  return v;
}

json optional_number(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

json row_to_json(const RowVector& v) {
  json a = json::array();
  for (Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) throw Error("format_double: conversion failed");
  return std::string(buf, ptr);
}

std::string matrix_to_csv(const Matrix& M, const std::vector<std::string>& header) {
  require_dims(static_cast<Index>(header.size()) == M.cols(), "CSV header width");
  std::string out;
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (c) out += ',';
    out += header[c];
  }
  out += '\n';
  for (Index i = 0; i < M.rows(); ++i) {
    for (Index j = 0; j < M.cols(); ++j) {
      if (j) out += ',';
      out += format_double(M(i, j));
    }
    out += '\n';
  }
  return out;
}

std::string matrix_to_csv(const Matrix& M, const std::string& prefix) {
  std::vector<std::string> header;
  for (Index j = 0; j < M.cols(); ++j) header.push_back(prefix + std::to_string(j + 1));
  return matrix_to_csv(M, header);
}

Matrix matrix_from_csv(const std::string& text) {
  const auto lines = lines_of(text);
  if (lines.empty() || trim(lines[0]).empty()) throw ParseError("malformed CSV: missing header row", 1, 1);
  const std::size_t width = split_commas(lines[0]).size();
  std::vector<std::vector<double>> rows;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    if (trim(lines[li]).empty()) continue;
    const int line_no = static_cast<int>(li + 1);
    const auto cells = split_commas(lines[li]);
    if (cells.size() != width) {
      std::ostringstream msg;
      msg << "malformed CSV: row " << line_no << " has " << cells.size() << " columns, expected "
          << width;
      throw ParseError(msg.str(), line_no, static_cast<int>(std::min(cells.size(), width) + 1));
    }
    std::vector<double> row;
    row.reserve(width);
    for (std::size_t c = 0; c < width; ++c) {
      row.push_back(parse_cell(cells[c], line_no, static_cast<int>(c + 1)));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("malformed CSV: no data rows", 2, 1);
  Matrix M(static_cast<Index>(rows.size()), static_cast<Index>(width));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < width; ++j) M(static_cast<Index>(i), static_cast<Index>(j)) = rows[i][j];
  }
  return M;
}

Matrix read_matrix_csv(const std::filesystem::path& path) {
  return matrix_from_csv(read_file(path));
}

std::string graph_to_csv(const TaskGraph& graph) {
  std::string out = "m,l,r\n";
  for (const Edge& e : graph.edges()) {
    out += std::to_string(e.m + 1) + ',' + std::to_string(e.l + 1) + ',' + format_double(e.r) + '\n';
  }
  return out;
}

TaskGraph graph_from_csv(const std::string& text, int node_count) {
  const Matrix M = matrix_from_csv(text);
  if (M.cols() != 3) throw ParseError("malformed edge list: expected columns m,l,r", 1, 1);
  std::vector<Edge> edges;
  for (Index i = 0; i < M.rows(); ++i) {
    const double m = M(i, 0), l = M(i, 1);
    if (m != std::floor(m) || l != std::floor(l)) {
      throw ParseError("malformed edge list: node ids must be integers", static_cast<int>(i + 2), 1);
    }
    edges.push_back({static_cast<int>(m) - 1, static_cast<int>(l) - 1, M(i, 2)});
  }
  return TaskGraph(node_count, std::move(edges));
}

std::string trace_to_csv(const std::vector<TraceEntry>& trace) {
  std::string out = "iter,f_exact,f_smooth,grad_norm\n";
  for (const auto& t : trace) {
    out += std::to_string(t.iter) + ',' + format_double(t.f_exact) + ',' + format_double(t.f_smooth) +
           ',' + format_double(t.grad_norm) + '\n';
  }
  return out;
}

std::string roc_to_csv(const std::vector<std::pair<std::string, RocCurve>>& series) {
  std::string out = "x,y,series\n";
  for (const auto& [name, roc] : series) {
    for (const auto& p : roc.points) out += format_double(p.fpr) + ',' + format_double(p.tpr) + ',' + name + '\n';
  }
  return out;
}

std::string bench_to_csv(const std::vector<BenchRow>& rows) {
  std::string out = std::string(kBenchCsvHeader) + '\n';
  for (const auto& r : rows) {
    out += to_string(r.axis) + ',' + format_double(r.value) + ',' + to_string(r.method) + ',' +
           std::to_string(r.N) + ',' + std::to_string(r.J) + ',' + std::to_string(r.K) + ',' +
           format_double(r.rho) + ',' + std::to_string(r.num_edges) + ',' +
           std::to_string(r.iterations) + ',' + format_double(r.objective) + ',' +
           format_double(r.precompute_seconds) + ',' + format_double(r.total_seconds) + ',' +
           format_double(r.per_iteration_seconds) + ',' + (r.converged ? "1" : "0") + '\n';
  }
  return out;
}

json to_json(const SimulationSpec& spec) {
  return {{"N", spec.N},         {"J", spec.J},
          {"K", spec.K},         {"b", spec.b},
          {"noise_sd", spec.noise_sd}, {"seed", spec.seed},
          {"group_sizes", spec.group_sizes}};
}

SimulationSpec simulation_spec_from_json(const json& j) {
  SimulationSpec spec;
  try {
    spec.N = j.value("N", spec.N);
    spec.J = j.value("J", spec.J);
    spec.K = j.value("K", spec.K);
    spec.b = j.value("b", spec.b);
    spec.noise_sd = j.value("noise_sd", spec.noise_sd);
    spec.seed = j.value("seed", spec.seed);
    if (j.contains("group_sizes")) {
      spec.group_sizes = j.at("group_sizes").get<std::vector<int>>();
    } else {
      spec.group_sizes = default_group_sizes(spec.K);
    }
  } catch (const json::exception& e) {
    throw ParameterError(std::string("simulation spec: ") + e.what());
  }
  spec.validate();
  return spec;
}

json to_json(const SolverConfig& c) {
  return {{"mu_mode", c.mu_mode == MuMode::fixed ? "fixed" : "accuracy"},
          {"mu", c.mu_fixed},
          {"epsilon", c.epsilon},
          {"rel_obj_tol", c.rel_obj_tol},
          {"max_iters", c.max_iters}};
}

json fit_to_json(const FitResult& fit, bool include_timing) {
  const Solution& s = fit.solution;
  json j = {{"method", to_string(fit.kind)},
            {"lambda", fit.penalty.lambda},
            {"gamma", fit.penalty.gamma},
            {"rho", optional_number(fit.graph.rho)},
            {"num_edges", fit.graph.num_edges},
            {"inputs", s.B_hat.rows()},
            {"tasks", s.B_hat.cols()},
            {"iterations", s.iterations},
            {"converged", s.converged},
            {"objective", fit.objective},
            {"objective_smooth", s.objective_smooth},
            {"mu", s.mu_used},
            {"lipschitz", s.lipschitz_used},
            {"gap_D", s.gap_D},
            {"x_mean", row_to_json(fit.x_mean)},
            {"y_mean", row_to_json(fit.y_mean)}};
  if (include_timing) {
    j["runtime_seconds"] = fit.runtime_seconds;
    j["per_iteration_seconds"] = s.timing.per_iteration_seconds;
  }
  return j;
}

json selection_to_json(const Selection& sel, ModelKind method, int holdout) {
  json grid = json::array();
  for (const auto& row : sel.table) {
    json r = {{"lambda", row.point.lambda},
              {"gamma", row.point.gamma},
              {"ok", row.ok},
              {"iterations", row.iterations},
              {"converged", row.converged}};
    r["validation_mse"] = row.ok ? json(row.validation_mse) : json(nullptr);
    if (!row.ok) r["error"] = row.error;
    grid.push_back(std::move(r));
  }
  return {{"method", to_string(method)},
          {"holdout", holdout},
          {"selected", {{"lambda", sel.best.lambda}, {"gamma", sel.best.gamma}}},
          {"grid", std::move(grid)},
          {"final", fit_to_json(sel.final_fit, false)}};
}

json report_to_json(const ExperimentReport& report) {
  const ExperimentConfig& c = report.config;
  json methods = json::array();
  for (ModelKind m : c.methods) methods.push_back(to_string(m));
  json config = {{"simulation", to_json(c.sim)},
                 {"n_test", c.n_test},
                 {"rho", c.rho},
                 {"replicates", c.replicates},
                 {"holdout", c.holdout},
                 {"lambda_grid", c.lambda_grid},
                 {"gamma_grid", c.gamma_grid},
                 {"methods", methods},
                 {"solver", to_json(c.solver)}};
  json reps = json::array();
  for (const auto& rep : report.replicates) {
    json outcomes = json::array();
    for (const auto& o : rep.outcomes) {
      json jo = {{"method", to_string(o.method)}, {"ok", o.ok}};
      if (o.ok) {
        jo["auc"] = o.auc;
        jo["test_mse"] = o.test_mse;
        jo["lambda"] = o.selected.lambda;
        jo["gamma"] = o.selected.gamma;
        jo["iterations"] = o.iterations;
        jo["converged"] = o.converged;
        if (c.include_timing) jo["fit_seconds"] = o.fit_seconds;
      } else {
        jo["error"] = o.error;
      }
      outcomes.push_back(std::move(jo));
    }
    reps.push_back({{"index", rep.index},
                    {"seed", rep.seed},
                    {"num_edges", rep.num_edges},
                    {"outcomes", std::move(outcomes)}});
  }
  json summaries = json::array();
  for (const auto& s : report.summaries) {
    json js = {{"method", to_string(s.method)},
               {"succeeded", s.succeeded},
               {"auc_mean", s.auc_mean},
               {"auc_sd", s.auc_sd},
               {"test_mse_mean", s.mse_mean},
               {"test_mse_sd", s.mse_sd},
               {"iterations_mean", s.iterations_mean}};
    if (c.include_timing) js["fit_seconds_mean"] = s.seconds_mean;
    summaries.push_back(std::move(js));
  }
  json wins = json::object();
  for (const auto& [name, count] : report.gflasso_wins) wins[name] = count;
  return {{"config", std::move(config)},
          {"replicates", std::move(reps)},
          {"summaries", std::move(summaries)},
          {"gflasso_auc_wins", std::move(wins)},
          {"failed_replicates", report.failures}};
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  const auto parent = path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");
  if (!std::filesystem::is_directory(parent)) {
    throw Error("output directory '" + parent.string() + "' does not exist");
  }
  auto tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write '" + tmp.string() + "'");
    out << content;
    out.flush();
    if (!out) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw Error("failed writing '" + tmp.string() + "'");
    }
  }
  std::filesystem::rename(tmp, path);
}

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("sha256 failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 0xF];
  }
  return out;
}

}  // namespace gflasso
