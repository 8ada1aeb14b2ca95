#pragma once

#include "gflasso/common.hpp"
#include "gflasso/evaluate.hpp"
#include "gflasso/graph.hpp"
#include "gflasso/models.hpp"
#include "gflasso/simulate.hpp"
#include "gflasso/solver.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace gflasso {

// Malformed CSV input; line and column are 1-based (the header is line 1).
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : Error(msg), line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Shortest decimal that round-trips to the same double.
std::string format_double(double v);

// CSV: one header row of column ids, then one row per sample.
std::string matrix_to_csv(const Matrix& M, const std::vector<std::string>& header);
std::string matrix_to_csv(const Matrix& M, const std::string& prefix);
Matrix matrix_from_csv(const std::string& text);
Matrix read_matrix_csv(const std::filesystem::path& path);

// Edge list with columns m,l,r (1-based node ids).
std::string graph_to_csv(const TaskGraph& graph);
TaskGraph graph_from_csv(const std::string& text, int node_count);

// Columns iter,f_exact,f_smooth,grad_norm.
std::string trace_to_csv(const std::vector<TraceEntry>& trace);

std::string roc_to_csv(const std::vector<std::pair<std::string, RocCurve>>& series);

inline constexpr const char* kBenchCsvHeader =
    "axis,value,method,N,J,K,rho,num_edges,iterations,objective,precompute_seconds,"
    "total_seconds,per_iteration_seconds,converged";
std::string bench_to_csv(const std::vector<BenchRow>& rows);

nlohmann::json to_json(const SimulationSpec& spec);
SimulationSpec simulation_spec_from_json(const nlohmann::json& j);
nlohmann::json to_json(const SolverConfig& config);
nlohmann::json fit_to_json(const FitResult& fit, bool include_timing);
nlohmann::json selection_to_json(const Selection& sel, ModelKind method, int holdout);
nlohmann::json report_to_json(const ExperimentReport& report);

std::string read_file(const std::filesystem::path& path);
// Writes to a sibling temp file and renames over the target.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

// Lower-case hex SHA-256.
std::string sha256_hex(const std::string& data);

}  // namespace gflasso
