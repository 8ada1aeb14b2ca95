#pragma once

#include "gflasso/common.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace gflasso {

// Edge between nodes m < l (0-based) with signed correlation weight r.
struct Edge {
  int m = 0;
  int l = 0;
  double r = 0.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Maps an edge correlation r to a non-negative fusion weight tau(r).
// Must be non-negative and non-decreasing in |r|.
struct EdgeWeightFn {
  std::function<double(double)> tau;

  double operator()(double r) const { return tau(r); }

  // tau(r) = |r|
  static EdgeWeightFn absolute();
  // tau(r) = 1, used for the unweighted univariate fused penalty.
  static EdgeWeightFn unit();
};

// sign with sign(0) = +1.
inline double edge_sign(double r) { return r < 0.0 ? -1.0 : 1.0; }

// Output-variable graph. Edges are kept sorted lexicographically by (m, l).
class TaskGraph {
 public:
  TaskGraph() = default;
  // Validates: indices in range, m < l, no duplicates, |r| > threshold when a
  // threshold is given. Edges are sorted on construction.
  TaskGraph(int node_count, std::vector<Edge> edges,
            std::optional<double> threshold = std::nullopt);

  int node_count() const { return node_count_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  std::optional<double> threshold() const { return threshold_; }

 private:
  int node_count_ = 0;
  std::vector<Edge> edges_;
  std::optional<double> threshold_;
};

// Sample Pearson correlation. Throws DegenerateInputError for N < 2 or a
// constant vector.
double pearson(const Eigen::Ref<const Vector>& x, const Eigen::Ref<const Vector>& y);

// Edge (m,l) iff |pearson(y_m, y_l)| > rho (strict).
TaskGraph build_correlation_graph(const Matrix& Y, double rho);

// Chain 0-1-2-...-(n-1) with r = +1 on every edge.
TaskGraph chain_graph(int n);

// K x |E| signed incidence: H(m,e) = tau(r), H(l,e) = -sign(r) tau(r).
Matrix incidence_matrix(const TaskGraph& graph, const EdgeWeightFn& tau);

// d_k = sum over edges incident on k of tau(r_e)^2.
Vector weighted_degrees(const TaskGraph& graph, const EdgeWeightFn& tau);

}  // namespace gflasso
