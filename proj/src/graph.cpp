#include "gflasso/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace gflasso {

EdgeWeightFn EdgeWeightFn::absolute() {
  return {[](double r) { return std::abs(r); }};
}

EdgeWeightFn EdgeWeightFn::unit() {
  return {[](double) { return 1.0; }};
}

TaskGraph::TaskGraph(int node_count, std::vector<Edge> edges, std::optional<double> threshold)
    : node_count_(node_count), edges_(std::move(edges)), threshold_(threshold) {
  if (node_count_ < 0) throw ParameterError("graph: negative node count");
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return a.m != b.m ? a.m < b.m : a.l < b.l;
  });
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const Edge& edge = edges_[e];
    if (edge.m < 0 || edge.l < 0 || edge.m >= node_count_ || edge.l >= node_count_) {
      throw ParameterError("graph: edge node index out of range");
    }
    if (edge.m >= edge.l) throw ParameterError("graph: edges must satisfy m < l (no self-loops)");
    if (!std::isfinite(edge.r) || std::abs(edge.r) > 1.0) {
      throw ParameterError("graph: edge correlation must lie in [-1, 1]");
    }
    if (threshold_ && !(std::abs(edge.r) > *threshold_)) {
      throw ParameterError("graph: edge weight does not exceed the threshold");
    }
    if (e > 0 && edges_[e - 1].m == edge.m && edges_[e - 1].l == edge.l) {
      throw ParameterError("graph: duplicate edge");
    }
  }
}

double pearson(const Eigen::Ref<const Vector>& x, const Eigen::Ref<const Vector>& y) {
  require_dims(x.size() == y.size(), "pearson: vectors of different length");
  const Index n = x.size();
  if (n < 2) throw DegenerateInputError("pearson: need at least two samples");
  // Single-pass co-moment update.
  double mx = 0.0, my = 0.0, sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (Index i = 0; i < n; ++i) {
    const double k = static_cast<double>(i + 1);
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    mx += dx / k;
    my += dy / k;
    sxx += dx * (x[i] - mx);
    syy += dy * (y[i] - my);
    sxy += dx * (y[i] - my);
  }
  if (!(sxx > 0.0) || !(syy > 0.0)) throw DegenerateInputError("pearson: constant vector");
  const double r = sxy / std::sqrt(sxx * syy);
  return std::clamp(r, -1.0, 1.0);
}

TaskGraph build_correlation_graph(const Matrix& Y, double rho) {
  if (!(rho >= 0.0 && rho < 1.0)) throw ParameterError("correlation graph: rho must be in [0, 1)");
  const int K = static_cast<int>(Y.cols());
  if (K < 1) throw DegenerateInputError("correlation graph: Y has no columns");
  if (Y.rows() < 2) throw DegenerateInputError("correlation graph: need at least two samples");
  for (int k = 0; k < K; ++k) {
    if ((Y.col(k).array() == Y(0, k)).all()) {
      throw DegenerateInputError("correlation graph: column " + std::to_string(k + 1) +
                                 " of Y is constant");
    }
  }
  std::vector<Edge> edges;
  for (int m = 0; m < K; ++m) {
    for (int l = m + 1; l < K; ++l) {
      const double r = pearson(Y.col(m), Y.col(l));
      if (std::abs(r) > rho) edges.push_back({m, l, r});
    }
  }
  return TaskGraph(K, std::move(edges), rho);
}

TaskGraph chain_graph(int n) {
  std::vector<Edge> edges;
  for (int j = 0; j + 1 < n; ++j) edges.push_back({j, j + 1, 1.0});
  return TaskGraph(n, std::move(edges));
}

Matrix incidence_matrix(const TaskGraph& graph, const EdgeWeightFn& tau) {
  Matrix H = Matrix::Zero(graph.node_count(), graph.num_edges());
  for (int e = 0; e < graph.num_edges(); ++e) {
    const Edge& edge = graph.edges()[e];
    const double w = tau(edge.r);
    H(edge.m, e) = w;
    H(edge.l, e) = -edge_sign(edge.r) * w;
  }
  return H;
}

Vector weighted_degrees(const TaskGraph& graph, const EdgeWeightFn& tau) {
  Vector d = Vector::Zero(graph.node_count());
  for (const Edge& edge : graph.edges()) {
    const double w = tau(edge.r);
    d[edge.m] += w * w;
    d[edge.l] += w * w;
  }
  return d;
}

}  // namespace gflasso
