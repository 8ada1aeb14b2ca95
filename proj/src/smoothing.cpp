#include "gflasso/smoothing.hpp"

#include "gflasso/numeric.hpp"

#include <cmath>

namespace gflasso {

FusionOperator::FusionOperator(double lambda, double gamma, const TaskGraph& graph,
                               const EdgeWeightFn& tau)
    : lambda_(lambda), gamma_(gamma), tasks_(graph.node_count()) {
  if (!(lambda >= 0.0) || !(gamma >= 0.0) || !std::isfinite(lambda) || !std::isfinite(gamma)) {
    throw ParameterError("fusion operator: lambda and gamma must be finite and non-negative");
  }
  edges_.reserve(graph.edges().size());
  for (const Edge& e : graph.edges()) {
    const double w = tau(e.r);
    if (!(w >= 0.0)) throw ParameterError("fusion operator: edge weight function returned a negative value");
    edges_.push_back({e.m, e.l, w, edge_sign(e.r)});
  }
  H_ = incidence_matrix(graph, tau);
  degrees_ = weighted_degrees(graph, tau);
}

Matrix FusionOperator::dense_matrix() const {
  Matrix C = Matrix::Zero(tasks_, width());
  C.leftCols(tasks_).diagonal().setConstant(lambda_);
  C.rightCols(num_edges()) = gamma_ * H_;
  return C;
}

std::pair<Index, Index> FusionOperator::range_shape(Index rows, Index) const {
  return {rows, width()};
}

void FusionOperator::check_domain(Index, Index cols) const {
  require_dims(cols == tasks_, "coefficient matrix must have one column per task");
}

void FusionOperator::apply(const Eigen::Ref<const Matrix>& B, Eigen::Ref<Matrix> out) const {
  check_domain(B.rows(), B.cols());
  require_dims(out.rows() == B.rows() && out.cols() == width(), "gamma_apply output shape");
  out.leftCols(tasks_) = lambda_ * B;
  for (Index e = 0; e < num_edges(); ++e) {
    const WeightedEdge& edge = edges_[e];
    const double w = gamma_ * edge.weight;
    out.col(tasks_ + e) = w * (B.col(edge.m) - edge.sign * B.col(edge.l));
  }
}

void FusionOperator::adjoint(const Eigen::Ref<const Matrix>& A, Eigen::Ref<Matrix> out) const {
  require_dims(A.cols() == width(), "gamma_adjoint input must have K + |E| columns");
  require_dims(out.rows() == A.rows() && out.cols() == tasks_, "gamma_adjoint output shape");
  out = lambda_ * A.leftCols(tasks_);
  for (Index e = 0; e < num_edges(); ++e) {
    const WeightedEdge& edge = edges_[e];
    const double w = gamma_ * edge.weight;
    out.col(edge.m) += w * A.col(tasks_ + e);
    out.col(edge.l) -= (w * edge.sign) * A.col(tasks_ + e);
  }
}

double FusionOperator::norm_bound() const {
  return operator_norm_bound(lambda_, gamma_, degrees_);
}

InputFusionOperator::InputFusionOperator(double lambda, double gamma,
                                         const TaskGraph& input_graph, const EdgeWeightFn& tau)
    : row_op_(lambda, gamma, input_graph, tau) {}

std::pair<Index, Index> InputFusionOperator::range_shape(Index, Index) const {
  return {row_op_.width(), 1};
}

void InputFusionOperator::check_domain(Index rows, Index cols) const {
  require_dims(cols == 1 && rows == row_op_.tasks(),
               "univariate coefficient vector must have one entry per input");
}

void InputFusionOperator::apply(const Eigen::Ref<const Matrix>& B, Eigen::Ref<Matrix> out) const {
  check_domain(B.rows(), B.cols());
  require_dims(out.rows() == row_op_.width() && out.cols() == 1, "gamma_apply output shape");
  Eigen::Map<const Matrix> row(B.data(), 1, B.rows());
  Eigen::Map<Matrix> out_row(out.data(), 1, out.rows());
  row_op_.apply(row, out_row);
}

void InputFusionOperator::adjoint(const Eigen::Ref<const Matrix>& A, Eigen::Ref<Matrix> out) const {
  require_dims(A.rows() == row_op_.width() && A.cols() == 1, "gamma_adjoint input shape");
  require_dims(out.rows() == row_op_.tasks() && out.cols() == 1, "gamma_adjoint output shape");
  Eigen::Map<const Matrix> row(A.data(), 1, A.rows());
  Eigen::Map<Matrix> out_row(out.data(), 1, out.rows());
  row_op_.adjoint(row, out_row);
}

Matrix gamma_apply(const PenaltyMap& op, const Matrix& B) {
  const auto [rows, cols] = op.range_shape(B.rows(), B.cols());
  Matrix out(rows, cols);
  op.apply(B, out);
  return out;
}

Matrix gamma_adjoint(const PenaltyMap& op, const Matrix& A, Index rows, Index cols) {
  Matrix out(rows, cols);
  op.adjoint(A, out);
  return out;
}

Matrix gamma_adjoint(const FusionOperator& op, const Matrix& A) {
  return gamma_adjoint(op, A, A.rows(), op.tasks());
}

Matrix shrink(const Matrix& M) {
  return M.unaryExpr([](double x) { return shrink(x); });
}

static void check_mu(double mu) {
  if (!(mu > 0.0) || !std::isfinite(mu)) throw ParameterError("smoothing parameter mu must be positive");
}

Matrix optimal_aux(const PenaltyMap& op, const Matrix& B, double mu) {
  check_mu(mu);
  Matrix Z = gamma_apply(op, B);
  return Z.unaryExpr([mu](double z) { return shrink(z / mu); });
}

double penalty_exact(const FusionOperator& op, const Matrix& B) {
  op.check_domain(B.rows(), B.cols());
  const std::size_t n = static_cast<std::size_t>(B.size());
  const double l1 = pairwise_sum(n, [&](std::size_t i) { return std::abs(B.data()[i]); });
  double fusion = 0.0;
  for (const auto& edge : op.edges()) {
    const double per_edge = pairwise_sum(static_cast<std::size_t>(B.rows()), [&](std::size_t j) {
      return std::abs(B(j, edge.m) - edge.sign * B(j, edge.l));
    });
    fusion += edge.weight * per_edge;
  }
  return op.lambda() * l1 + op.gamma() * fusion;
}

double smoothed_value(const Matrix& gamma_B, double mu) {
  check_mu(mu);
  const double* z = gamma_B.data();
  return pairwise_sum(static_cast<std::size_t>(gamma_B.size()), [&](std::size_t i) {
    const double a = shrink(z[i] / mu);
    return a * z[i] - 0.5 * mu * a * a;
  });
}

double f_mu(const PenaltyMap& op, const Matrix& B, double mu) {
  check_mu(mu);
  return smoothed_value(gamma_apply(op, B), mu);
}

Matrix penalty_gradient(const PenaltyMap& op, const Matrix& B, double mu) {
  return gamma_adjoint(op, optimal_aux(op, B, mu), B.rows(), B.cols());
}

double gap_constant_D(Index J, Index K, Index num_edges) {
  return 0.5 * static_cast<double>(J) * static_cast<double>(K + num_edges);
}

double operator_norm_bound(double lambda, double gamma, const Vector& degrees) {
  const double max_d = degrees.size() > 0 ? degrees.maxCoeff() : 0.0;
  return std::sqrt(lambda * lambda + 2.0 * gamma * gamma * max_d);
}

}  // namespace gflasso
