#pragma once

#include "gflasso/common.hpp"
#include "gflasso/graph.hpp"

#include <utility>

namespace gflasso {

// A linear map Gamma on coefficient matrices together with the bound on its
// operator norm. The solver only sees this interface.
class PenaltyMap {
 public:
  virtual ~PenaltyMap() = default;

  // Shape of Gamma(B) for B of shape rows x cols.
  virtual std::pair<Index, Index> range_shape(Index rows, Index cols) const = 0;
  // Throws DimensionError when B cannot be fed to apply().
  virtual void check_domain(Index rows, Index cols) const = 0;
  // out must already have range_shape(B.rows(), B.cols()).
  virtual void apply(const Eigen::Ref<const Matrix>& B, Eigen::Ref<Matrix> out) const = 0;
  // out must already have the domain shape.
  virtual void adjoint(const Eigen::Ref<const Matrix>& A, Eigen::Ref<Matrix> out) const = 0;
  // Upper bound on ||Gamma|| (Frobenius-induced).
  virtual double norm_bound() const = 0;
};

// Gamma(B) = B C with C = (lambda I, gamma H). Maps J x K to J x (K + |E|).
// Works directly on the edge list; C is only assembled by dense_matrix().
class FusionOperator final : public PenaltyMap {
 public:
  struct WeightedEdge {
    int m;
    int l;
    double weight;  // tau(r)
    double sign;    // sign(r), sign(0) = +1
  };

  FusionOperator(double lambda, double gamma, const TaskGraph& graph,
                 const EdgeWeightFn& tau = EdgeWeightFn::absolute());

  double lambda() const { return lambda_; }
  double gamma() const { return gamma_; }
  Index tasks() const { return tasks_; }
  Index num_edges() const { return static_cast<Index>(edges_.size()); }
  Index width() const { return tasks_ + num_edges(); }
  const std::vector<WeightedEdge>& edges() const { return edges_; }
  const Matrix& incidence() const { return H_; }
  const Vector& degrees() const { return degrees_; }

  // K x (K + |E|) block matrix (lambda I, gamma H).
  Matrix dense_matrix() const;

  std::pair<Index, Index> range_shape(Index rows, Index cols) const override;
  void check_domain(Index rows, Index cols) const override;
  void apply(const Eigen::Ref<const Matrix>& B, Eigen::Ref<Matrix> out) const override;
  void adjoint(const Eigen::Ref<const Matrix>& A, Eigen::Ref<Matrix> out) const override;
  double norm_bound() const override;

 private:
  double lambda_;
  double gamma_;
  Index tasks_;
  std::vector<WeightedEdge> edges_;
  Matrix H_;
  Vector degrees_;
};

// Univariate form: Gamma(beta) = C^T beta for a J-vector beta, where the graph
// lives on the J inputs. Implemented by viewing beta as a 1 x J row and
// reusing FusionOperator.
class InputFusionOperator final : public PenaltyMap {
 public:
  InputFusionOperator(double lambda, double gamma, const TaskGraph& input_graph,
                      const EdgeWeightFn& tau = EdgeWeightFn::unit());

  const FusionOperator& row_operator() const { return row_op_; }

  std::pair<Index, Index> range_shape(Index rows, Index cols) const override;
  void check_domain(Index rows, Index cols) const override;
  void apply(const Eigen::Ref<const Matrix>& B, Eigen::Ref<Matrix> out) const override;
  void adjoint(const Eigen::Ref<const Matrix>& A, Eigen::Ref<Matrix> out) const override;
  double norm_bound() const override { return row_op_.norm_bound(); }

 private:
  FusionOperator row_op_;
};

Matrix gamma_apply(const PenaltyMap& op, const Matrix& B);
Matrix gamma_adjoint(const PenaltyMap& op, const Matrix& A, Index rows, Index cols);
// Adjoint for the multi-task operator; the domain shape is inferred.
Matrix gamma_adjoint(const FusionOperator& op, const Matrix& A);

// Clamp to [-1, 1].
inline double shrink(double x) { return x >= 1.0 ? 1.0 : (x <= -1.0 ? -1.0 : x); }
Matrix shrink(const Matrix& M);

// A* = shrink(Gamma(B) / mu).
Matrix optimal_aux(const PenaltyMap& op, const Matrix& B, double mu);

// lambda ||B||_1 + gamma sum_e tau(r_e) sum_j |b_jm - sign(r_e) b_jl|, summed
// directly over the edge list.
double penalty_exact(const FusionOperator& op, const Matrix& B);

// Smoothed penalty <A*, Z> - mu/2 ||A*||_F^2 for a precomputed Z = Gamma(B).
double smoothed_value(const Matrix& gamma_B, double mu);

double f_mu(const PenaltyMap& op, const Matrix& B, double mu);

// Gamma*(A*).
Matrix penalty_gradient(const PenaltyMap& op, const Matrix& B, double mu);

// D = J (K + |E|) / 2.
double gap_constant_D(Index J, Index K, Index num_edges);

// sqrt(lambda^2 + 2 gamma^2 max_k d_k); lambda when d is empty or all zeros.
double operator_norm_bound(double lambda, double gamma, const Vector& degrees);

}  // namespace gflasso
