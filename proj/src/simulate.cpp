#include "gflasso/simulate.hpp"

#include "gflasso/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace gflasso {

namespace {

int required_inputs(const std::vector<int>& groups) {
  const int g = static_cast<int>(groups.size());
  return 3 + 4 * (g - 1) + (g >= 2 ? 1 : 0) + 1;
}

}  // namespace

void SimulationSpec::validate() const {
  if (N < 1 || J < 1 || K < 1) throw ParameterError("simulation: N, J, K must be at least 1");
  if (!(b > 0.0) || !std::isfinite(b)) throw ParameterError("simulation: b must be positive");
  if (!(noise_sd >= 0.0) || !std::isfinite(noise_sd)) throw ParameterError("simulation: noise_sd must be non-negative");
  if (group_sizes.empty()) throw ParameterError("simulation: need at least one output group");
  for (int s : group_sizes) {
    if (s < 1) throw ParameterError("simulation: group sizes must be positive");
  }
  if (std::accumulate(group_sizes.begin(), group_sizes.end(), 0) != K) {
    throw ParameterError("simulation: group sizes must sum to K");
  }
  if (J < required_inputs(group_sizes)) {
    throw ParameterError("simulation: J = " + std::to_string(J) + " is too small; the pattern needs " +
                         std::to_string(required_inputs(group_sizes)) + " distinct inputs");
  }
}

std::vector<int> default_group_sizes(int K) {
  if (K < 3) return std::vector<int>(static_cast<std::size_t>(std::max(K, 0)), 1);
  return {K / 3, K / 3, K - 2 * (K / 3)};
}

Matrix gen_genotypes(int N, int J, std::uint64_t seed) {
  if (N < 1 || J < 1) throw ParameterError("genotypes: N and J must be at least 1");
  Rng rng(seed);
  Matrix X(N, J);
  for (int j = 0; j < J; ++j) {
    const double maf = rng.uniform(0.05, 0.5);
    for (int i = 0; i < N; ++i) {
      X(i, j) = static_cast<double>(rng.bernoulli(maf)) + static_cast<double>(rng.bernoulli(maf));
    }
  }
  return X;
}

GroundTruth gen_coefficients(const SimulationSpec& spec) {
  spec.validate();
  Rng rng(substream_seed(spec.seed, Stream::coefficients));
  // Partial Fisher-Yates gives draws without replacement.
  std::vector<int> pool(static_cast<std::size_t>(spec.J));
  std::iota(pool.begin(), pool.end(), 0);
  std::size_t taken = 0;
  auto draw = [&]() {
    const std::size_t pick = taken + rng.below(pool.size() - taken);
    std::swap(pool[taken], pool[pick]);
    return pool[taken++];
  };

  GroundTruth truth;
  truth.B_true = Matrix::Zero(spec.J, spec.K);
  std::vector<int> group_start;
  int offset = 0;
  for (int s : spec.group_sizes) {
    group_start.push_back(offset);
    offset += s;
  }
  auto mark = [&](int input, int first_output, int count) {
    for (int k = first_output; k < first_output + count; ++k) truth.B_true(input, k) = spec.b;
  };
  for (std::size_t g = 0; g < spec.group_sizes.size(); ++g) {
    const int n_inputs = g == 0 ? 3 : 4;
    for (int i = 0; i < n_inputs; ++i) mark(draw(), group_start[g], spec.group_sizes[g]);
  }
  if (spec.group_sizes.size() >= 2) {
    mark(draw(), 0, spec.group_sizes[0] + spec.group_sizes[1]);
  }
  mark(draw(), 0, spec.K);

  for (int j = 0; j < spec.J; ++j) {
    for (int k = 0; k < spec.K; ++k) {
      if (truth.B_true(j, k) != 0.0) truth.support.emplace_back(j, k);
    }
  }
  return truth;
}

Matrix gen_outputs(const Matrix& X, const Matrix& B_true, double noise_sd, std::uint64_t seed) {
  require_dims(X.cols() == B_true.rows(), "X columns vs B_true rows");
  Matrix Y = X * B_true;
  if (noise_sd == 0.0) return Y;
  Rng rng(seed);
  for (Index i = 0; i < Y.rows(); ++i) {
    for (Index k = 0; k < Y.cols(); ++k) Y(i, k) += noise_sd * rng.normal();
  }
  return Y;
}

SimulatedData simulate(const SimulationSpec& spec, int n_test) {
  spec.validate();
  if (n_test < 0) throw ParameterError("simulation: n_test must be non-negative");
  const int total = spec.N + n_test;
  SimulatedData data;
  data.truth = gen_coefficients(spec);
  const Matrix X = gen_genotypes(total, spec.J, substream_seed(spec.seed, Stream::genotypes));
  const Matrix Y = gen_outputs(X, data.truth.B_true, spec.noise_sd,
                               substream_seed(spec.seed, Stream::noise));
  data.X = X.topRows(spec.N);
  data.Y = Y.topRows(spec.N);
  data.X_test = X.bottomRows(n_test);
  data.Y_test = Y.bottomRows(n_test);
  return data;
}

}  // namespace gflasso
