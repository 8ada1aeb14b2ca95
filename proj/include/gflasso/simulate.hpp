#pragma once

#include "gflasso/common.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace gflasso {

struct SimulationSpec {
  int N = 100;
  int J = 30;
  int K = 10;
  double b = 0.8;
  double noise_sd = 1.0;
  std::uint64_t seed = 0;
  std::vector<int> group_sizes{3, 3, 4};

  void validate() const;
};

// Three groups summing to K (K/3, K/3, remainder); fewer groups for K < 3.
std::vector<int> default_group_sizes(int K);

struct GroundTruth {
  Matrix B_true;                             // J x K
  std::vector<std::pair<int, int>> support;  // (j, k), sorted
};

// Minor-allele counts in {0, 1, 2}; each column has its own MAF ~ U[0.05, 0.5].
// Column-major draw order: MAF of column j, then rows 0..N-1.
Matrix gen_genotypes(int N, int J, std::uint64_t seed);

// Block pattern: 3 inputs for the first output group, 4 for each later group
// (all drawn without replacement), one input shared by groups 1 and 2, one
// input shared by all outputs. Non-zeros equal b.
GroundTruth gen_coefficients(const SimulationSpec& spec);

// Y = X B_true + E with E_ik ~ N(0, noise_sd^2), drawn row-major.
Matrix gen_outputs(const Matrix& X, const Matrix& B_true, double noise_sd, std::uint64_t seed);

struct SimulatedData {
  Matrix X;
  Matrix Y;
  Matrix X_test;
  Matrix Y_test;
  GroundTruth truth;
};

// Draws N + n_test samples in one pass and splits off the last n_test.
SimulatedData simulate(const SimulationSpec& spec, int n_test = 0);

}  // namespace gflasso
