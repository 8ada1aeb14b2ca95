#pragma once

#include <cstdint>
#include <random>

namespace gflasso {

// Seeding rules (stable across platforms):
//   substream seed  = splitmix64(master ^ (0x9E3779B97F4A7C15 * tag))
//   replicate seed  = splitmix64(master + replicate_index)
// Engines are std::mt19937_64; the distributions below are implemented here
// because the standard library ones are implementation-defined.
std::uint64_t splitmix64(std::uint64_t x);

enum class Stream : std::uint64_t { genotypes = 1, coefficients = 2, noise = 3, test_split = 4, misc = 5 };

std::uint64_t substream_seed(std::uint64_t master, Stream stream);
std::uint64_t replicate_seed(std::uint64_t master, std::uint64_t replicate);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  // Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n);
  // Standard normal, Marsaglia polar method.
  double normal();
  bool bernoulli(double p) { return uniform() < p; }

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace gflasso
