#pragma once

#include <cstddef>

namespace gflasso {

// Pairwise (cascade) summation of fn(0..n-1). Fixed reduction tree, so the
// result depends only on the inputs.
template <class Fn>
double pairwise_sum(std::size_t begin, std::size_t end, const Fn& fn) {
  constexpr std::size_t kLeaf = 32;
  if (end - begin <= kLeaf) {
    double s = 0.0;
    for (std::size_t i = begin; i < end; ++i) s += fn(i);
    return s;
  }
  const std::size_t mid = begin + (end - begin) / 2;
  return pairwise_sum(begin, mid, fn) + pairwise_sum(mid, end, fn);
}

template <class Fn>
double pairwise_sum(std::size_t n, const Fn& fn) {
  return pairwise_sum(std::size_t{0}, n, fn);
}

}  // namespace gflasso
