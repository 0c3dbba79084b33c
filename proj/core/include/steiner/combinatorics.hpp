#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

namespace steiner {

/// Calls f(span of k ascending indices) for every k-subset of {0..n-1} in
/// lexicographic order. Does nothing when k > n; calls f once with an empty
/// span when k == 0.
template <class F>
void for_each_combination(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::uint32_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0u);
  while (true) {
    f(std::span<const std::uint32_t>(idx));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace steiner
