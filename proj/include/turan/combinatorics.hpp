#pragma once

#include <span>
#include <vector>

namespace turan {

/// Calls fn(subset) for every k-subset of {0..n-1} in lexicographic order,
/// subset given as a sorted span. Stops early when fn returns false; the
/// return value reports whether the walk ran to completion.
template <typename Fn>
bool for_each_subset(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return true;
  std::vector<int> subset(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) subset[static_cast<std::size_t>(i)] = i;
  while (true) {
    if (!fn(std::span<const int>(subset))) return false;
    int i = k - 1;
    while (i >= 0 && subset[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return true;
    ++subset[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace turan
