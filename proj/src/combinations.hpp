#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "preclusion/graph.hpp"

namespace preclusion::detail {

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t out = 1;
  for (std::uint64_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

// Calls fn(pick) for every size-k subset of {0..m-1} whose smallest element
// is `first`, in lexicographic order. pick is sorted.
template <class Fn>
void for_each_combination_starting_at(std::size_t m, std::size_t k, std::size_t first, Fn&& fn) {
  if (k == 0 || first + k > m) return;
  std::vector<EdgeId> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = static_cast<EdgeId>(first + i);
  for (;;) {
    fn(static_cast<const std::vector<EdgeId>&>(pick));
    std::size_t i = k;
    while (i > 1 && pick[i - 1] == m - k + i - 1) --i;
    if (i <= 1) return;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace preclusion::detail
