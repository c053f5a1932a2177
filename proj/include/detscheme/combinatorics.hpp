#pragma once

#include <span>
#include <vector>

namespace detscheme {

// Calls fn(span of r strictly increasing indices in [0, n)) for every subset.
template <class Fn>
void for_each_combination(int n, int r, Fn&& fn) {
  if (r < 0 || r > n) return;
  std::vector<int> idx(r);
  for (int i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    fn(std::span<const int>(idx));
    int k = r - 1;
    while (k >= 0 && idx[k] == n - r + k) --k;
    if (k < 0) return;
    ++idx[k];
    for (int i = k + 1; i < r; ++i) idx[i] = idx[i - 1] + 1;
  }
}

// Calls fn(span of r weakly increasing indices in [0, n)) for every multiset.
template <class Fn>
void for_each_multiset(int n, int r, Fn&& fn) {
  if (r < 0 || (n <= 0 && r > 0)) return;
  std::vector<int> idx(r, 0);
  while (true) {
    fn(std::span<const int>(idx));
    int k = r - 1;
    while (k >= 0 && idx[k] == n - 1) --k;
    if (k < 0) return;
    ++idx[k];
    for (int i = k + 1; i < r; ++i) idx[i] = idx[k];
  }
}

}  // namespace detscheme
