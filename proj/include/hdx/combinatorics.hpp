#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace hdx {

inline double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  if (k > n - k) k = n - k;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline std::uint64_t binomial_u64(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

/// Calls fn(c) for every m-subset c of {0..n-1}, in lexicographic order.
template <class Fn>
void for_each_combination(int n, int m, Fn&& fn) {
  if (m < 0 || m > n) return;
  std::vector<int> c(m);
  for (int i = 0; i < m; ++i) c[i] = i;
  while (true) {
    fn(static_cast<const std::vector<int>&>(c));
    int i = m - 1;
    while (i >= 0 && c[i] == n - m + i) --i;
    if (i < 0) return;
    ++c[i];
    for (int j = i + 1; j < m; ++j) c[j] = c[j - 1] + 1;
  }
}

/// Bitmasks of all m-subsets of an n-set (n <= 63), lexicographic by position list.
inline std::vector<std::uint64_t> combination_masks(int n, int m) {
  std::vector<std::uint64_t> out;
  for_each_combination(n, m, [&](const std::vector<int>& c) {
    std::uint64_t mask = 0;
    for (int x : c) mask |= std::uint64_t{1} << x;
    out.push_back(mask);
  });
  return out;
}

/// Unordered partitions of the set bits of `mask` into blocks of size b.
/// Each partition is reported once, blocks listed by their lowest element.
inline void for_each_block_partition(std::uint64_t mask, int b, const std::function<void(const std::vector<std::uint64_t>&)>& fn) {
  std::vector<std::uint64_t> blocks;
  std::function<void(std::uint64_t)> rec = [&](std::uint64_t rest) {
    if (rest == 0) {
      fn(blocks);
      return;
    }
    std::uint64_t low = rest & (~rest + 1);
    std::uint64_t others = rest & ~low;
    std::vector<int> pos;
    for (int i = 0; i < 64; ++i)
      if (others >> i & 1) pos.push_back(i);
    for_each_combination(static_cast<int>(pos.size()), b - 1, [&](const std::vector<int>& c) {
      std::uint64_t blk = low;
      for (int x : c) blk |= std::uint64_t{1} << pos[x];
      blocks.push_back(blk);
      rec(rest & ~blk);
      blocks.pop_back();
    });
  };
  if (b <= 0 || __builtin_popcountll(mask) % b != 0) return;
  rec(mask);
}

}  // namespace hdx
