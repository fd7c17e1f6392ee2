#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace hdx {

/// splitmix64 finalizer, used to derive independent stream seeds.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seeded generator with platform-independent derived distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : engine_(mix64(seed)), seed_(seed) {}

  /// A generator for sub-stream `index`, independent of how many draws this one made.
  Rng stream(std::uint64_t index) const { return Rng(mix64(seed_ ^ mix64(index + 0x632be59bd9b4e019ULL))); }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, n), n > 0.
  std::uint64_t below(std::uint64_t n) {
    // Lemire's multiply-and-reject.
    std::uint64_t x = next();
    __uint128_t m = static_cast<__uint128_t>(x) * n;
    auto lo = static_cast<std::uint64_t>(m);
    if (lo < n) {
      std::uint64_t t = (0 - n) % n;
      while (lo < t) {
        x = next();
        m = static_cast<__uint128_t>(x) * n;
        lo = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  int index(std::size_t n) { return static_cast<int>(below(n)); }

  /// Uniform double in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform() < p; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

  /// Index drawn from a discrete distribution given by its cumulative sums.
  std::size_t from_cumulative(const std::vector<double>& cum) {
    double u = uniform() * cum.back();
    std::size_t lo = 0, hi = cum.size() - 1;
    while (lo < hi) {
      std::size_t mid = (lo + hi) / 2;
      if (cum[mid] > u) hi = mid; else lo = mid + 1;
    }
    return lo;
  }

  /// Uniform m-subset of {0, ..., n-1}, sorted.
  std::vector<int> subset(int n, int m) {
    std::vector<int> out;
    out.reserve(m);
    // Floyd's algorithm.
    std::vector<char> taken(n, 0);
    for (int j = n - m; j < n; ++j) {
      int t = static_cast<int>(below(static_cast<std::uint64_t>(j) + 1));
      if (taken[t]) t = j;
      taken[t] = 1;
    }
    for (int i = 0; i < n; ++i)
      if (taken[i]) out.push_back(i);
    return out;
  }

 private:
  std::mt19937_64 engine_;
  std::uint64_t seed_;
};

struct Interval {
  double low = 0;
  double high = 1;
};

/// Wilson score interval for `successes` out of `trials` at normal quantile z.
inline Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z = 1.959963984540054) {
  if (trials == 0) return {0.0, 1.0};
  double n = static_cast<double>(trials);
  double p = static_cast<double>(successes) / n;
  double z2 = z * z;
  double denom = 1 + z2 / n;
  double center = (p + z2 / (2 * n)) / denom;
  double half = z * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n)) / denom;
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

}  // namespace hdx
