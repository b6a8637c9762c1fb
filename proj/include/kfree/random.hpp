#pragma once

#include <cmath>
#include <cstdint>
#include <span>

namespace kfree {

/// Counter-based generator: value i of stream `seed` is a pure function of
/// (seed, i), so any sub-range of draws can be reproduced independently.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : key_(mix(seed ^ mix(stream + 0x632be59bd9b4e019ULL))) {}

  /// splitmix64 finaliser.
  static constexpr std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t at(std::uint64_t counter) const { return mix(key_ ^ mix(counter)); }
  std::uint64_t next() { return at(counter_++); }

  /// Uniform in [0, bound); bound > 0. Rejection keeps it unbiased.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do x = next(); while (x >= limit);
    return x % bound;
  }

  /// True with probability p (exact at p = 0 and p = 1).
  bool bernoulli(double p) { return draw_below(next(), p); }
  bool bernoulli_at(std::uint64_t counter, double p) const { return draw_below(at(counter), p); }

  template <class T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const std::size_t j = below(i);
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  static bool draw_below(std::uint64_t x, double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    // 53 high bits as a double in [0, 1).
    return std::ldexp(static_cast<double>(x >> 11), -53) < p;
  }

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace kfree
