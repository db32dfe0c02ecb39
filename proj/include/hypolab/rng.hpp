#pragma once

// Counter-based deterministic random source (splitmix64). Every draw is a
// pure function of (seed, counter), so reports are byte-stable across
// platforms and schedulers.

#include <cstdint>

#include "hypolab/rational.hpp"

namespace hypolab {

class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed = 0) : seed_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = seed_ + 0x9e3779b97f4a7c15ull * (++counter_);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform in [-1, 1).
  double next_sym() { return 2.0 * next_unit() - 1.0; }

  /// Uniform integer in [lo, hi] inclusive.
  long long next_int(long long lo, long long hi) {
    return lo + static_cast<long long>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  /// Random rational with numerator in [-max_num, max_num], denominator in [1, max_den].
  Rational next_rational(int max_num = 9, int max_den = 9) {
    return Rational(BigInt(next_int(-max_num, max_num)), BigInt(next_int(1, max_den)));
  }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

}  // namespace hypolab
