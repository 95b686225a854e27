#pragma once

// Counter-based random numbers.  Draw k of stream s under seed S is a pure
// function of (S, s, k), so trials can run in any order or in parallel and
// still reproduce the serial output.  The mixing function is the SplitMix64
// finalizer.

#include <cstdint>

#include "monadforge/errors.hpp"

namespace monadforge {

class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream = 0, std::uint64_t salt = 0)
      : key_(mix(mix(seed ^ 0x6a09e667f3bcc908ULL) + kGamma * (stream + 1) + mix(salt + 0x3c6ef372fe94f82bULL))) {}

  static std::uint64_t mix(std::uint64_t z) {
    z += kGamma;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t next() { return mix(key_ + kGamma * counter_++); }
  std::uint64_t draws() const { return counter_; }

  /// Uniform in [0, bound) by rejection, so every residue is equally likely.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw InvalidArgument("empty range");
    const std::uint64_t limit = ~std::uint64_t(0) - (~std::uint64_t(0) % bound);
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % bound;
  }

  /// Uniform integer in [lo, hi].
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    if (hi < lo) throw InvalidArgument("empty range");
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  /// Nonzero integer in [-b, b].
  std::int64_t nonzero(std::int64_t b) {
    std::int64_t v = range(-b, b - 1);
    return v >= 0 ? v + 1 : v;
  }

 private:
  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace monadforge
