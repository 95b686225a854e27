#pragma once

// Shared helpers for the unit and acceptance tests.

#include <cstdint>
#include <vector>

#include "monadforge/io.hpp"

namespace mft {

using namespace monadforge;

inline Rational q(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline QVec qv(std::initializer_list<long> xs) {
  QVec v;
  for (long x : xs) v.push_back(Rational(x));
  return v;
}

/// Random integer matrix with entries in [-bound, bound].
inline QMatrix random_int_matrix(CounterRng& rng, std::size_t r, std::size_t c, std::int64_t bound) {
  QMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Rational(rng.range(-bound, bound));
  return m;
}

/// Random integer matrix of rank at most `rk` (a product of r x rk and rk x c factors).
inline QMatrix random_low_rank(CounterRng& rng, std::size_t r, std::size_t c, std::size_t rk, std::int64_t bound) {
  return random_int_matrix(rng, r, rk, bound) * random_int_matrix(rng, rk, c, bound);
}

/// Closed-condition octuple from trial `trial` of `seed`.
inline BarthOctuple octuple(std::size_t n, std::uint64_t seed, std::uint64_t trial = 0,
                            Ansatz ansatz = Ansatz::Dense) {
  GenOptions g;
  g.ansatz = ansatz;
  return gen_closed_octuple(n, seed, trial, g).octuple;
}

inline VerifyOptions exact() {
  VerifyOptions o;
  o.mode = Mode::Exact;
  return o;
}

inline VerifyOptions fast(std::uint64_t p = kDefaultPrime) {
  VerifyOptions o;
  o.mode = Mode::Fast;
  o.prime = p;
  return o;
}

/// Random prime in [2^59, 2^60).
inline std::uint64_t random_prime_60(CounterRng& rng) {
  return next_prime((std::uint64_t(1) << 59) + rng.below(std::uint64_t(1) << 59));
}

}  // namespace mft
