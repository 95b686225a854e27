#pragma once

// Scalars: exact rationals (GMP) and elements of a prime field F_p, p < 2^62.
//
// The two fields are distinct C++ types, so Q and F_p can never be mixed by
// accident.  Two F_p elements with different moduli throw FieldMismatch.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "monadforge/errors.hpp"

namespace monadforge {

using Integer = mpz_class;
using Rational = mpq_class;

/// Largest prime below 2^62.
inline constexpr std::uint64_t kDefaultPrime = 4611686018427387847ULL;

class Fp {
 public:
  Fp() = default;
  Fp(std::int64_t v, std::uint64_t p);
  static Fp from_raw(std::uint64_t v, std::uint64_t p) {
    Fp r;
    r.v_ = v;
    r.p_ = p;
    return r;
  }

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  Fp& operator+=(const Fp& o);
  Fp& operator-=(const Fp& o);
  Fp& operator*=(const Fp& o);
  Fp& operator/=(const Fp& o);
  Fp operator-() const { return from_raw(v_ == 0 ? 0 : p_ - v_, p_); }
  Fp inverse() const;

  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  friend bool operator==(const Fp& a, const Fp& b) {
    return a.v_ == b.v_ && a.p_ == b.p_;
  }

 private:
  void check(const Fp& o) const;
  std::uint64_t v_ = 0;
  std::uint64_t p_ = 0;
};

/// Field descriptor for Q.  Stateless.
struct RationalField {
  using element_type = Rational;
  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }
  Rational from_int(long v) const { return Rational(v); }
  Rational from_rational(const Rational& r) const { return r; }
  std::string name() const { return "Q"; }
  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

/// Field descriptor for F_p.
struct PrimeField {
  using element_type = Fp;
  std::uint64_t p = kDefaultPrime;

  Fp zero() const { return Fp::from_raw(0, p); }
  Fp one() const { return Fp::from_raw(1 % p, p); }
  Fp from_int(long v) const { return Fp(v, p); }
  /// Throws BadReduction when p divides the denominator.
  Fp from_rational(const Rational& r) const;
  Fp from_integer(const Integer& z) const;
  std::string name() const { return "F_" + std::to_string(p); }
  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p == b.p; }
};

template <class F>
struct field_of;
template <>
struct field_of<Rational> {
  using type = RationalField;
};
template <>
struct field_of<Fp> {
  using type = PrimeField;
};
template <class F>
using field_of_t = typename field_of<F>::type;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const Fp& x) { return x.is_zero(); }

inline Rational inverse(const Rational& x) {
  if (is_zero(x)) throw InvalidArgument("inverse of zero");
  return Rational(1) / x;
}
inline Fp inverse(const Fp& x) { return x.inverse(); }

/// Decimal "p/q" with q omitted when 1 and the sign on the numerator.
std::string to_string(const Rational& x);
std::string to_string(const Fp& x);

/// Accepts "p", "p/q", "-p/q" (surrounding whitespace allowed).  Throws ParseError.
Rational parse_rational(std::string_view s);

bool is_prime(std::uint64_t n);
/// Smallest prime >= n (n < 2^62).
std::uint64_t next_prime(std::uint64_t n);

}  // namespace monadforge
