#include "monadforge/scalar.hpp"

#include <cctype>

namespace monadforge {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

}  // namespace

Fp::Fp(std::int64_t v, std::uint64_t p) : p_(p) {
  if (p < 2) throw InvalidArgument("modulus must be >= 2");
  if (v >= 0) {
    v_ = static_cast<std::uint64_t>(v) % p;
  } else {
    // -(v+1) avoids overflow at INT64_MIN
    std::uint64_t m = (static_cast<std::uint64_t>(-(v + 1)) + 1) % p;
    v_ = m == 0 ? 0 : p - m;
  }
}

void Fp::check(const Fp& o) const {
  if (p_ != o.p_) {
    throw FieldMismatch("mixed moduli F_" + std::to_string(p_) + " and F_" +
                        std::to_string(o.p_));
  }
}

Fp& Fp::operator+=(const Fp& o) {
  check(o);
  std::uint64_t s = v_ + o.v_;  // p < 2^62, no overflow
  v_ = s >= p_ ? s - p_ : s;
  return *this;
}

Fp& Fp::operator-=(const Fp& o) {
  check(o);
  v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_;
  return *this;
}

Fp& Fp::operator*=(const Fp& o) {
  check(o);
  v_ = mulmod(v_, o.v_, p_);
  return *this;
}

Fp& Fp::operator/=(const Fp& o) {
  check(o);
  return *this *= o.inverse();
}

Fp Fp::inverse() const {
  if (v_ == 0) throw InvalidArgument("inverse of zero in " + std::to_string(p_));
  // extended Euclid on signed 128-bit values
  __int128 t = 0, newt = 1;
  __int128 r = p_, newr = v_;
  while (newr != 0) {
    __int128 q = r / newr;
    __int128 tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (r != 1) throw InvalidArgument("element not invertible (modulus not prime?)");
  if (t < 0) t += p_;
  return from_raw(static_cast<std::uint64_t>(t), p_);
}

Fp PrimeField::from_integer(const Integer& z) const {
  Integer m = z % Integer(static_cast<unsigned long>(p));
  if (m < 0) m += static_cast<unsigned long>(p);
  return Fp::from_raw(m.get_ui(), p);
}

Fp PrimeField::from_rational(const Rational& r) const {
  Fp den = from_integer(r.get_den());
  if (den.is_zero()) {
    throw BadReduction("denominator of " + to_string(r) + " divisible by " + std::to_string(p));
  }
  return from_integer(r.get_num()) / den;
}

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string to_string(const Fp& x) { return std::to_string(x.value()); }

Rational parse_rational(std::string_view s) {
  auto first = s.find_first_not_of(" \t\n\r");
  auto last = s.find_last_not_of(" \t\n\r");
  if (first == std::string_view::npos) throw ParseError("", "empty scalar string");
  s = s.substr(first, last - first + 1);

  auto valid_int = [](std::string_view t, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !t.empty() && (t[0] == '-' || t[0] == '+')) i = 1;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    }
    return true;
  };

  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false)) {
    throw ParseError("", "malformed scalar \"" + std::string(s) + "\"");
  }
  std::string num_s(num);
  if (num_s[0] == '+') num_s.erase(0, 1);
  Integer d(std::string(den), 10);
  if (d == 0) throw ParseError("", "zero denominator in \"" + std::string(s) + "\"");
  Rational r(Integer(num_s, 10), d);
  r.canonicalize();
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  Integer z(std::to_string(n), 10);
  // 50 Miller-Rabin rounds; for n < 2^64 GMP additionally runs BPSW
  return mpz_probab_prime_p(z.get_mpz_t(), 50) > 0;
}

std::uint64_t next_prime(std::uint64_t n) {
  if (n <= 2) return 2;
  if (n % 2 == 0) ++n;
  while (!is_prime(n)) n += 2;
  return n;
}

}  // namespace monadforge
