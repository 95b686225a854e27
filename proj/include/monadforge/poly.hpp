#pragma once

// Polynomials in up to four variables, matrices of linear forms and their
// minor ideals.  Terms are kept sorted by degrevlex with x1 > x2 > x3 > x4.

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "monadforge/matrix.hpp"

namespace monadforge {

inline constexpr std::size_t kMaxVars = 4;

struct Monomial {
  std::array<std::uint16_t, kMaxVars> e{};
  std::uint64_t key = 0;

  Monomial() { rekey(); }
  explicit Monomial(std::array<std::uint16_t, kMaxVars> exps) : e(exps) { rekey(); }

  static Monomial var(std::size_t i, std::uint16_t power = 1) {
    std::array<std::uint16_t, kMaxVars> x{};
    x[i] = power;
    return Monomial(x);
  }

  unsigned degree() const { return unsigned(e[0]) + e[1] + e[2] + e[3]; }

  // degrevlex: higher degree first, then the smaller exponent of the last
  // variable wins, then of the one before it, and so on.
  void rekey() {
    key = (std::uint64_t(degree()) << 48) | (std::uint64_t(0xFFFF - e[3]) << 32) |
          (std::uint64_t(0xFFFF - e[2]) << 16) | std::uint64_t(0xFFFF - e[1]);
  }

  bool divides(const Monomial& o) const {
    return e[0] <= o.e[0] && e[1] <= o.e[1] && e[2] <= o.e[2] && e[3] <= o.e[3];
  }
  bool coprime(const Monomial& o) const {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (e[i] && o.e[i]) return false;
    return true;
  }
  /// Index of the variable when this is a pure power x_i^d (d >= 1), else -1.
  int pure_power_var() const {
    int v = -1;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (e[i] == 0) continue;
      if (v >= 0) return -1;
      v = int(i);
    }
    return v;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    std::array<std::uint16_t, kMaxVars> x;
    for (std::size_t i = 0; i < kMaxVars; ++i) x[i] = std::uint16_t(a.e[i] + b.e[i]);
    return Monomial(x);
  }
  /// a / b, assuming b divides a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    std::array<std::uint16_t, kMaxVars> x;
    for (std::size_t i = 0; i < kMaxVars; ++i) x[i] = std::uint16_t(a.e[i] - b.e[i]);
    return Monomial(x);
  }
  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    std::array<std::uint16_t, kMaxVars> x;
    for (std::size_t i = 0; i < kMaxVars; ++i) x[i] = std::max(a.e[i], b.e[i]);
    return Monomial(x);
  }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.key == b.key; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.key != b.key; }
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.key < b.key; }
  friend bool operator>(const Monomial& a, const Monomial& b) { return a.key > b.key; }
};

template <class T>
struct Term {
  Monomial m;
  T c;
};

template <class T>
class Poly {
 public:
  using Field = field_of_t<T>;

  Poly() = default;
  explicit Poly(std::size_t nvars, Field f = {}) : nvars_(nvars), field_(f) {
    if (nvars < 1 || nvars > kMaxVars) throw InvalidArgument("nvars must be 1..4");
  }

  static Poly constant(std::size_t nvars, const T& c, Field f = {}) {
    Poly p(nvars, f);
    if (!monadforge::is_zero(c)) p.terms_.push_back({Monomial(), c});
    return p;
  }
  static Poly variable(std::size_t nvars, std::size_t i, Field f = {}) {
    if (i >= nvars) throw InvalidArgument("variable index out of range");
    Poly p(nvars, f);
    p.terms_.push_back({Monomial::var(i), f.one()});
    return p;
  }
  static Poly monomial(std::size_t nvars, const Monomial& m, const T& c, Field f = {}) {
    Poly p(nvars, f);
    for (std::size_t i = nvars; i < kMaxVars; ++i)
      if (m.e[i]) throw InvalidArgument("monomial uses a variable beyond nvars");
    if (!monadforge::is_zero(c)) p.terms_.push_back({m, c});
    return p;
  }
  /// Terms in any order; duplicates are combined, zeros dropped.
  static Poly from_terms(std::size_t nvars, std::vector<Term<T>> terms, Field f = {}) {
    Poly p(nvars, f);
    for (auto& t : terms) p += monomial(nvars, t.m, t.c, f);
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const Field& field() const { return field_; }
  const std::vector<Term<T>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const Monomial& lm() const { return terms_.front().m; }
  const T& lc() const { return terms_.front().c; }

  /// Largest total degree; 0 for the zero polynomial.
  unsigned degree() const { return terms_.empty() ? 0 : terms_.front().m.degree(); }
  bool is_homogeneous() const {
    for (const auto& t : terms_)
      if (t.m.degree() != degree()) return false;
    return true;
  }

  Poly& operator+=(const Poly& o) { return axpy(field_.one(), Monomial(), o); }
  Poly& operator-=(const Poly& o) { return axpy(-field_.one(), Monomial(), o); }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  Poly operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
  }
  Poly& operator*=(const T& s) {
    if (monadforge::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& t : terms_) t.c *= s;
    return *this;
  }
  friend Poly operator*(Poly a, const T& s) { return a *= s; }
  friend Poly operator*(const T& s, Poly a) { return a *= s; }

  /// this += c * m * o, by a sorted merge.
  Poly& axpy(const T& c, const Monomial& m, const Poly& o) {
    check(o);
    if (monadforge::is_zero(c) || o.terms_.empty()) return *this;
    std::vector<Term<T>> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    T prod = field_.zero();
    while (i < terms_.size() || j < o.terms_.size()) {
      if (j == o.terms_.size()) {
        out.push_back(std::move(terms_[i++]));
        continue;
      }
      Monomial mj = o.terms_[j].m * m;
      if (i == terms_.size() || mj > terms_[i].m) {
        prod = c * o.terms_[j].c;
        out.push_back({mj, prod});
        ++j;
      } else if (terms_[i].m > mj) {
        out.push_back(std::move(terms_[i++]));
      } else {
        prod = c * o.terms_[j].c;
        terms_[i].c += prod;
        if (!monadforge::is_zero(terms_[i].c)) out.push_back(std::move(terms_[i]));
        ++i;
        ++j;
      }
    }
    terms_ = std::move(out);
    return *this;
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check(b);
    Poly r(a.nvars_, a.field_);
    for (const auto& t : a.terms_) r.axpy(t.c, t.m, b);
    return r;
  }

  T eval(const Vec<T>& point) const {
    if (point.size() != nvars_) throw DimensionMismatch("point length differs from nvars");
    T acc = field_.zero();
    T v = field_.zero();
    for (const auto& t : terms_) {
      v = t.c;
      for (std::size_t i = 0; i < nvars_; ++i)
        for (unsigned k = 0; k < t.m.e[i]; ++k) v *= point[i];
      acc += v;
    }
    return acc;
  }

  /// Substitutes x_var = value; the variable stays in the ring but no longer occurs.
  Poly specialize(std::size_t var, const T& value) const {
    Poly r(nvars_, field_);
    T v = field_.zero();
    for (const auto& t : terms_) {
      v = t.c;
      for (unsigned k = 0; k < t.m.e[var]; ++k) v *= value;
      Monomial m = t.m;
      m.e[var] = 0;
      m.rekey();
      r += monomial(nvars_, m, v, field_);
    }
    return r;
  }

  /// Removes and returns the leading term.
  Term<T> pop_lead() {
    Term<T> t = std::move(terms_.front());
    terms_.erase(terms_.begin());
    return t;
  }
  /// Appends a term smaller than every stored term (used when building a
  /// remainder in decreasing order).
  void append_smaller(Term<T> t) {
    if (!terms_.empty() && !(terms_.back().m > t.m)) throw InvalidArgument("append_smaller out of order");
    if (!monadforge::is_zero(t.c)) terms_.push_back(std::move(t));
  }

  /// Scales so that the leading coefficient is 1.
  Poly monic() const {
    if (terms_.empty()) return *this;
    return *this * inverse(lc());
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].m != b.terms_[i].m || !(a.terms_[i].c == b.terms_[i].c)) return false;
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& t : terms_) {
      if (!s.empty()) s += " + ";
      s += "(" + to_string(t.c) + ")";
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (t.m.e[i] == 0) continue;
        s += "*x" + std::to_string(i + 1);
        if (t.m.e[i] > 1) s += "^" + std::to_string(t.m.e[i]);
      }
    }
    return s;
  }

 private:
  void check(const Poly& o) const {
    if (nvars_ != o.nvars_) throw DimensionMismatch("polynomials in different numbers of variables");
    if (!(field_ == o.field_)) throw FieldMismatch(field_.name() + " vs " + o.field_.name());
  }

  std::size_t nvars_ = 4;
  Field field_{};
  std::vector<Term<T>> terms_;
};

using QPoly = Poly<Rational>;
using FpPoly = Poly<Fp>;

inline FpPoly reduce(const QPoly& p, const PrimeField& f) {
  std::vector<Term<Fp>> t;
  for (const auto& x : p.terms()) t.push_back({x.m, f.from_rational(x.c)});
  return FpPoly::from_terms(p.nvars(), std::move(t), f);
}

template <class T>
struct Ideal {
  std::size_t nvars = 4;
  std::vector<Poly<T>> gens;

  bool homogeneous() const {
    for (const auto& g : gens)
      if (!g.is_homogeneous()) return false;
    return true;
  }
};

inline Ideal<Fp> reduce(const Ideal<Rational>& I, const PrimeField& f) {
  Ideal<Fp> r{I.nvars, {}};
  for (const auto& g : I.gens) {
    auto h = reduce(g, f);
    if (!h.is_zero()) r.gens.push_back(std::move(h));
  }
  return r;
}

/// A matrix whose entries are linear forms: entry(i, j) = sum_k x_k coeffs[k](i, j).
template <class T>
class LinearFormMatrix {
 public:
  using Field = field_of_t<T>;

  LinearFormMatrix() = default;
  explicit LinearFormMatrix(std::vector<Matrix<T>> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty() || coeffs_.size() > kMaxVars) throw InvalidArgument("need 1..4 coefficient matrices");
    for (const auto& m : coeffs_) {
      if (m.rows() != coeffs_[0].rows() || m.cols() != coeffs_[0].cols()) {
        throw DimensionMismatch("coefficient matrices differ in shape");
      }
    }
  }

  std::size_t nvars() const { return coeffs_.size(); }
  std::size_t rows() const { return coeffs_.empty() ? 0 : coeffs_[0].rows(); }
  std::size_t cols() const { return coeffs_.empty() ? 0 : coeffs_[0].cols(); }
  const Field& field() const { return coeffs_.at(0).field(); }
  const std::vector<Matrix<T>>& coeffs() const { return coeffs_; }

  Poly<T> entry(std::size_t i, std::size_t j) const {
    Poly<T> p(nvars(), field());
    for (std::size_t k = 0; k < nvars(); ++k)
      p += Poly<T>::monomial(nvars(), Monomial::var(k), coeffs_[k](i, j), field());
    return p;
  }

  Matrix<T> eval_at(const Vec<T>& point) const {
    if (point.size() != nvars()) {
      throw DimensionMismatch("point has " + std::to_string(point.size()) + " coordinates, expected " +
                              std::to_string(nvars()));
    }
    Matrix<T> r(rows(), cols(), field());
    for (std::size_t k = 0; k < nvars(); ++k)
      if (!is_zero(point[k])) r += coeffs_[k] * point[k];
    return r;
  }

  LinearFormMatrix transpose() const {
    std::vector<Matrix<T>> t;
    for (const auto& m : coeffs_) t.push_back(m.transpose());
    return LinearFormMatrix(std::move(t));
  }

  /// Multiplies every coefficient matrix by a constant on the right.
  LinearFormMatrix times(const Matrix<T>& right) const {
    std::vector<Matrix<T>> t;
    for (const auto& m : coeffs_) t.push_back(m * right);
    return LinearFormMatrix(std::move(t));
  }

 private:
  std::vector<Matrix<T>> coeffs_;
};

inline LinearFormMatrix<Fp> reduce(const LinearFormMatrix<Rational>& L, const PrimeField& f) {
  std::vector<FpMatrix> c;
  for (const auto& m : L.coeffs()) c.push_back(reduce(m, f));
  return LinearFormMatrix<Fp>(std::move(c));
}

/// Product of two matrices of forms given entrywise.
template <class T>
std::vector<std::vector<Poly<T>>> form_product(const std::vector<std::vector<Poly<T>>>& a,
                                               const std::vector<std::vector<Poly<T>>>& b) {
  if (a.empty() || b.empty() || a[0].size() != b.size()) throw DimensionMismatch("form product shapes");
  std::vector<std::vector<Poly<T>>> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b[0].size(); ++j) {
      Poly<T> acc(a[i][0].nvars(), a[i][0].field());
      for (std::size_t k = 0; k < b.size(); ++k) acc += a[i][k] * b[k][j];
      r[i].push_back(std::move(acc));
    }
  }
  return r;
}

template <class T>
std::vector<std::vector<Poly<T>>> entries(const LinearFormMatrix<T>& L) {
  std::vector<std::vector<Poly<T>>> r(L.rows());
  for (std::size_t i = 0; i < L.rows(); ++i)
    for (std::size_t j = 0; j < L.cols(); ++j) r[i].push_back(L.entry(i, j));
  return r;
}

/// k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k);

/// Determinant of a square matrix of polynomials (cofactor expansion with
/// memoization on column subsets).
template <class T>
Poly<T> poly_determinant(const std::vector<std::vector<Poly<T>>>& m) {
  const std::size_t k = m.size();
  if (k == 0) throw InvalidArgument("empty determinant");
  // dp over the set of used columns, filling rows top to bottom
  std::vector<Poly<T>> dp(std::size_t(1) << k, Poly<T>(m[0][0].nvars(), m[0][0].field()));
  std::vector<bool> have(dp.size(), false);
  dp[0] = Poly<T>::constant(m[0][0].nvars(), m[0][0].field().one(), m[0][0].field());
  have[0] = true;
  for (std::size_t mask = 0; mask < dp.size(); ++mask) {
    if (!have[mask] || dp[mask].is_zero()) continue;
    std::size_t row = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (row == k) continue;
    for (std::size_t c = 0; c < k; ++c) {
      if (mask & (std::size_t(1) << c)) continue;
      if (m[row][c].is_zero()) continue;
      // sign: number of used columns greater than c
      std::size_t greater = static_cast<std::size_t>(__builtin_popcountll(mask >> (c + 1)));
      Poly<T> term = dp[mask] * m[row][c];
      if (greater % 2) term = -term;
      std::size_t next = mask | (std::size_t(1) << c);
      dp[next] += term;
      have[next] = true;
    }
  }
  return dp.back();
}

/// Ideal of all k x k minors, row subsets outer and column subsets inner, both
/// lexicographic.  Identically zero minors are dropped.
template <class T>
Ideal<T> minor_ideal(const LinearFormMatrix<T>& L, std::size_t k) {
  if (k == 0 || k > std::min(L.rows(), L.cols())) {
    throw InvalidArgument("minor size " + std::to_string(k) + " out of range for " +
                          std::to_string(L.rows()) + "x" + std::to_string(L.cols()));
  }
  auto e = entries(L);
  Ideal<T> I{L.nvars(), {}};
  for (const auto& rs : subsets(L.rows(), k)) {
    for (const auto& cs : subsets(L.cols(), k)) {
      std::vector<std::vector<Poly<T>>> sub(k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub[i].push_back(e[rs[i]][cs[j]]);
      auto d = poly_determinant(sub);
      if (!d.is_zero()) I.gens.push_back(std::move(d));
    }
  }
  return I;
}

}  // namespace monadforge
