#pragma once

// Dense row-major matrices over Q or F_p.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <type_traits>
#include <vector>

#include "monadforge/errors.hpp"
#include "monadforge/scalar.hpp"

namespace monadforge {

template <class T>
using Vec = std::vector<T>;

template <class T>
class Matrix {
 public:
  using value_type = T;
  using Field = field_of_t<T>;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Field field = {})
      : rows_(rows), cols_(cols), field_(field), data_(rows * cols, field.zero()) {}

  /// Rows given as nested vectors; every entry must live in `field`.
  static Matrix from_rows(const std::vector<std::vector<T>>& rows, Field field = {}) {
    std::size_t c = rows.empty() ? 0 : rows[0].size();
    Matrix m(rows.size(), c, field);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) throw DimensionMismatch("ragged rows");
      for (std::size_t j = 0; j < c; ++j) {
        check_entry(field, rows[i][j]);
        m(i, j) = rows[i][j];
      }
    }
    return m;
  }

  static Matrix from_ints(std::initializer_list<std::initializer_list<long>> rows, Field field = {}) {
    std::size_t c = rows.size() == 0 ? 0 : rows.begin()->size();
    Matrix m(rows.size(), c, field);
    std::size_t i = 0;
    for (const auto& r : rows) {
      if (r.size() != c) throw DimensionMismatch("ragged rows");
      std::size_t j = 0;
      for (long v : r) m(i, j++) = field.from_int(v);
      ++i;
    }
    return m;
  }

  static Matrix identity(std::size_t n, Field field = {}) {
    Matrix m(n, n, field);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  static Matrix column(const Vec<T>& v, Field field = {}) {
    Matrix m(v.size(), 1, field);
    for (std::size_t i = 0; i < v.size(); ++i) {
      check_entry(field, v[i]);
      m(i, 0) = v[i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec<T> row(std::size_t i) const {
    return Vec<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }
  Vec<T> col(std::size_t j) const {
    Vec<T> v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
    return v;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionMismatch("block out of range");
    Matrix b(nr, nc, field_);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw DimensionMismatch("block out of range");
    same_field(b);
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const T& x) { return monadforge::is_zero(x); });
  }
  bool is_symmetric() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if (!((*this)(i, j) == (*this)(j, i))) return false;
    return true;
  }
  bool is_skew() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (!monadforge::is_zero((*this)(i, i))) return false;
      for (std::size_t j = i + 1; j < cols_; ++j)
        if (!monadforge::is_zero((*this)(i, j) + (*this)(j, i))) return false;
    }
    return true;
  }

  Matrix& operator+=(const Matrix& o) {
    same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }
  Matrix operator-() const {
    Matrix r(rows_, cols_, field_);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = -data_[k];
    return r;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) {
      throw DimensionMismatch("product of " + a.shape() + " and " + b.shape());
    }
    a.same_field(b);
    Matrix r(a.rows_, b.cols_, a.field_);
    T t = a.field_.zero();
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& x = a(i, k);
        if (monadforge::is_zero(x)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const T& y = b(k, j);
          if (monadforge::is_zero(y)) continue;
          t = x * y;
          r(i, j) += t;
        }
      }
    }
    return r;
  }

  friend Vec<T> operator*(const Matrix& a, const Vec<T>& v) {
    if (a.cols_ != v.size()) throw DimensionMismatch("matrix-vector size mismatch");
    Vec<T> r(a.rows_, a.field_.zero());
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k)
        if (!monadforge::is_zero(a(i, k)) && !monadforge::is_zero(v[k])) r[i] += a(i, k) * v[k];
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

  const std::vector<T>& data() const { return data_; }

 private:
  static void check_entry(const Field& f, const T& x) {
    if constexpr (std::is_same_v<T, Fp>) {
      if (x.modulus() != f.p) throw FieldMismatch("entry modulus differs from matrix field");
    } else {
      (void)f;
      (void)x;
    }
  }
  void same_field(const Matrix& o) const {
    if (!(field_ == o.field_)) throw FieldMismatch(field_.name() + " vs " + o.field_.name());
  }
  void same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
      throw DimensionMismatch("shape " + shape() + " vs " + o.shape());
    }
    same_field(o);
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Field field_{};
  std::vector<T> data_;
};

using QMatrix = Matrix<Rational>;
using FpMatrix = Matrix<Fp>;
using QVec = Vec<Rational>;

inline FpMatrix reduce(const QMatrix& m, const PrimeField& f) {
  FpMatrix r(m.rows(), m.cols(), f);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = f.from_rational(m(i, j));
  return r;
}

inline Vec<Fp> reduce(const QVec& v, const PrimeField& f) {
  Vec<Fp> r;
  r.reserve(v.size());
  for (const auto& x : v) r.push_back(f.from_rational(x));
  return r;
}

/// Block-diagonal matrix built from square or rectangular blocks.
template <class T>
Matrix<T> block_diag(const std::vector<Matrix<T>>& blocks) {
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  Matrix<T> m(r, c, blocks.empty() ? field_of_t<T>{} : blocks[0].field());
  r = c = 0;
  for (const auto& b : blocks) {
    m.set_block(r, c, b);
    r += b.rows();
    c += b.cols();
  }
  return m;
}

template <class T>
Matrix<T> hstack(const std::vector<Matrix<T>>& parts) {
  if (parts.empty()) return {};
  std::size_t c = 0;
  for (const auto& p : parts) {
    if (p.rows() != parts[0].rows()) throw DimensionMismatch("hstack row mismatch");
    c += p.cols();
  }
  Matrix<T> m(parts[0].rows(), c, parts[0].field());
  c = 0;
  for (const auto& p : parts) {
    m.set_block(0, c, p);
    c += p.cols();
  }
  return m;
}

template <class T>
Matrix<T> vstack(const std::vector<Matrix<T>>& parts) {
  if (parts.empty()) return {};
  std::size_t r = 0;
  for (const auto& p : parts) {
    if (p.cols() != parts[0].cols()) throw DimensionMismatch("vstack column mismatch");
    r += p.rows();
  }
  Matrix<T> m(r, parts[0].cols(), parts[0].field());
  r = 0;
  for (const auto& p : parts) {
    m.set_block(r, 0, p);
    r += p.rows();
  }
  return m;
}

}  // namespace monadforge
