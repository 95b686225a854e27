#pragma once

// Exact dense linear algebra: reduced row echelon form, rank/kernel, affine
// solving, inverses, congruence and symplectic normal form.

#include <optional>
#include <utility>
#include <vector>

#include "monadforge/matrix.hpp"

namespace monadforge {

template <class T>
struct Echelon {
  Matrix<T> rref;                    // same shape as the input
  std::vector<std::size_t> pivots;   // pivot column of row i, i < rank
  std::size_t rank() const { return pivots.size(); }
};

/// Gauss-Jordan elimination.  The reduced form is unique, so the result does
/// not depend on row order.  Pivots are the first nonzero entry in column order.
template <class T>
Echelon<T> row_echelon(Matrix<T> m) {
  const std::size_t R = m.rows(), C = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  T f = m.field().zero();
  T inv = m.field().zero();
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t p = r;
    while (p < R && is_zero(m(p, c))) ++p;
    if (p == R) continue;
    if (p != r)
      for (std::size_t j = c; j < C; ++j) std::swap(m(p, j), m(r, j));
    inv = inverse(m(r, c));
    for (std::size_t j = c; j < C; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < R; ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      f = m(i, c);
      for (std::size_t j = c; j < C; ++j) {
        if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

template <class T>
std::size_t rank(const Matrix<T>& m) {
  return row_echelon(m).rank();
}

/// Rank over Q by fraction-free (Bareiss) elimination on the matrix with
/// every row scaled to integers.  Same value as row_echelon(m).rank(), but
/// without the gcd work of rational Gauss-Jordan on large entries.
std::size_t rank(const Matrix<Rational>& m);

template <class T>
struct RankKernel {
  std::size_t rank = 0;
  std::vector<Vec<T>> kernel;  // basis of {v : Mv = 0}
};

template <class T>
std::vector<Vec<T>> kernel_from_echelon(const Echelon<T>& e, std::size_t ncols) {
  const auto& f = e.rref.field();
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec<T>> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    Vec<T> v(ncols, f.zero());
    v[free] = f.one();
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.rref(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class T>
RankKernel<T> rank_kernel(const Matrix<T>& m) {
  auto e = row_echelon(m);
  return {e.rank(), kernel_from_echelon(e, m.cols())};
}

template <class T>
struct AffineSolution {
  Vec<T> particular;
  std::vector<Vec<T>> kernel;
  std::size_t dim() const { return kernel.size(); }
};

/// Solves M x = rhs.  Returns nullopt when the system is inconsistent.
template <class T>
std::optional<AffineSolution<T>> solve_affine(const Matrix<T>& m, const Vec<T>& rhs) {
  if (rhs.size() != m.rows()) {
    throw DimensionMismatch("rhs length " + std::to_string(rhs.size()) + " for " + m.shape());
  }
  Matrix<T> aug(m.rows(), m.cols() + 1, m.field());
  aug.set_block(0, 0, m);
  for (std::size_t i = 0; i < m.rows(); ++i) aug(i, m.cols()) = rhs[i];
  auto e = row_echelon(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;

  AffineSolution<T> s;
  s.particular.assign(m.cols(), m.field().zero());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) s.particular[e.pivots[i]] = e.rref(i, m.cols());
  // the kernel of M is read off the same echelon form minus the last column
  Echelon<T> left{e.rref.block(0, 0, e.rref.rows(), m.cols()), e.pivots};
  s.kernel = kernel_from_echelon(left, m.cols());
  return s;
}

/// True when x solves M x = rhs exactly.
template <class T>
bool solves(const Matrix<T>& m, const Vec<T>& x, const Vec<T>& rhs) {
  return m * x == rhs;
}

/// Throws InvalidArgument for singular or non-square input.
template <class T>
Matrix<T> inverse(const Matrix<T>& m) {
  if (!m.square()) throw DimensionMismatch("inverse of non-square " + m.shape());
  const std::size_t n = m.rows();
  Matrix<T> aug(n, 2 * n, m.field());
  aug.set_block(0, 0, m);
  aug.set_block(0, n, Matrix<T>::identity(n, m.field()));
  auto e = row_echelon(std::move(aug));
  if (e.rank() < n || e.pivots[n - 1] != n - 1) throw InvalidArgument("singular matrix");
  return e.rref.block(0, n, n, n);
}

template <class T>
std::optional<Matrix<T>> try_inverse(const Matrix<T>& m) {
  try {
    return inverse(m);
  } catch (const InvalidArgument&) {
    return std::nullopt;
  }
}

template <class T>
T determinant(Matrix<T> m) {
  if (!m.square()) throw DimensionMismatch("determinant of non-square " + m.shape());
  const std::size_t n = m.rows();
  T det = m.field().one();
  T f = m.field().zero();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(m(p, c))) ++p;
    if (p == n) return m.field().zero();
    if (p != c) {
      for (std::size_t j = c; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    T inv = inverse(m(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(m(i, c))) continue;
      f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

/// g M g^T.
template <class T>
Matrix<T> congruence(const Matrix<T>& m, const Matrix<T>& g) {
  if (!m.square() || g.cols() != m.rows()) {
    throw DimensionMismatch("congruence of " + m.shape() + " by " + g.shape());
  }
  return g * m * g.transpose();
}

/// [[0, I_k], [-I_k, 0]] (+) [[0, 1], [-1, 0]] with m = 2k + 2.  For m = 2 only
/// the tail block is present.
template <class T>
Matrix<T> standard_symplectic(std::size_t m, field_of_t<T> f = {}) {
  if (m < 2 || m % 2 != 0) throw InvalidArgument("symplectic size must be even and >= 2");
  const std::size_t k = (m - 2) / 2;
  Matrix<T> q(m, m, f);
  for (std::size_t i = 0; i < k; ++i) {
    q(i, k + i) = f.one();
    q(k + i, i) = -f.one();
  }
  q(2 * k, 2 * k + 1) = f.one();
  q(2 * k + 1, 2 * k) = -f.one();
  return q;
}

/// Returns psi with psi^T S psi = standard_symplectic(m).
///
/// Symplectic Gram-Schmidt on the standard basis: take the first remaining
/// vector u, the first remaining w with S(u, w) != 0, rescale w so S(u, v) = 1,
/// and project the rest onto the S-complement of span(u, v).  The resulting
/// hyperbolic pairs fill the columns u_1..u_k, v_1..v_k, u_{k+1}, v_{k+1}.
template <class T>
Matrix<T> symplectic_framing(const Matrix<T>& s) {
  if (!s.square()) throw DimensionMismatch("framing needs a square matrix, got " + s.shape());
  const std::size_t m = s.rows();
  if (m == 0 || m % 2 != 0) throw InvalidArgument("framing needs even size, got " + std::to_string(m));
  if (!s.is_skew()) throw InvalidArgument("framing needs a skew matrix");
  const auto& f = s.field();

  auto form = [&](const Vec<T>& x, const Vec<T>& y) {
    T acc = f.zero();
    Vec<T> sy = s * y;
    for (std::size_t i = 0; i < m; ++i)
      if (!is_zero(x[i])) acc += x[i] * sy[i];
    return acc;
  };

  std::vector<Vec<T>> pool;
  for (std::size_t i = 0; i < m; ++i) {
    Vec<T> e(m, f.zero());
    e[i] = f.one();
    pool.push_back(std::move(e));
  }

  std::vector<std::pair<Vec<T>, Vec<T>>> pairs;
  while (pairs.size() * 2 < m) {
    // drop vectors that became zero after projection
    std::size_t ui = 0;
    while (ui < pool.size() && std::all_of(pool[ui].begin(), pool[ui].end(), [](const T& x) { return is_zero(x); }))
      ++ui;
    if (ui == pool.size()) throw DegenerateForm("skew form is degenerate");
    Vec<T> u = pool[ui];
    std::size_t wi = pool.size();
    T suw = f.zero();
    for (std::size_t j = 0; j < pool.size(); ++j) {
      if (j == ui) continue;
      suw = form(u, pool[j]);
      if (!is_zero(suw)) {
        wi = j;
        break;
      }
    }
    if (wi == pool.size()) throw DegenerateForm("skew form is degenerate");
    Vec<T> v = pool[wi];
    T inv = inverse(suw);
    for (auto& x : v) x *= inv;

    std::vector<Vec<T>> rest;
    for (std::size_t j = 0; j < pool.size(); ++j) {
      if (j == ui || j == wi) continue;
      Vec<T> x = pool[j];
      T xv = form(x, v);
      T xu = form(x, u);
      // x' = x - S(x,v) u + S(x,u) v is S-orthogonal to u and v
      for (std::size_t i = 0; i < m; ++i) x[i] += xu * v[i] - xv * u[i];
      rest.push_back(std::move(x));
    }
    pool = std::move(rest);
    pairs.emplace_back(std::move(u), std::move(v));
  }

  const std::size_t k = m / 2 - 1;
  Matrix<T> psi(m, m, f);
  for (std::size_t p = 0; p <= k; ++p) {
    std::size_t cu = p < k ? p : 2 * k;
    std::size_t cv = p < k ? k + p : 2 * k + 1;
    for (std::size_t i = 0; i < m; ++i) {
      psi(i, cu) = pairs[p].first[i];
      psi(i, cv) = pairs[p].second[i];
    }
  }
  return psi;
}

/// Cayley transform (I - X)^{-1} (I + X); nullopt when I - X is singular.
/// For skew X the result is orthogonal; for X with J X symmetric it is
/// symplectic for J.
template <class T>
std::optional<Matrix<T>> cayley(const Matrix<T>& x) {
  auto id = Matrix<T>::identity(x.rows(), x.field());
  auto inv = try_inverse(id - x);
  if (!inv) return std::nullopt;
  return *inv * (id + x);
}

}  // namespace monadforge
