#pragma once

// Nets of quadrics, their quotient presentation (W, qW, c), monad maps,
// Barth verification, cohomology tables of E(t) and splitting on lines.
//
// Index conventions.  A net on an ambient space with basis e_1..e_k (k = 4
// for P^3, 3 for P^2) stores one symmetric n x n block per pair i < j, in
// lexicographic pair order (12,13,14,23,24,34 or 12,13,23).  Flattened
// matrices use column (k-1)*n + h for h in H_n and basis vector e_k, so the
// column blocks correspond to e_1, .., e_k.

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "monadforge/linalg.hpp"
#include "monadforge/poly.hpp"
#include "monadforge/report.hpp"

namespace monadforge {

struct QuadricNet {
  std::size_t n = 0;
  std::size_t ambient = 4;
  std::vector<QMatrix> blocks;  // one per pair, lexicographic

  static std::vector<std::pair<std::size_t, std::size_t>> pairs(std::size_t ambient);
  static std::size_t pair_index(std::size_t ambient, std::size_t i, std::size_t j);
  /// "12", "34", ... with 1-based indices.
  static std::string pair_key(std::size_t i, std::size_t j);

  static QuadricNet zero(std::size_t n, std::size_t ambient);

  const QMatrix& block(std::size_t i, std::size_t j) const { return blocks.at(pair_index(ambient, i, j)); }
  QMatrix& block(std::size_t i, std::size_t j) { return blocks.at(pair_index(ambient, i, j)); }

  /// Throws InvalidArgument unless shapes fit and every block is symmetric.
  void validate() const;

  friend bool operator==(const QuadricNet& a, const QuadricNet& b) {
    return a.n == b.n && a.ambient == b.ambient && a.blocks == b.blocks;
  }
};

/// Skew (ambient n) x (ambient n) matrix: block (i,j) = M_ij, (j,i) = -M_ij.
QMatrix flatten(const QuadricNet& net);

/// Inverse of flatten.  Throws InvalidArgument when the matrix is not the
/// flattening of a net (nonzero diagonal blocks or non-symmetric blocks).
QuadricNet net_from_flat(const QMatrix& f, std::size_t n, std::size_t ambient);

struct Pr2Split {
  QMatrix net_part;  // symmetric blocks, zero diagonal blocks
  QMatrix pr2_part;  // skew blocks, block (j,i) = block (i,j)
};

/// Splits a skew matrix in the two summands of the exterior square.
Pr2Split decompose_pr2(const QMatrix& t, std::size_t n, std::size_t ambient);

/// W = quotient of H_n (x) V by the kernel of the flattened net; c is the
/// quotient map and qW the induced skew form, so c^T qW c = flatten.
template <class T>
struct Presentation {
  std::size_t n = 0;
  std::size_t ambient = 4;
  Matrix<T> c;   // (2n+2) x (ambient n)
  Matrix<T> qW;  // (2n+2) x (2n+2)

  std::size_t w_dim() const { return c.rows(); }
  /// Column block of c belonging to e_i: a (2n+2) x n matrix.
  Matrix<T> c_block(std::size_t i) const { return c.block(0, i * n, c.rows(), n); }
};

using QPresentation = Presentation<Rational>;

/// Canonical presentation from the reduced row echelon form of a flattened
/// skew matrix: c = nonzero rows, qW = restriction to the pivot positions.
/// Throws WrongRank unless rank = 2n + 2.
template <class T>
Presentation<T> presentation_of_flat(const Matrix<T>& f, std::size_t n, std::size_t ambient) {
  auto e = row_echelon(f);
  if (e.rank() != 2 * n + 2) throw WrongRank(2 * n + 2, e.rank());
  const std::size_t r = e.rank();
  Presentation<T> p;
  p.n = n;
  p.ambient = ambient;
  p.c = e.rref.block(0, 0, r, f.cols());
  p.qW = Matrix<T>(r, r, f.field());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) p.qW(i, j) = f(e.pivots[i], e.pivots[j]);
  return p;
}

QPresentation presentation(const QuadricNet& net);

inline Presentation<Fp> reduce(const QPresentation& p, const PrimeField& f) {
  return {p.n, p.ambient, reduce(p.c, f), reduce(p.qW, f)};
}

template <class T>
struct MonadMaps {
  LinearFormMatrix<T> a;        // (2n+2) x n, a(x) = sum x_i c_i
  LinearFormMatrix<T> adual_q;  // n x (2n+2), a(x)^T qW
};

template <class T>
MonadMaps<T> monad_maps(const Presentation<T>& p) {
  std::vector<Matrix<T>> a, b;
  for (std::size_t i = 0; i < p.ambient; ++i) {
    a.push_back(p.c_block(i));
    b.push_back(a.back().transpose() * p.qW);
  }
  return {LinearFormMatrix<T>(std::move(a)), LinearFormMatrix<T>(std::move(b))};
}

/// adual_q(x) a(x) expanded as an n x n matrix of quadratic forms.
template <class T>
std::vector<std::vector<Poly<T>>> monad_composition(const MonadMaps<T>& m) {
  return form_product(entries(m.adual_q), entries(m.a));
}

// ---------------------------------------------------------------------------
// Section maps and cohomology

/// Exponent vectors of degree t in k variables (empty for t < 0), in a fixed
/// order.
std::vector<std::array<std::uint16_t, kMaxVars>> monomials_of_degree(std::size_t k, int t);

/// dim S_t for k variables, zero for t < 0.
long dim_sym(std::size_t k, int t);

/// chi(O(t)) on P^{k-1} as a polynomial in t, valid for every t.
long chi_line_bundle(std::size_t k, int t);

/// Multiplication map sum_i x_i L_i : U (x) S_t -> U' (x) S_{t+1} for constant
/// matrices L_i : U -> U'.  Rows are indexed by (target index, monomial of
/// degree t+1), columns by (source index, monomial of degree t).
template <class T>
Matrix<T> section_map(const std::vector<Matrix<T>>& l, int t) {
  const std::size_t k = l.size();
  const auto& f = l.at(0).field();
  const std::size_t src = l[0].cols(), dst = l[0].rows();
  auto from = monomials_of_degree(k, t);
  auto to = monomials_of_degree(k, t + 1);
  std::map<std::array<std::uint16_t, kMaxVars>, std::size_t> index;
  for (std::size_t i = 0; i < to.size(); ++i) index[to[i]] = i;
  Matrix<T> m(dst * to.size(), src * from.size(), f);
  for (std::size_t mu = 0; mu < from.size(); ++mu) {
    for (std::size_t i = 0; i < k; ++i) {
      auto nu = from[mu];
      ++nu[i];
      const std::size_t row_mon = index.at(nu);
      for (std::size_t s = 0; s < dst; ++s)
        for (std::size_t r = 0; r < src; ++r)
          if (!is_zero(l[i](s, r))) m(s * to.size() + row_mon, r * from.size() + mu) += l[i](s, r);
    }
  }
  return m;
}

struct SectionCounts {
  long ker_m2 = 0;    // dim ker M2(t)
  long coker_m2 = 0;  // dim coker M2(t)
  long rank_m1 = 0;   // rank M1(t)
  long h0() const { return ker_m2 - rank_m1; }
};

/// Ranks of M1(t): H (x) S_{t-1} -> W (x) S_t and M2(t): W (x) S_t -> H^ (x) S_{t+1}.
template <class T>
SectionCounts section_counts(const MonadMaps<T>& maps, int t) {
  SectionCounts s;
  const auto& a = maps.a.coeffs();
  const auto& b = maps.adual_q.coeffs();
  const std::size_t k = a.size();
  const long w = static_cast<long>(a[0].rows());
  const long n = static_cast<long>(a[0].cols());
  long rank2 = 0;
  if (t >= 0) rank2 = static_cast<long>(rank(section_map(b, t)));
  s.ker_m2 = w * dim_sym(k, t) - rank2;
  s.coker_m2 = n * dim_sym(k, t + 1) - rank2;
  s.rank_m1 = t >= 1 ? static_cast<long>(rank(section_map(a, t - 1))) : 0;
  return s;
}

struct CohomologyTable {
  std::size_t n = 0;
  std::size_t ambient = 4;
  int t_min = 0;
  int t_max = 0;
  std::vector<std::array<long, 4>> h;  // h[t - t_min][i], i < ambient
  bool subbundle_assumed = true;       // surjectivity of adual_q not certified by the caller
  std::string field = "Q";

  const std::array<long, 4>& at(int t) const { return h.at(static_cast<std::size_t>(t - t_min)); }
  long get(std::size_t i, int t) const { return at(t)[i]; }

  /// Serre duality and Euler characteristic checks on every twist in range.
  bool duality_holds() const;
  bool chi_holds() const;
  /// Expected chi(E(t)) from the monad: (2n+2) chi(O(t)) - n chi(O(t-1)) - n chi(O(t+1)).
  long expected_chi(int t) const;

  friend bool operator==(const CohomologyTable& a, const CohomologyTable& b) {
    return a.n == b.n && a.ambient == b.ambient && a.t_min == b.t_min && a.t_max == b.t_max && a.h == b.h;
  }
};

/// Cohomology of E(t) for t in [t_min, t_max].  Lower rows come from the
/// section maps, upper rows from Serre duality (E is self-dual), evaluated at
/// the dual twists.  Throws ResourceLimit when max(|t|) exceeds `max_twist`.
template <class T>
CohomologyTable cohomology_table(const Presentation<T>& p, int t_min, int t_max, int max_twist = 12) {
  if (t_min > t_max) throw InvalidArgument("empty twist range");
  const int shift = p.ambient == 4 ? -4 : -3;
  for (int t : {t_min, t_max, shift - t_min, shift - t_max})
    if (t > max_twist || t < -max_twist - 4) throw ResourceLimit("twist range too large");
  auto maps = monad_maps(p);
  std::map<int, SectionCounts> memo;
  auto counts = [&](int t) -> const SectionCounts& {
    auto it = memo.find(t);
    if (it == memo.end()) it = memo.emplace(t, section_counts(maps, t)).first;
    return it->second;
  };
  auto h0 = [&](int t) { return counts(t).h0(); };
  auto h1 = [&](int t) {
    // on P^2 the cokernel only computes h1 when H^2(O(t-1)) = 0, i.e. t >= -1
    if (p.ambient == 3 && t < -1) return counts(-3 - t).coker_m2;
    return counts(t).coker_m2;
  };
  CohomologyTable tab;
  tab.n = p.n;
  tab.ambient = p.ambient;
  tab.t_min = t_min;
  tab.t_max = t_max;
  if constexpr (std::is_same_v<T, Fp>) tab.field = p.c.field().name();
  for (int t = t_min; t <= t_max; ++t) {
    std::array<long, 4> row{0, 0, 0, 0};
    row[0] = h0(t);
    row[1] = h1(t);
    if (p.ambient == 4) {
      row[2] = h1(-4 - t);
      row[3] = h0(-4 - t);
    } else {
      row[2] = h0(-3 - t);
    }
    tab.h.push_back(row);
  }
  return tab;
}

/// h0(E) from the t = 0 section maps.
template <class T>
long h0_at_zero(const Presentation<T>& p) {
  return section_counts(monad_maps(p), 0).h0();
}

/// h^1(E (x) Omega^1) realized as the rank of the flattened net.
long h1_E_omega(const QuadricNet& net);

/// d with E restricted to the line through p1, p2 equal to O(d) + O(-d).
/// d = h0(E_L(-1)) = n - rank(a(p1)^T qW a(p2)).  Throws InvalidArgument for
/// dependent points.
template <class T>
long line_splitting(const Presentation<T>& p, const Vec<T>& p1, const Vec<T>& p2) {
  if (p1.size() != p.ambient || p2.size() != p.ambient) throw DimensionMismatch("line points need ambient coordinates");
  Matrix<T> pts(2, p.ambient, p.c.field());
  for (std::size_t i = 0; i < p.ambient; ++i) {
    pts(0, i) = p1[i];
    pts(1, i) = p2[i];
  }
  if (rank(pts) < 2) throw InvalidArgument("line needs two distinct points");
  auto maps = monad_maps(p);
  Matrix<T> pairing = maps.adual_q.eval_at(p1) * maps.a.eval_at(p2);
  return static_cast<long>(p.n) - static_cast<long>(rank(pairing));
}

/// h0(E_L(t)) for t >= 0 from the monad restricted to the line (section maps
/// on P^1).  Independent of line_splitting; used as its oracle.
template <class T>
long line_h0(const Presentation<T>& p, const Vec<T>& p1, const Vec<T>& p2, int t) {
  if (t < 0) throw InvalidArgument("line_h0 needs t >= 0");
  auto maps = monad_maps(p);
  std::vector<Matrix<T>> a{maps.a.eval_at(p1), maps.a.eval_at(p2)};
  std::vector<Matrix<T>> b{maps.adual_q.eval_at(p1), maps.adual_q.eval_at(p2)};
  MonadMaps<T> line{LinearFormMatrix<T>(a), LinearFormMatrix<T>(b)};
  return section_counts(line, t).h0();
}

// ---------------------------------------------------------------------------
// Verification

/// Barth conditions: (i) rank 2n+2, (ii) surjectivity of adual_q everywhere,
/// (iii) h0(E) = 0.  Works for ambient 4 and for plane nets (ambient 3).
VerificationReport barth_verify(const QuadricNet& net, const VerifyOptions& opt);

/// Surjectivity of adual_q on projective space through the n x n minors.
ConditionResult surjectivity_condition(const QPresentation& p, const VerifyOptions& opt, const std::string& id,
                                       const std::string& label);

/// h0(E) = 0 at the requested precision.
ConditionResult h0_condition(const QPresentation& p, const VerifyOptions& opt, const std::string& id,
                             const std::string& label);

}  // namespace monadforge
