#pragma once

// Barth octuples (A1, A2, B1, B2, a1, a2, b1, b2), the matrix A~ and the net
// A~^T Q A~, the conditions (i)-(iv) defining the slice, the D-matrix rank
// certificate and the action of O(n) x Sp(2).

#include "monadforge/frame.hpp"

namespace monadforge {

struct BarthOctuple {
  std::size_t n = 0;
  QMatrix A1, A2, B1, B2;  // symmetric n x n
  QVec a1, a2, b1, b2;     // length n

  static BarthOctuple zero(std::size_t n);
  /// Throws InvalidArgument on wrong shapes or non-symmetric matrices.
  void validate() const;

  friend bool operator==(const BarthOctuple& x, const BarthOctuple& y) {
    return x.n == y.n && x.A1 == y.A1 && x.A2 == y.A2 && x.B1 == y.B1 && x.B2 == y.B2 && x.a1 == y.a1 &&
           x.a2 == y.a2 && x.b1 == y.b1 && x.b2 == y.b2;
  }
};

/// a b^T - b a^T.
QMatrix wedge(const QVec& a, const QVec& b);
/// a b^T.
QMatrix outer(const QVec& a, const QVec& b);
/// X Y - Y X.
QMatrix commutator(const QMatrix& x, const QMatrix& y);

/// (2n+2) x 4n, column blocks by e1..e4:
///   [ 0  | 1 | A1  | A2  ]
///   [ -1 | 0 | B1  | B2  ]
///   [ 0  | 0 | a1^T| a2^T]
///   [ 0  | 0 | b1^T| b2^T]
QMatrix tilde_matrix(const BarthOctuple& o);

/// A1 B2 - B1 A2 + a1 b2^T - b1 a2^T.
QMatrix c_of_octuple(const BarthOctuple& o);

/// The three residuals whose vanishing is (i):
/// [A1,B1] + a1^b1, [A2,B2] + a2^b2, C - C^T.
struct ClosedResiduals {
  QMatrix r1, r2, r3;
  bool all_zero() const { return r1.is_zero() && r2.is_zero() && r3.is_zero(); }
};
ClosedResiduals closed_residuals(const BarthOctuple& o);

/// [A1 + tA2, B1 + tB2] + (a1 + ta2) ^ (b1 + tb2).
QMatrix pencil_residual(const BarthOctuple& o, const Rational& t);

/// The skew matrix with blocks
///   [[0, 1, A1, A2], [-1, 0, B1, B2],
///    [-A1, -B1, [A1,B1] + a1^b1, C], [-A2, -B2, -C^T, [A2,B2] + a2^b2]]
/// assembled directly from the octuple.
QMatrix block_form(const BarthOctuple& o);

/// The net with blocks (1, A1, A2, B1, B2, C) on 12, 13, 14, 23, 24, 34.
/// Throws InvalidArgument when C is not symmetric.
QuadricNet net_of_octuple(const BarthOctuple& o);

struct OctupleNet {
  QMatrix product;                 // A~^T Q A~
  std::optional<QuadricNet> net;   // present when (i) holds
};

/// A~^T Q A~; when (i) holds also the net form, asserted equal to the
/// product.  With `strict`, throws BlockMismatch when (i) fails.
OctupleNet a_of_octuple(const BarthOctuple& o, bool strict = false);

/// Conditions: i_gamma (three identities), ii_gamma (surjectivity on P^3),
/// iii_gamma (h0 = 0), iv_gamma (rank a1^a2 = rank b1^b2 = 2), rank
/// (rank A = 2n+2).  ii_gamma and iii_gamma use the canonical presentation of
/// A~^T Q A~ and are INDETERMINATE unless i_gamma and rank pass.
VerificationReport gamma_conditions(const BarthOctuple& o, const VerifyOptions& opt);

/// Only the closed conditions (i) and (iv), exact.
bool closed_conditions_hold(const BarthOctuple& o);
bool iv_holds(const BarthOctuple& o);

struct DCertificate {
  bool precondition = false;  // [A1,B1] + a1^b1 = 0 and [A2,B2] + a2^b2 = 0
  std::string note;
  QMatrix d;         // 4n x 4n, nondegenerate (unipotent)
  QMatrix product;   // D A
  QMatrix expected;  // [[0,1,A1,A2],[-1,0,B1,B2],[0,0,X]]
  QMatrix x;         // 2n x 2n lower right block
  bool identity_holds = false;
  long rank_x = 0;
  long rank_a = 0;          // 2n + rank X
  bool iv = false;          // rank a1^a2 = rank b1^b2 = 2
  bool rank_certified = false;  // rank_a = 2n + 2
};

/// D = [[1,0,0,0],[0,1,0,0],[B1,-A1,1,0],[B2,-A2,0,1]] applied to A~^T Q A~.
/// Leaves identity_holds false when the precondition fails.
DCertificate d_certificate(const BarthOctuple& o);

struct HElement {
  QMatrix g;  // orthogonal n x n
  QMatrix m;  // [[s, t], [u, v]] with det 1
  void validate() const;
};

/// O(n): X -> g X g^T, x -> g x.  Sp(2): a_i -> s a_i + u b_i,
/// b_i -> t a_i + v b_i.
BarthOctuple h_action(const HElement& h, const BarthOctuple& o);
BarthOctuple on_action(const QMatrix& g, const BarthOctuple& o);
BarthOctuple sp_action(const QMatrix& m, const BarthOctuple& o);

/// The framed point with matrix A~.
GammaPoint gamma_of_octuple(const BarthOctuple& o);

}  // namespace monadforge
