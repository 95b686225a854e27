#pragma once

// Framed points gamma : H_n (x) V -> W with W carrying the standard
// symplectic form Q, the map gamma -> A(gamma) = gamma^T Q gamma, lifts of
// nets to framed points, and the GL(H_n) x Sp(W) action.

#include "monadforge/net.hpp"

namespace monadforge {

struct GammaPoint {
  std::size_t n = 0;
  std::size_t ambient = 4;
  QMatrix gamma;  // (2n+2) x (ambient n), column blocks by basis vector of V

  /// Throws InvalidArgument on a shape mismatch.
  void validate() const;
  QMatrix q() const { return standard_symplectic<Rational>(2 * n + 2); }

  friend bool operator==(const GammaPoint& a, const GammaPoint& b) {
    return a.n == b.n && a.ambient == b.ambient && a.gamma == b.gamma;
  }
};

struct GroupElementG {
  QMatrix g;  // invertible n x n
  QMatrix s;  // (2n+2) x (2n+2) with s^T Q s = Q

  /// Throws InvalidArgument unless g is invertible and s is symplectic.
  void validate() const;
};

bool is_symplectic(const QMatrix& s);

/// gamma^T Q gamma.
QMatrix a_of_gamma(const GammaPoint& gp);

/// Conditions (i) rank A = 2n+2, (ii) pr2(A) = 0, (iii) surjectivity of the
/// dual monad map, (iv) h0(E) = 0.  (iii) and (iv) use the presentation
/// (c, qW) = (gamma, Q) and are INDETERMINATE unless (i) and (ii) pass.
VerificationReport misp_verify(const GammaPoint& gp, const VerifyOptions& opt);

/// gamma = psi^{-1} c for the symplectic framing psi of qW, so that
/// a_of_gamma(gamma) = c^T qW c.
GammaPoint lift_from_net(const QPresentation& p);

/// (g, s) . gamma = s gamma (g^{-1} (x) I).
GammaPoint g_action(const GroupElementG& e, const GammaPoint& gp);

/// Block diagonal copy of g, one per basis vector of V.
QMatrix expand_h(const QMatrix& g, std::size_t ambient);

/// (g, diag(g, g, [[s, u], [t, v]])) for m = [[s, t], [u, v]].  Throws
/// InvalidArgument unless g g^T = I and det m = 1.
GroupElementG embed_h_in_g(const QMatrix& g, const QMatrix& m);

void require_orthogonal(const QMatrix& g);
void require_sl2(const QMatrix& m);

}  // namespace monadforge
