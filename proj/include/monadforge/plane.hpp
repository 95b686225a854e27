#pragma once

// Restriction to the plane spanned by e2, e3, e4: the block map on nets, the
// projection of octuples to Sigma-points, the induced group action, and the
// linear system for the fibre over a Sigma-point.

#include "monadforge/slice.hpp"

namespace monadforge {

struct SigmaPoint {
  std::size_t n = 0;
  QMatrix B1, B2, C;  // symmetric n x n
  QVec a1, a2, b1, b2;

  /// Throws InvalidArgument on wrong shapes or non-symmetric B1, B2;
  /// C symmetry is checked only with `require_c_symmetric`.
  void validate(bool require_c_symmetric = true) const;

  friend bool operator==(const SigmaPoint& x, const SigmaPoint& y) {
    return x.n == y.n && x.B1 == y.B1 && x.B2 == y.B2 && x.C == y.C && x.a1 == y.a1 && x.a2 == y.a2 &&
           x.b1 == y.b1 && x.b2 == y.b2;
  }
};

/// Keeps the blocks on e2^e3, e2^e4, e3^e4 as the plane blocks 12, 13, 23.
QuadricNet phi_restrict(const QuadricNet& net);

/// (B1, B2, A1 B2 - B1 A2 + a1 b2^T - b1 a2^T, a1, a2, b1, b2).
SigmaPoint psi_project(const BarthOctuple& o);

/// Plane net with blocks (B1, B2, C).
QuadricNet plane_net(const SigmaPoint& s);

/// O(n) conjugates matrices and moves vectors; Sp(2) mixes the vectors and
/// fixes (B1, B2, C).
SigmaPoint sigma_h_action(const HElement& h, const SigmaPoint& s);

/// Coordinates on pairs of symmetric matrices: upper triangle of A1 row by
/// row, then the same for A2.  n(n+1) coordinates.
QVec sym_pair_coords(const QMatrix& a1, const QMatrix& a2);
std::pair<QMatrix, QMatrix> sym_pair_from_coords(const QVec& x, std::size_t n);

struct FiberSystem {
  QMatrix m;  // rows: strict upper [A1,B1], strict upper [A2,B2], all of A1 B2 - B1 A2
  QVec rhs;
};

/// Linear equations in (A1, A2):
///   [A1,B1] = -a1^b1, [A2,B2] = -a2^b2, A1 B2 - B1 A2 = C - a1 b2^T + b1 a2^T.
FiberSystem fiber_system(const SigmaPoint& s);

BarthOctuple assemble(const SigmaPoint& s, const QMatrix& a1, const QMatrix& a2);

struct FiberReport {
  std::size_t rows = 0, cols = 0;
  long rank = 0;
  bool consistent = false;
  std::optional<AffineSolution<Rational>> solution;
  long dim = -1;  // -1 when inconsistent
  long claimed_min_dim = 0;  // 4n
  std::size_t samples = 0;
  std::size_t closed_pass = 0;    // samples satisfying (i) exactly
  std::size_t open_pass = 0;      // samples with no FAIL on ii_gamma, iii_gamma
  std::size_t fully_pass = 0;     // samples with every condition PASS or PROBABLE
};

/// Solves the fibre system and checks `samples` points of the solution space
/// (particular + small random kernel combinations, seeded) against the
/// closed and open conditions.
FiberReport fiber_solve(const SigmaPoint& s, std::size_t samples, std::uint64_t seed, const VerifyOptions& opt);

/// Whether (A1, A2) solves the fibre system of s.
bool fiber_contains(const SigmaPoint& s, const QMatrix& a1, const QMatrix& a2);

/// Conditions (i) rank 2n+2, (ii) surjectivity on P^2, (iii) h0 = 0 for a
/// plane net.
VerificationReport mx_verify(const QuadricNet& pnet, const VerifyOptions& opt);

}  // namespace monadforge
