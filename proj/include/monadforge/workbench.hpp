#pragma once

// Dimension table, example generators, random group elements, seeded search
// for slice points and the orbit test.

#include <cstdint>
#include <map>

#include "monadforge/plane.hpp"
#include "monadforge/rng.hpp"

namespace monadforge {

struct DimsRow {
  long n = 0;
  long dim_s = 0;        // 3n(n+1)
  long eq_count = 0;     // 2n^2 - 5n + 3
  long lower_bound = 0;  // n^2 + 8n - 3
  long expected_i = 0;   // 8n - 3
  long w_dim = 0;        // 2n + 2
  long h1_e = 0;         // 2n - 2
  long fiber_claim = 0;  // 4n
};

DimsRow dims_row(long n);
/// Rows n = 1..n_max.  Throws InvalidArgument for n_max < 1.
std::vector<DimsRow> dims_report(long n_max);
/// binomial(a, b) for small arguments, zero outside 0 <= b <= a.
long binomial(long a, long b);

/// The n = 1 net with blocks 12 = 34 = 1 and the rest zero.
QuadricNet gen_null_correlation();

enum class Ansatz { Dense, Diagonal, Bilinear };
std::string to_string(Ansatz a);
Ansatz parse_ansatz(const std::string& s);

struct GenStats {
  std::size_t attempts = 0;
  std::size_t rejected_iv = 0;      // (iv) prefilter rejections
  std::size_t inconsistent = 0;     // linear solve had no solution
  std::size_t widened = 0;          // dense: b2 promoted to an unknown
};

struct GenResult {
  BarthOctuple octuple;
  GenStats stats;
};

struct GenOptions {
  Ansatz ansatz = Ansatz::Dense;
  std::int64_t entry_bound = 5;     // sampled integers lie in [-bound, bound]
  std::size_t max_attempts = 1000;
};

/// An octuple satisfying (i) exactly and passing the (iv) prefilter.
/// dense: sample A1, a1, b1, solve for B1; sample B2, a2, b2, solve for A2,
/// or for (A2, b2) when the system in A2 alone is inconsistent.
/// diagonal: diagonal A_i, B_i and b_i = lambda a_i.
/// bilinear: sample A1, A2, a1, a2 and draw (B1, B2, b1, b2) from the kernel
/// of the (linear) identities.
/// Draws come from stream `trial` of `seed`.  Throws InvalidArgument for
/// n < 2 and ResourceLimit once max_attempts is exhausted.
GenResult gen_closed_octuple(std::size_t n, std::uint64_t seed, std::uint64_t trial = 0, const GenOptions& opt = {});

/// Random symmetric integer matrix and vector.
QMatrix random_symmetric(CounterRng& rng, std::size_t n, std::int64_t bound);
QVec random_vector(CounterRng& rng, std::size_t n, std::int64_t bound);
/// Cayley transform of a random skew integer matrix (rational orthogonal).
QMatrix random_orthogonal(CounterRng& rng, std::size_t n);
/// Random 2 x 2 matrix of determinant 1.
QMatrix random_sl2(CounterRng& rng);
HElement random_h(CounterRng& rng, std::size_t n);
/// Cayley transform of J^{-1} S for a random symmetric S (symplectic for the
/// standard form J of size m).
QMatrix random_symplectic(CounterRng& rng, std::size_t m);
/// Random invertible integer matrix.
QMatrix random_invertible(CounterRng& rng, std::size_t n);

struct SearchConfig {
  std::size_t n = 2;
  std::uint64_t seed = 0;
  std::size_t trials = 1;
  Ansatz ansatz = Ansatz::Dense;
  Mode mode = Mode::Exact;
  std::uint64_t prime = kDefaultPrime;
  std::size_t threads = 1;
  GenOptions gen{};
};

struct SearchEntry {
  std::size_t trial = 0;
  bool generated = false;
  std::string error;  // when generation failed
  BarthOctuple octuple;
  GenStats gen;
  VerificationReport report;
  bool escalated = false;  // exact certification after the fast filter
};

struct VerdictCounts {
  std::size_t pass = 0, fail = 0, probable = 0, indeterminate = 0;
  void add(Verdict v);
};

struct SearchResult {
  SearchConfig config;
  std::vector<SearchEntry> entries;  // one per trial, in trial order
  std::size_t generated = 0;
  std::size_t closed_ok = 0;  // generated octuples satisfying (i) exactly
  std::size_t found = 0;      // overall PASS, or PROBABLE in fast mode
  GenStats gen_totals;
  std::map<std::string, VerdictCounts> per_condition;  // ordered by condition id
};

/// Runs the generator per trial, filters the open conditions modulo the
/// prime and, in exact mode, certifies survivors over Q.  The result depends
/// only on the config; the thread count does not change it.
SearchResult search_gamma_points(const SearchConfig& cfg);

struct OrbitReport {
  HElement h;
  bool actions_commute = false;          // O then Sp equals Sp then O
  bool minus_one_trivial = false;        // (-1, -1) fixes the octuple
  bool verdicts_invariant = false;
  bool cohomology_invariant = false;     // tables over [-6, 2] when rank is 2n+2
  bool congruence = false;               // A(h o) = expand(g) A(o) expand(g)^T
  bool j_equivariant = false;            // gamma_of_octuple intertwines with g_action
  bool psi_equivariant = false;          // psi_project intertwines with sigma_h_action
  bool fiber_dim_invariant = false;
  VerificationReport before, after;
  bool all() const {
    return actions_commute && minus_one_trivial && verdicts_invariant && cohomology_invariant && congruence &&
           j_equivariant && psi_equivariant && fiber_dim_invariant;
  }
};

OrbitReport orbit_test(const BarthOctuple& o, std::uint64_t seed, const VerifyOptions& opt);

}  // namespace monadforge
