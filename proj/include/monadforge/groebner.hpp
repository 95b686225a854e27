#pragma once

// Buchberger's algorithm (degrevlex, normal selection strategy,
// Gebauer-Moeller pair criteria) and projective emptiness certificates.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "monadforge/linalg.hpp"
#include "monadforge/poly.hpp"

namespace monadforge {

struct GroebnerLimits {
  std::size_t max_basis = 5000;
  std::size_t max_pairs = 200000;
};

/// Full reduction of p modulo `basis` (any set of polynomials).
template <class T>
Poly<T> normal_form(Poly<T> p, const std::vector<Poly<T>>& basis) {
  Poly<T> r(p.nvars(), p.field());
  T c = p.field().zero();
  while (!p.is_zero()) {
    const Poly<T>* div = nullptr;
    for (const auto& g : basis) {
      if (!g.is_zero() && g.lm().divides(p.lm())) {
        div = &g;
        break;
      }
    }
    if (div) {
      c = p.lc() / div->lc();
      c = -c;
      Monomial q = p.lm() / div->lm();
      p.axpy(c, q, *div);
    } else {
      r.append_smaller(p.pop_lead());
    }
  }
  return r;
}

template <class T>
bool is_unit_basis(const std::vector<Poly<T>>& basis) {
  for (const auto& g : basis)
    if (!g.is_zero() && g.lm().degree() == 0) return true;
  return false;
}

/// Reduced Groebner basis, monic, sorted by increasing leading monomial.
/// Throws ResourceLimit when the basis or the processed pair count exceeds
/// the limits.
template <class T>
std::vector<Poly<T>> groebner(const Ideal<T>& ideal, const GroebnerLimits& lim = {}) {
  struct Pair {
    std::size_t i, j;
    Monomial l;
  };
  std::vector<Poly<T>> polys;
  std::vector<std::size_t> G;
  std::vector<Pair> B;
  std::size_t processed = 0;

  auto active = [&]() {
    std::vector<Poly<T>> a;
    a.reserve(G.size());
    for (auto g : G) a.push_back(polys[g]);
    return a;
  };

  auto update = [&](std::size_t h) {
    const Monomial& lh = polys[h].lm();
    std::vector<std::size_t> C = G, D;
    while (!C.empty()) {
      std::size_t g1 = C.front();
      C.erase(C.begin());
      Monomial l1 = lcm(lh, polys[g1].lm());
      bool keep = lh.coprime(polys[g1].lm());
      if (!keep) {
        keep = true;
        for (auto g2 : C)
          if (lcm(lh, polys[g2].lm()).divides(l1)) keep = false;
        for (auto g2 : D)
          if (lcm(lh, polys[g2].lm()).divides(l1)) keep = false;
      }
      if (keep) D.push_back(g1);
    }
    std::vector<Pair> Bn;
    for (const auto& p : B) {
      bool drop = lh.divides(p.l) && lcm(polys[p.i].lm(), lh) != p.l && lcm(lh, polys[p.j].lm()) != p.l;
      if (!drop) Bn.push_back(p);
    }
    for (auto g : D) {
      if (lh.coprime(polys[g].lm())) continue;
      Bn.push_back({g, h, lcm(polys[g].lm(), lh)});
    }
    B = std::move(Bn);
    std::vector<std::size_t> Gn;
    for (auto g : G)
      if (!lh.divides(polys[g].lm())) Gn.push_back(g);
    Gn.push_back(h);
    G = std::move(Gn);
    if (G.size() > lim.max_basis) throw ResourceLimit("Groebner basis exceeded " + std::to_string(lim.max_basis));
  };

  auto add = [&](Poly<T> f) {
    f = normal_form(std::move(f), active());
    if (f.is_zero()) return;
    polys.push_back(f.monic());
    update(polys.size() - 1);
  };

  for (const auto& g : ideal.gens) {
    if (g.nvars() != ideal.nvars) throw DimensionMismatch("generator in wrong number of variables");
    add(g);
    if (is_unit_basis(active())) break;
  }

  while (!B.empty() && !is_unit_basis(active())) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < B.size(); ++k) {
      const auto& a = B[k];
      const auto& b = B[best];
      if (a.l < b.l || (a.l == b.l && (a.j < b.j || (a.j == b.j && a.i < b.i)))) best = k;
    }
    Pair p = B[best];
    B.erase(B.begin() + static_cast<std::ptrdiff_t>(best));
    if (++processed > lim.max_pairs) throw ResourceLimit("S-pair count exceeded " + std::to_string(lim.max_pairs));
    const auto& f = polys[p.i];
    const auto& g = polys[p.j];
    Poly<T> s(f.nvars(), f.field());
    s.axpy(f.field().one(), p.l / f.lm(), f);
    s.axpy(-f.field().one(), p.l / g.lm(), g);
    add(std::move(s));
  }

  std::vector<Poly<T>> basis = active();
  if (is_unit_basis(basis)) {
    return {Poly<T>::constant(ideal.nvars, basis.front().field().one(), basis.front().field())};
  }
  // drop non-minimal elements, then reduce tails
  std::vector<Poly<T>> minimal;
  for (std::size_t a = 0; a < basis.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < basis.size() && !redundant; ++b) {
      if (a == b) continue;
      if (basis[b].lm().divides(basis[a].lm()) && (basis[b].lm() != basis[a].lm() || b < a)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[a]);
  }
  std::vector<Poly<T>> reduced;
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    std::vector<Poly<T>> others;
    for (std::size_t b = 0; b < minimal.size(); ++b)
      if (b != a) others.push_back(minimal[b]);
    Poly<T> p = minimal[a];
    Poly<T> head(p.nvars(), p.field());
    head.append_smaller(p.pop_lead());
    head += normal_form(std::move(p), others);
    reduced.push_back(head.monic());
  }
  std::sort(reduced.begin(), reduced.end(), [](const Poly<T>& x, const Poly<T>& y) { return x.lm() < y.lm(); });
  return reduced;
}

/// For a Groebner basis of a homogeneous ideal: the least d_i with x_i^{d_i}
/// in the ideal, for each variable, or nullopt when some variable has no pure
/// power in the ideal (the projective zero set is then non-empty).
template <class T>
std::optional<std::vector<unsigned>> nullstellensatz_exponents(const std::vector<Poly<T>>& basis,
                                                               std::size_t nvars) {
  if (basis.empty()) return std::nullopt;
  if (is_unit_basis(basis)) return std::vector<unsigned>(nvars, 0);
  std::vector<unsigned> lead(nvars, 0);
  for (const auto& g : basis) {
    int v = g.lm().pure_power_var();
    if (v < 0) continue;
    unsigned d = g.lm().e[std::size_t(v)];
    if (lead[std::size_t(v)] == 0 || d < lead[std::size_t(v)]) lead[std::size_t(v)] = d;
  }
  // every standard monomial has degree <= sum(lead_i - 1), so all monomials
  // of degree above that lie in the ideal
  unsigned bound = 1;
  for (std::size_t i = 0; i < nvars; ++i) {
    if (lead[i] == 0) return std::nullopt;
    bound += lead[i] - 1;
  }
  std::vector<unsigned> out(nvars, 0);
  const auto& f = basis.front().field();
  for (std::size_t i = 0; i < nvars; ++i) {
    // x_i^d in I forces a basis element x_i^e with e <= d, so start at lead[i]
    for (unsigned d = lead[i];; ++d) {
      if (d > bound) throw Error("pure power missing below the standard-monomial bound");
      auto p = Poly<T>::monomial(nvars, Monomial::var(i, std::uint16_t(d)), f.one(), f);
      if (normal_form(std::move(p), basis).is_zero()) {
        out[i] = d;
        break;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Witness search

std::vector<Rational> univariate_roots(const std::vector<Rational>& coeffs);
std::vector<Fp> univariate_roots(const std::vector<Fp>& coeffs);

namespace detail {

/// Coefficients c_0..c_d of the minimal polynomial of x_var modulo the ideal
/// with Groebner basis `basis` (zero-dimensional), or nullopt past max_degree.
template <class T>
std::optional<std::vector<T>> minimal_polynomial(const std::vector<Poly<T>>& basis, std::size_t nvars,
                                                 std::size_t var, std::size_t max_degree) {
  const auto& f = basis.front().field();
  std::vector<Poly<T>> nfs;
  std::map<std::uint64_t, std::size_t> rows;
  auto y = Poly<T>::variable(nvars, var, f);
  Poly<T> power = Poly<T>::constant(nvars, f.one(), f);
  for (std::size_t k = 0; k <= max_degree; ++k) {
    nfs.push_back(normal_form(power, basis));
    for (const auto& t : nfs.back().terms()) rows.emplace(t.m.key, rows.size());
    Matrix<T> m(rows.size(), nfs.size(), f);
    for (std::size_t c = 0; c < nfs.size(); ++c)
      for (const auto& t : nfs[c].terms()) m(rows.at(t.m.key), c) = t.c;
    auto rk = rank_kernel(m);
    if (!rk.kernel.empty()) return rk.kernel.front();
    power = power * y;
  }
  return std::nullopt;
}

template <class T>
std::optional<Vec<T>> solve_affine_system(const std::vector<Poly<T>>& eqs, std::vector<std::size_t> unknowns,
                                          Vec<T> point, std::size_t nvars, int& budget,
                                          const GroebnerLimits& lim) {
  if (budget-- <= 0) return std::nullopt;
  std::vector<Poly<T>> nz;
  for (const auto& e : eqs) {
    if (e.is_zero()) continue;
    if (e.lm().degree() == 0) return std::nullopt;
    nz.push_back(e);
  }
  if (nz.empty()) {
    // remaining unknowns are free; pick zero
    return point;
  }
  if (unknowns.empty()) return std::nullopt;
  std::vector<Poly<T>> basis;
  try {
    basis = groebner(Ideal<T>{nvars, nz}, lim);
  } catch (const ResourceLimit&) {
    return std::nullopt;
  }
  if (is_unit_basis(basis)) return std::nullopt;
  const auto& f = basis.front().field();

  std::vector<bool> pure(kMaxVars, false);
  for (const auto& g : basis) {
    int v = g.lm().pure_power_var();
    if (v >= 0) pure[std::size_t(v)] = true;
  }
  std::size_t y = unknowns.back();
  bool zero_dim = true;
  for (auto u : unknowns) {
    if (!pure[u]) {
      zero_dim = false;
      y = u;
    }
  }
  std::vector<std::size_t> rest;
  for (auto u : unknowns)
    if (u != y) rest.push_back(u);

  std::vector<T> values;
  if (zero_dim) {
    auto mp = minimal_polynomial(basis, nvars, y, 64);
    if (!mp) return std::nullopt;
    values = univariate_roots(*mp);
  } else {
    for (long c : {0L, 1L, -1L, 2L, -2L, 3L}) values.push_back(f.from_int(c));
  }
  for (const auto& v : values) {
    std::vector<Poly<T>> sub;
    for (const auto& g : basis) sub.push_back(g.specialize(y, v));
    Vec<T> p = point;
    p[y] = v;
    auto r = solve_affine_system(sub, rest, p, nvars, budget, lim);
    if (r) return r;
    if (budget <= 0) break;
  }
  return std::nullopt;
}

}  // namespace detail

/// Searches for a projective zero of homogeneous generators: first a small
/// integer grid, then each affine chart (last nonzero coordinate = 1), cutting
/// positive-dimensional pieces with coordinate slices and solving the
/// zero-dimensional remainder through minimal polynomials.  Returned points
/// have their last nonzero coordinate equal to 1.
template <class T>
std::optional<Vec<T>> find_projective_zero(const Ideal<T>& ideal, typename Poly<T>::Field f,
                                           int budget = 400, const GroebnerLimits& lim = {}) {
  const std::size_t nv = ideal.nvars;
  auto is_zero_of_all = [&](const Vec<T>& p) {
    for (const auto& g : ideal.gens)
      if (!is_zero(g.eval(p))) return false;
    return true;
  };

  const long grid[] = {0, 1, -1, 2, -2};
  for (std::size_t k = nv; k-- > 0;) {
    std::size_t count = 1;
    for (std::size_t j = 0; j < k; ++j) count *= 5;
    for (std::size_t idx = 0; idx < count; ++idx) {
      Vec<T> p(nv, f.zero());
      p[k] = f.one();
      std::size_t r = idx;
      for (std::size_t j = k; j-- > 0;) {
        p[j] = f.from_int(grid[r % 5]);
        r /= 5;
      }
      if (is_zero_of_all(p)) return p;
    }
  }

  for (std::size_t k = nv; k-- > 0;) {
    std::vector<Poly<T>> eqs;
    for (const auto& g : ideal.gens) {
      Poly<T> h = g.specialize(k, f.one());
      for (std::size_t j = k + 1; j < nv; ++j) h = h.specialize(j, f.zero());
      eqs.push_back(std::move(h));
    }
    std::vector<std::size_t> unknowns;
    for (std::size_t j = 0; j < k; ++j) unknowns.push_back(j);
    Vec<T> p(nv, f.zero());
    p[k] = f.one();
    auto r = detail::solve_affine_system(eqs, unknowns, p, nv, budget, lim);
    if (r && is_zero_of_all(*r)) return r;
    if (budget <= 0) break;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Certificates

enum class EmptinessKind { Empty, Nonempty, ProbableNonempty, Indeterminate };
enum class CertMode { Certified, Probabilistic };

std::string to_string(EmptinessKind k);
std::string to_string(CertMode m);

struct EmptinessCertificate {
  EmptinessKind kind = EmptinessKind::Indeterminate;
  CertMode mode = CertMode::Certified;
  std::vector<unsigned> exponents;     // EMPTY: x_i^{d_i} lies in the ideal
  std::vector<std::string> witness;    // projective coordinates, empty if none found
  std::string witness_field;           // "Q" or "F_p"
  std::uint64_t prime = 0;             // modulus of the computation in probabilistic mode
  std::size_t generators = 0;
  std::size_t basis_size = 0;
  std::string note;
};

struct EmptinessOptions {
  GroebnerLimits limits{};
  bool search_witness = true;
  int witness_budget = 400;
  std::uint64_t fallback_prime = 32003;  // small prime for the F_p witness fallback
};

/// Certified decision over Q.  EMPTY carries Nullstellensatz exponents;
/// otherwise the basis proves a zero over the algebraic closure and a witness
/// is searched over Q, then over a small F_p.
EmptinessCertificate projective_emptiness(const Ideal<Rational>& ideal, const EmptinessOptions& opt = {});

/// Probabilistic decision: the Groebner basis is computed modulo p.
EmptinessCertificate projective_emptiness_fast(const Ideal<Rational>& ideal, const PrimeField& field,
                                               const EmptinessOptions& opt = {});

/// Evaluates the generators at `points` random nonzero vectors over F_p and
/// returns how many of them are common zeros.
std::size_t count_random_common_zeros(const Ideal<Rational>& ideal, std::uint64_t prime, std::uint64_t seed,
                                      std::size_t points);

}  // namespace monadforge
