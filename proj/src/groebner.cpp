#include "monadforge/groebner.hpp"

#include <algorithm>
#include <cstdlib>

#include "monadforge/rng.hpp"

namespace monadforge {

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

namespace {

constexpr std::uint64_t kDivisorCap = 1000000000000ULL;  // 1e12

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

template <class T>
T horner(const std::vector<T>& c, const T& x, const T& zero) {
  T acc = zero;
  for (std::size_t i = c.size(); i-- > 0;) {
    acc *= x;
    acc += c[i];
  }
  return acc;
}

}  // namespace

std::vector<Rational> univariate_roots(const std::vector<Rational>& coeffs) {
  std::vector<Integer> a;
  Integer den = 1;
  for (const auto& c : coeffs) den = lcm(den, Integer(c.get_den()));
  for (const auto& c : coeffs) a.push_back(Integer(c.get_num() * (den / c.get_den())));
  while (!a.empty() && a.back() == 0) a.pop_back();
  std::vector<Rational> roots;
  if (a.size() <= 1) return roots;
  if (a.front() == 0) {
    roots.emplace_back(0);
    while (a.front() == 0) a.erase(a.begin());
  }
  if (a.size() <= 1) return roots;
  Integer a0 = abs(a.front()), ad = abs(a.back());
  if (a0 > Integer(std::to_string(kDivisorCap)) || ad > Integer(std::to_string(kDivisorCap))) return roots;

  std::vector<Rational> qa;
  for (const auto& x : a) qa.emplace_back(x);
  for (auto p : divisors(a0.get_ui())) {
    for (auto q : divisors(ad.get_ui())) {
      for (int sign : {1, -1}) {
        Rational r(Integer(std::to_string(p)) * sign, Integer(std::to_string(q)));
        r.canonicalize();
        if (sgn(horner(qa, r, Rational(0))) != 0) continue;
        if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
      }
    }
  }
  return roots;
}

std::vector<Fp> univariate_roots(const std::vector<Fp>& coeffs) {
  std::vector<Fp> roots;
  if (coeffs.empty()) return roots;
  const std::uint64_t p = coeffs.front().modulus();
  const Fp zero = Fp::from_raw(0, p);
  if (p <= 1000000) {
    for (std::uint64_t x = 0; x < p; ++x) {
      Fp v = Fp::from_raw(x, p);
      if (horner(coeffs, v, zero).is_zero()) roots.push_back(v);
    }
  } else {
    for (long x : {0L, 1L, -1L, 2L, -2L, 3L, -3L}) {
      Fp v(x, p);
      if (horner(coeffs, v, zero).is_zero()) roots.push_back(v);
    }
  }
  return roots;
}

std::string to_string(EmptinessKind k) {
  switch (k) {
    case EmptinessKind::Empty:
      return "EMPTY";
    case EmptinessKind::Nonempty:
      return "NONEMPTY";
    case EmptinessKind::ProbableNonempty:
      return "PROBABLE-NONEMPTY";
    case EmptinessKind::Indeterminate:
      return "INDETERMINATE";
  }
  return "INDETERMINATE";
}

std::string to_string(CertMode m) { return m == CertMode::Certified ? "certified" : "probabilistic"; }

namespace {

void require_homogeneous(const Ideal<Rational>& ideal) {
  if (!ideal.homogeneous()) throw InvalidArgument("projective emptiness needs homogeneous generators");
}

template <class T>
std::vector<std::string> coords(const Vec<T>& v) {
  std::vector<std::string> s;
  for (const auto& x : v) s.push_back(to_string(x));
  return s;
}

}  // namespace

EmptinessCertificate projective_emptiness(const Ideal<Rational>& ideal, const EmptinessOptions& opt) {
  require_homogeneous(ideal);
  EmptinessCertificate cert;
  cert.mode = CertMode::Certified;
  cert.generators = ideal.gens.size();
  std::vector<QPoly> basis;
  try {
    basis = groebner(ideal, opt.limits);
  } catch (const ResourceLimit& e) {
    cert.kind = EmptinessKind::Indeterminate;
    cert.note = e.what();
    return cert;
  }
  cert.basis_size = basis.size();
  if (auto ex = nullstellensatz_exponents(basis, ideal.nvars)) {
    cert.kind = EmptinessKind::Empty;
    cert.exponents = *ex;
    return cert;
  }
  cert.note = "leading monomials miss a pure power: the zero set is non-empty over the algebraic closure";
  if (!opt.search_witness) {
    cert.kind = EmptinessKind::ProbableNonempty;
    return cert;
  }
  if (auto w = find_projective_zero(ideal, RationalField{}, opt.witness_budget, opt.limits)) {
    cert.kind = EmptinessKind::Nonempty;
    cert.witness = coords(*w);
    cert.witness_field = "Q";
    return cert;
  }
  cert.kind = EmptinessKind::ProbableNonempty;
  std::uint64_t p = opt.fallback_prime;
  for (int attempt = 0; attempt < 5; ++attempt, p = next_prime(p + 1)) {
    PrimeField f{p};
    Ideal<Fp> r;
    try {
      r = reduce(ideal, f);
    } catch (const BadReduction&) {
      continue;
    }
    if (auto w = find_projective_zero(r, f, opt.witness_budget, opt.limits)) {
      cert.witness = coords(*w);
      cert.witness_field = f.name();
      cert.prime = p;
      cert.note += "; no rational point found, witness is over " + f.name();
      return cert;
    }
  }
  cert.note += "; no rational or small-prime witness found";
  return cert;
}

EmptinessCertificate projective_emptiness_fast(const Ideal<Rational>& ideal, const PrimeField& field,
                                               const EmptinessOptions& opt) {
  require_homogeneous(ideal);
  EmptinessCertificate cert;
  cert.mode = CertMode::Probabilistic;
  cert.prime = field.p;
  cert.generators = ideal.gens.size();
  Ideal<Fp> r;
  try {
    r = reduce(ideal, field);
  } catch (const BadReduction& e) {
    cert.kind = EmptinessKind::Indeterminate;
    cert.note = e.what();
    return cert;
  }
  std::vector<FpPoly> basis;
  try {
    basis = groebner(r, opt.limits);
  } catch (const ResourceLimit& e) {
    cert.kind = EmptinessKind::Indeterminate;
    cert.note = e.what();
    return cert;
  }
  cert.basis_size = basis.size();
  if (auto ex = nullstellensatz_exponents(basis, ideal.nvars)) {
    cert.kind = EmptinessKind::Empty;
    cert.exponents = *ex;
    cert.note = "empty modulo " + std::to_string(field.p);
    return cert;
  }
  cert.kind = EmptinessKind::ProbableNonempty;
  cert.note = "non-empty modulo " + std::to_string(field.p);
  if (opt.search_witness) {
    if (auto w = find_projective_zero(r, field, opt.witness_budget / 4, opt.limits)) {
      cert.witness = coords(*w);
      cert.witness_field = field.name();
    }
  }
  return cert;
}

std::size_t count_random_common_zeros(const Ideal<Rational>& ideal, std::uint64_t prime, std::uint64_t seed,
                                      std::size_t points) {
  PrimeField f{prime};
  Ideal<Fp> r = reduce(ideal, f);
  CounterRng rng(seed, prime, 0x5107);
  std::size_t hits = 0;
  for (std::size_t k = 0; k < points; ++k) {
    Vec<Fp> pt;
    bool nonzero = false;
    for (std::size_t i = 0; i < ideal.nvars; ++i) {
      pt.push_back(Fp::from_raw(rng.below(prime), prime));
      nonzero = nonzero || !pt.back().is_zero();
    }
    if (!nonzero) {
      --k;
      continue;
    }
    bool all = true;
    for (const auto& g : r.gens) {
      if (!g.eval(pt).is_zero()) {
        all = false;
        break;
      }
    }
    if (all) ++hits;
  }
  return hits;
}

}  // namespace monadforge
