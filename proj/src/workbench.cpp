#include "monadforge/workbench.hpp"

#include <functional>
#include <thread>

namespace monadforge {

long binomial(long a, long b) {
  if (b < 0 || a < 0 || b > a) return 0;
  long r = 1;
  for (long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

DimsRow dims_row(long n) {
  return DimsRow{n, 3 * n * (n + 1), 2 * n * n - 5 * n + 3, n * n + 8 * n - 3, 8 * n - 3, 2 * n + 2, 2 * n - 2, 4 * n};
}

std::vector<DimsRow> dims_report(long n_max) {
  if (n_max < 1) throw InvalidArgument("n_max must be at least 1");
  std::vector<DimsRow> rows;
  for (long n = 1; n <= n_max; ++n) rows.push_back(dims_row(n));
  return rows;
}

QuadricNet gen_null_correlation() {
  QuadricNet net = QuadricNet::zero(1, 4);
  net.block(0, 1) = QMatrix::from_ints({{1}});
  net.block(2, 3) = QMatrix::from_ints({{1}});
  return net;
}

std::string to_string(Ansatz a) {
  switch (a) {
    case Ansatz::Dense:
      return "dense";
    case Ansatz::Diagonal:
      return "diagonal";
    case Ansatz::Bilinear:
      return "bilinear";
  }
  return "dense";
}

Ansatz parse_ansatz(const std::string& s) {
  if (s == "dense") return Ansatz::Dense;
  if (s == "diagonal") return Ansatz::Diagonal;
  if (s == "bilinear") return Ansatz::Bilinear;
  throw InvalidArgument("ansatz must be dense, diagonal or bilinear, got \"" + s + "\"");
}

QMatrix random_symmetric(CounterRng& rng, std::size_t n, std::int64_t bound) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Rational v(rng.range(-bound, bound));
      m(i, j) = v;
      m(j, i) = v;
    }
  return m;
}

QVec random_vector(CounterRng& rng, std::size_t n, std::int64_t bound) {
  QVec v(n);
  for (auto& x : v) x = Rational(rng.range(-bound, bound));
  return v;
}

QMatrix random_orthogonal(CounterRng& rng, std::size_t n) {
  QMatrix x(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Rational v(rng.range(-2, 2));
      x(i, j) = v;
      x(j, i) = -v;
    }
  // I - X is invertible for real skew X
  QMatrix g = *cayley(x);
  if (rng.below(2)) {
    // also reach the component of determinant -1
    for (std::size_t j = 0; j < n; ++j) g(0, j) = -g(0, j);
  }
  return g;
}

QMatrix random_sl2(CounterRng& rng) {
  for (;;) {
    Rational s(rng.nonzero(3)), t(rng.range(-3, 3)), u(rng.range(-3, 3));
    Rational v = (1 + t * u) / s;
    QMatrix m = QMatrix::from_rows({{s, t}, {u, v}});
    if (determinant(m) == Rational(1)) return m;
  }
}

HElement random_h(CounterRng& rng, std::size_t n) { return HElement{random_orthogonal(rng, n), random_sl2(rng)}; }

QMatrix random_symplectic(CounterRng& rng, std::size_t m) {
  QMatrix j = standard_symplectic<Rational>(m);
  for (;;) {
    QMatrix s = random_symmetric(rng, m, 2);
    // J^{-1} = -J
    QMatrix x = -(j * s);
    auto c = cayley(x);
    if (c) return *c;
  }
}

QMatrix random_invertible(CounterRng& rng, std::size_t n) {
  for (;;) {
    QMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) g(i, k) = Rational(rng.range(-3, 3));
    if (determinant(g) != Rational(0)) return g;
  }
}

namespace {

// Matrix of a linear map from `cols` coordinates, built column by column.
QMatrix linear_map_matrix(std::size_t cols, const std::function<QVec(const QVec&)>& f) {
  QVec e(cols, Rational(0));
  std::vector<QVec> columns;
  for (std::size_t k = 0; k < cols; ++k) {
    e.assign(cols, Rational(0));
    e[k] = 1;
    columns.push_back(f(e));
  }
  QMatrix m(columns.empty() ? 0 : columns[0].size(), cols);
  for (std::size_t k = 0; k < cols; ++k)
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, k) = columns[k][r];
  return m;
}

QMatrix sym_from(const QVec& x, std::size_t offset, std::size_t n) {
  QMatrix m(n, n);
  std::size_t k = offset;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      m(i, j) = x[k];
      m(j, i) = x[k];
      ++k;
    }
  return m;
}

void push_strict_upper(QVec& out, const QMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j) out.push_back(m(i, j));
}

// particular + random small combination of the kernel
QVec sample_solution(CounterRng& rng, const AffineSolution<Rational>& s) {
  QVec x = s.particular;
  for (const auto& v : s.kernel) {
    Rational c(rng.range(-3, 3));
    if (c == 0) continue;
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += c * v[i];
  }
  return x;
}

std::optional<BarthOctuple> try_dense(CounterRng& rng, std::size_t n, std::int64_t b, GenStats& st) {
  const std::size_t ns = n * (n + 1) / 2;
  BarthOctuple o = BarthOctuple::zero(n);
  o.A1 = random_symmetric(rng, n, b);
  o.a1 = random_vector(rng, n, b);
  o.b1 = random_vector(rng, n, b);
  // [A1, B1] = -a1^b1 in B1
  QMatrix m1 = linear_map_matrix(ns, [&](const QVec& x) {
    QVec out;
    push_strict_upper(out, commutator(o.A1, sym_from(x, 0, n)));
    return out;
  });
  QVec r1;
  push_strict_upper(r1, -wedge(o.a1, o.b1));
  auto s1 = solve_affine(m1, r1);
  if (!s1) {
    ++st.inconsistent;
    return std::nullopt;
  }
  o.B1 = sym_from(sample_solution(rng, *s1), 0, n);

  o.B2 = random_symmetric(rng, n, b);
  o.a2 = random_vector(rng, n, b);
  o.b2 = random_vector(rng, n, b);
  // [A2, B2] = -a2^b2 and [A1, B2] + [A2, B1] = -a1^b2 - a2^b1 in A2
  QMatrix m2 = linear_map_matrix(ns, [&](const QVec& x) {
    QMatrix a2 = sym_from(x, 0, n);
    QVec out;
    push_strict_upper(out, commutator(a2, o.B2));
    push_strict_upper(out, commutator(a2, o.B1));
    return out;
  });
  QVec r2;
  push_strict_upper(r2, -wedge(o.a2, o.b2));
  push_strict_upper(r2, -wedge(o.a1, o.b2) - wedge(o.a2, o.b1) - commutator(o.A1, o.B2));
  auto s2 = solve_affine(m2, r2);
  if (s2) {
    o.A2 = sym_from(sample_solution(rng, *s2), 0, n);
    return o;
  }
  // For n >= 3 the system in A2 alone is overdetermined (A2 = 1 lies in its
  // kernel).  Both identities are also linear in b2, so solve for (A2, b2).
  ++st.widened;
  QMatrix m3 = linear_map_matrix(ns + n, [&](const QVec& x) {
    QMatrix a2 = sym_from(x, 0, n);
    QVec v(x.begin() + ns, x.end());
    QVec out;
    push_strict_upper(out, commutator(a2, o.B2) + wedge(o.a2, v));
    push_strict_upper(out, commutator(a2, o.B1) + wedge(o.a1, v));
    return out;
  });
  QVec r3;
  push_strict_upper(r3, QMatrix(n, n));
  push_strict_upper(r3, -wedge(o.a2, o.b1) - commutator(o.A1, o.B2));
  auto s3 = solve_affine(m3, r3);
  if (!s3) {
    ++st.inconsistent;
    return std::nullopt;
  }
  QVec x = sample_solution(rng, *s3);
  o.A2 = sym_from(x, 0, n);
  o.b2.assign(x.begin() + ns, x.end());
  return o;
}

std::optional<BarthOctuple> try_diagonal(CounterRng& rng, std::size_t n, std::int64_t b) {
  BarthOctuple o = BarthOctuple::zero(n);
  for (std::size_t i = 0; i < n; ++i) {
    o.A1(i, i) = Rational(rng.range(-b, b));
    o.A2(i, i) = Rational(rng.range(-b, b));
    o.B1(i, i) = Rational(rng.range(-b, b));
    o.B2(i, i) = Rational(rng.range(-b, b));
  }
  o.a1 = random_vector(rng, n, b);
  o.a2 = random_vector(rng, n, b);
  // a common factor keeps a1^b2 + a2^b1 = 0
  Rational lambda(rng.nonzero(b));
  for (std::size_t i = 0; i < n; ++i) {
    o.b1[i] = lambda * o.a1[i];
    o.b2[i] = lambda * o.a2[i];
  }
  return o;
}

std::optional<BarthOctuple> try_bilinear(CounterRng& rng, std::size_t n, std::int64_t b, GenStats& st) {
  const std::size_t ns = n * (n + 1) / 2;
  BarthOctuple o = BarthOctuple::zero(n);
  o.A1 = random_symmetric(rng, n, b);
  o.A2 = random_symmetric(rng, n, b);
  o.a1 = random_vector(rng, n, b);
  o.a2 = random_vector(rng, n, b);
  // unknowns (B1, B2, b1, b2); the three identities are linear and homogeneous
  const std::size_t cols = 2 * ns + 2 * n;
  auto unpack = [&](const QVec& x) {
    QMatrix b1 = sym_from(x, 0, n), b2 = sym_from(x, ns, n);
    QVec v1(x.begin() + 2 * ns, x.begin() + 2 * ns + n), v2(x.begin() + 2 * ns + n, x.end());
    return std::make_tuple(b1, b2, v1, v2);
  };
  QMatrix m = linear_map_matrix(cols, [&](const QVec& x) {
    auto [b1, b2, v1, v2] = unpack(x);
    QVec out;
    push_strict_upper(out, commutator(o.A1, b1) + wedge(o.a1, v1));
    push_strict_upper(out, commutator(o.A2, b2) + wedge(o.a2, v2));
    push_strict_upper(out, commutator(o.A1, b2) + commutator(o.A2, b1) + wedge(o.a1, v2) + wedge(o.a2, v1));
    return out;
  });
  auto ker = rank_kernel(m).kernel;
  if (ker.empty()) {
    ++st.inconsistent;
    return std::nullopt;
  }
  QVec x(cols, Rational(0));
  for (const auto& v : ker) {
    Rational c(rng.range(-3, 3));
    if (c == 0) continue;
    for (std::size_t i = 0; i < cols; ++i) x[i] += c * v[i];
  }
  auto [b1, b2, v1, v2] = unpack(x);
  o.B1 = b1;
  o.B2 = b2;
  o.b1 = v1;
  o.b2 = v2;
  return o;
}

}  // namespace

GenResult gen_closed_octuple(std::size_t n, std::uint64_t seed, std::uint64_t trial, const GenOptions& opt) {
  if (n < 2) throw InvalidArgument("closed octuples with rank a1^a2 = 2 need n >= 2");
  CounterRng rng(seed, trial, 0x6f637475ULL);
  GenResult res;
  while (res.stats.attempts < opt.max_attempts) {
    ++res.stats.attempts;
    std::optional<BarthOctuple> o;
    switch (opt.ansatz) {
      case Ansatz::Dense:
        o = try_dense(rng, n, opt.entry_bound, res.stats);
        break;
      case Ansatz::Diagonal:
        o = try_diagonal(rng, n, opt.entry_bound);
        break;
      case Ansatz::Bilinear:
        o = try_bilinear(rng, n, opt.entry_bound, res.stats);
        break;
    }
    if (!o) continue;
    if (!iv_holds(*o)) {
      ++res.stats.rejected_iv;
      continue;
    }
    if (!closed_residuals(*o).all_zero()) throw Error("generator produced an octuple violating (i)");
    res.octuple = std::move(*o);
    return res;
  }
  throw ResourceLimit("no closed octuple after " + std::to_string(opt.max_attempts) + " attempts");
}

void VerdictCounts::add(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      ++pass;
      break;
    case Verdict::Fail:
      ++fail;
      break;
    case Verdict::Probable:
      ++probable;
      break;
    case Verdict::Indeterminate:
      ++indeterminate;
      break;
  }
}

namespace {

SearchEntry run_trial(const SearchConfig& cfg, std::size_t trial) {
  SearchEntry e;
  e.trial = trial;
  try {
    GenResult g = gen_closed_octuple(cfg.n, cfg.seed, trial, cfg.gen);
    e.generated = true;
    e.octuple = std::move(g.octuple);
    e.gen = g.stats;
  } catch (const ResourceLimit& ex) {
    e.error = ex.what();
    return e;
  }
  VerifyOptions fast;
  fast.mode = Mode::Fast;
  fast.prime = cfg.prime;
  e.report = gamma_conditions(e.octuple, fast);
  // Failures of the rank conditions are exact in both modes; a fast FAIL on
  // the open conditions is only a statement modulo p and is re-decided.
  bool exact_fail = false;
  for (const char* id : {"i_gamma", "iv_gamma", "rank"})
    exact_fail = exact_fail || e.report.verdict(id) == Verdict::Fail;
  if (cfg.mode == Mode::Exact && !exact_fail) {
    VerifyOptions exact;
    exact.mode = Mode::Exact;
    e.report = gamma_conditions(e.octuple, exact);
    e.escalated = true;
  }
  return e;
}

}  // namespace

SearchResult search_gamma_points(const SearchConfig& cfg) {
  SearchResult res;
  res.config = cfg;
  if (cfg.n < 2) return res;  // (iv) needs two independent vectors
  res.entries.resize(cfg.trials);
  const std::size_t workers = std::max<std::size_t>(1, std::min(cfg.threads, cfg.trials));
  if (workers == 1) {
    for (std::size_t t = 0; t < cfg.trials; ++t) res.entries[t] = run_trial(cfg, t);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t t = w; t < cfg.trials; t += workers) res.entries[t] = run_trial(cfg, t);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& ep : errors)
      if (ep) std::rethrow_exception(ep);
  }
  for (const auto& e : res.entries) {
    res.gen_totals.attempts += e.gen.attempts;
    res.gen_totals.rejected_iv += e.gen.rejected_iv;
    res.gen_totals.inconsistent += e.gen.inconsistent;
    res.gen_totals.widened += e.gen.widened;
    if (!e.generated) continue;
    ++res.generated;
    if (closed_residuals(e.octuple).all_zero()) ++res.closed_ok;
    for (const auto& c : e.report.conditions) res.per_condition[c.id].add(c.verdict);
    const Verdict v = e.report.overall();
    if (v == Verdict::Pass || (cfg.mode == Mode::Fast && v == Verdict::Probable)) ++res.found;
  }
  return res;
}

OrbitReport orbit_test(const BarthOctuple& o, std::uint64_t seed, const VerifyOptions& opt) {
  o.validate();
  CounterRng rng(seed, 0, 0x6f726269ULL);
  OrbitReport r;
  r.h = random_h(rng, o.n);
  const QMatrix& g = r.h.g;
  const QMatrix& m = r.h.m;
  BarthOctuple moved = h_action(r.h, o);

  r.actions_commute = sp_action(m, on_action(g, o)) == on_action(g, sp_action(m, o));
  const QMatrix minus_g = -QMatrix::identity(o.n);
  const QMatrix minus_m = -QMatrix::identity(2);
  r.minus_one_trivial = h_action(HElement{minus_g, minus_m}, o) == o;

  r.before = gamma_conditions(o, opt);
  r.after = gamma_conditions(moved, opt);
  r.verdicts_invariant = same_verdicts(r.before, r.after);

  QMatrix a0 = a_of_octuple(o).product;
  QMatrix a1 = a_of_octuple(moved).product;
  QMatrix big = expand_h(g, 4);
  r.congruence = a1 == congruence(a0, big);

  const long want = 2 * static_cast<long>(o.n) + 2;
  if (static_cast<long>(rank(a0)) == want && static_cast<long>(rank(a1)) == want) {
    auto t0 = cohomology_table(presentation_of_flat(a0, o.n, 4), -6, 2);
    auto t1 = cohomology_table(presentation_of_flat(a1, o.n, 4), -6, 2);
    r.cohomology_invariant = t0 == t1;
  } else {
    // without rank 2n+2 there is no monad; invariance of the rank is what remains
    r.cohomology_invariant = rank(a0) == rank(a1);
  }

  GroupElementG e = embed_h_in_g(g, m);
  r.j_equivariant = gamma_of_octuple(moved) == g_action(e, gamma_of_octuple(o));
  r.psi_equivariant = psi_project(moved) == sigma_h_action(r.h, psi_project(o));

  FiberSystem f0 = fiber_system(psi_project(o));
  FiberSystem f1 = fiber_system(psi_project(moved));
  auto s0 = solve_affine(f0.m, f0.rhs);
  auto s1 = solve_affine(f1.m, f1.rhs);
  r.fiber_dim_invariant = s0.has_value() == s1.has_value() && (!s0 || s0->dim() == s1->dim());
  return r;
}

}  // namespace monadforge
