#include "monadforge/plane.hpp"

#include "monadforge/rng.hpp"

namespace monadforge {

void SigmaPoint::validate(bool require_c_symmetric) const {
  if (n == 0) throw InvalidArgument("n must be positive");
  const std::pair<const char*, const QMatrix*> mats[] = {{"B1", &B1}, {"B2", &B2}, {"C", &C}};
  for (auto [name, m] : mats) {
    if (m->rows() != n || m->cols() != n) throw InvalidArgument(std::string(name) + " is " + m->shape());
  }
  if (!B1.is_symmetric()) throw InvalidArgument("B1 is not symmetric");
  if (!B2.is_symmetric()) throw InvalidArgument("B2 is not symmetric");
  if (require_c_symmetric && !C.is_symmetric()) throw InvalidArgument("C is not symmetric");
  const std::pair<const char*, const QVec*> vecs[] = {{"a1", &a1}, {"a2", &a2}, {"b1", &b1}, {"b2", &b2}};
  for (auto [name, v] : vecs)
    if (v->size() != n) throw InvalidArgument(std::string(name) + " has length " + std::to_string(v->size()));
}

QuadricNet phi_restrict(const QuadricNet& net) {
  net.validate();
  if (net.ambient != 4) throw InvalidArgument("phi_restrict needs a net on P^3");
  QuadricNet p = QuadricNet::zero(net.n, 3);
  p.block(0, 1) = net.block(1, 2);
  p.block(0, 2) = net.block(1, 3);
  p.block(1, 2) = net.block(2, 3);
  return p;
}

SigmaPoint psi_project(const BarthOctuple& o) {
  return SigmaPoint{o.n, o.B1, o.B2, c_of_octuple(o), o.a1, o.a2, o.b1, o.b2};
}

QuadricNet plane_net(const SigmaPoint& s) {
  s.validate();
  QuadricNet p;
  p.n = s.n;
  p.ambient = 3;
  p.blocks = {s.B1, s.B2, s.C};
  return p;
}

SigmaPoint sigma_h_action(const HElement& h, const SigmaPoint& s) {
  s.validate(false);
  h.validate();
  if (h.g.rows() != s.n) throw DimensionMismatch("g is " + h.g.shape() + " for n=" + std::to_string(s.n));
  const QMatrix& g = h.g;
  SigmaPoint r{s.n, congruence(s.B1, g), congruence(s.B2, g), congruence(s.C, g), g * s.a1, g * s.a2, g * s.b1,
               g * s.b2};
  const Rational &sv = h.m(0, 0), &t = h.m(0, 1), &u = h.m(1, 0), &v = h.m(1, 1);
  SigmaPoint out = r;
  for (std::size_t i = 0; i < s.n; ++i) {
    out.a1[i] = sv * r.a1[i] + u * r.b1[i];
    out.b1[i] = t * r.a1[i] + v * r.b1[i];
    out.a2[i] = sv * r.a2[i] + u * r.b2[i];
    out.b2[i] = t * r.a2[i] + v * r.b2[i];
  }
  return out;
}

QVec sym_pair_coords(const QMatrix& a1, const QMatrix& a2) {
  const std::size_t n = a1.rows();
  QVec x;
  x.reserve(n * (n + 1));
  for (const QMatrix* m : {&a1, &a2})
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) x.push_back((*m)(i, j));
  return x;
}

std::pair<QMatrix, QMatrix> sym_pair_from_coords(const QVec& x, std::size_t n) {
  if (x.size() != n * (n + 1)) throw DimensionMismatch("expected " + std::to_string(n * (n + 1)) + " coordinates");
  QMatrix a1(n, n), a2(n, n);
  std::size_t k = 0;
  for (QMatrix* m : {&a1, &a2})
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        (*m)(i, j) = x[k];
        (*m)(j, i) = x[k];
        ++k;
      }
  return {a1, a2};
}

namespace {

// Left-hand side of the fibre equations at (A1, A2), in row order.
QVec fiber_lhs(const SigmaPoint& s, const QMatrix& a1, const QMatrix& a2) {
  const std::size_t n = s.n;
  QVec out;
  QMatrix e1 = commutator(a1, s.B1);
  QMatrix e2 = commutator(a2, s.B2);
  QMatrix e3 = a1 * s.B2 - s.B1 * a2;
  for (const QMatrix* m : {&e1, &e2})
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) out.push_back((*m)(i, j));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.push_back(e3(i, j));
  return out;
}

}  // namespace

FiberSystem fiber_system(const SigmaPoint& s) {
  s.validate(false);
  const std::size_t n = s.n;
  const std::size_t cols = n * (n + 1);
  const std::size_t rows = n * (n - 1) + n * n;
  FiberSystem sys{QMatrix(rows, cols), QVec()};
  QVec e(cols);
  for (std::size_t k = 0; k < cols; ++k) {
    e.assign(cols, Rational(0));
    e[k] = 1;
    auto [a1, a2] = sym_pair_from_coords(e, n);
    QVec col = fiber_lhs(s, a1, a2);
    for (std::size_t r = 0; r < rows; ++r) sys.m(r, k) = col[r];
  }
  QMatrix w1 = -wedge(s.a1, s.b1);
  QMatrix w2 = -wedge(s.a2, s.b2);
  QMatrix c3 = s.C - outer(s.a1, s.b2) + outer(s.b1, s.a2);
  for (const QMatrix* m : {&w1, &w2})
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) sys.rhs.push_back((*m)(i, j));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) sys.rhs.push_back(c3(i, j));
  return sys;
}

BarthOctuple assemble(const SigmaPoint& s, const QMatrix& a1, const QMatrix& a2) {
  return BarthOctuple{s.n, a1, a2, s.B1, s.B2, s.a1, s.a2, s.b1, s.b2};
}

bool fiber_contains(const SigmaPoint& s, const QMatrix& a1, const QMatrix& a2) {
  FiberSystem sys = fiber_system(s);
  return solves(sys.m, sym_pair_coords(a1, a2), sys.rhs);
}

FiberReport fiber_solve(const SigmaPoint& s, std::size_t samples, std::uint64_t seed, const VerifyOptions& opt) {
  FiberSystem sys = fiber_system(s);
  FiberReport rep;
  rep.rows = sys.m.rows();
  rep.cols = sys.m.cols();
  rep.rank = static_cast<long>(rank(sys.m));
  rep.claimed_min_dim = 4 * static_cast<long>(s.n);
  rep.solution = solve_affine(sys.m, sys.rhs);
  rep.consistent = rep.solution.has_value();
  if (!rep.consistent) return rep;
  rep.dim = static_cast<long>(rep.solution->dim());

  CounterRng rng(seed, 0, 0x66696265ULL);
  for (std::size_t k = 0; k < samples; ++k) {
    QVec x = rep.solution->particular;
    for (const auto& v : rep.solution->kernel) {
      Rational c(rng.range(-3, 3));
      for (std::size_t i = 0; i < x.size(); ++i) x[i] += c * v[i];
    }
    auto [a1, a2] = sym_pair_from_coords(x, s.n);
    BarthOctuple o = assemble(s, a1, a2);
    ++rep.samples;
    if (!closed_residuals(o).all_zero()) continue;
    ++rep.closed_pass;
    VerificationReport r = gamma_conditions(o, opt);
    if (r.verdict("ii_gamma") != Verdict::Fail && r.verdict("iii_gamma") != Verdict::Fail &&
        r.verdict("ii_gamma") != Verdict::Indeterminate && r.verdict("iii_gamma") != Verdict::Indeterminate)
      ++rep.open_pass;
    if (r.overall() != Verdict::Fail) {
      bool all = true;
      for (const auto& c : r.conditions)
        if (c.verdict != Verdict::Pass && c.verdict != Verdict::Probable) all = false;
      if (all) ++rep.fully_pass;
    }
  }
  return rep;
}

VerificationReport mx_verify(const QuadricNet& pnet, const VerifyOptions& opt) {
  if (pnet.ambient != 3) throw InvalidArgument("mx_verify needs a plane net");
  return barth_verify(pnet, opt);
}

}  // namespace monadforge
