#include "monadforge/slice.hpp"

namespace monadforge {

BarthOctuple BarthOctuple::zero(std::size_t n) {
  QMatrix z(n, n);
  QVec v(n);
  return BarthOctuple{n, z, z, z, z, v, v, v, v};
}

void BarthOctuple::validate() const {
  if (n == 0) throw InvalidArgument("n must be positive");
  const std::pair<const char*, const QMatrix*> mats[] = {{"A1", &A1}, {"A2", &A2}, {"B1", &B1}, {"B2", &B2}};
  for (auto [name, m] : mats) {
    if (m->rows() != n || m->cols() != n) throw InvalidArgument(std::string(name) + " is " + m->shape());
    if (!m->is_symmetric()) throw InvalidArgument(std::string(name) + " is not symmetric");
  }
  const std::pair<const char*, const QVec*> vecs[] = {{"a1", &a1}, {"a2", &a2}, {"b1", &b1}, {"b2", &b2}};
  for (auto [name, v] : vecs)
    if (v->size() != n) throw InvalidArgument(std::string(name) + " has length " + std::to_string(v->size()));
}

QMatrix outer(const QVec& a, const QVec& b) {
  QMatrix m(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) m(i, j) = a[i] * b[j];
  return m;
}

QMatrix wedge(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("wedge of vectors of different lengths");
  return outer(a, b) - outer(b, a);
}

QMatrix commutator(const QMatrix& x, const QMatrix& y) { return x * y - y * x; }

QMatrix tilde_matrix(const BarthOctuple& o) {
  o.validate();
  const std::size_t n = o.n;
  QMatrix t(2 * n + 2, 4 * n);
  const QMatrix id = QMatrix::identity(n);
  t.set_block(n, 0, -id);
  t.set_block(0, n, id);
  t.set_block(0, 2 * n, o.A1);
  t.set_block(0, 3 * n, o.A2);
  t.set_block(n, 2 * n, o.B1);
  t.set_block(n, 3 * n, o.B2);
  for (std::size_t h = 0; h < n; ++h) {
    t(2 * n, 2 * n + h) = o.a1[h];
    t(2 * n, 3 * n + h) = o.a2[h];
    t(2 * n + 1, 2 * n + h) = o.b1[h];
    t(2 * n + 1, 3 * n + h) = o.b2[h];
  }
  return t;
}

QMatrix c_of_octuple(const BarthOctuple& o) {
  o.validate();
  return o.A1 * o.B2 - o.B1 * o.A2 + outer(o.a1, o.b2) - outer(o.b1, o.a2);
}

ClosedResiduals closed_residuals(const BarthOctuple& o) {
  QMatrix c = c_of_octuple(o);
  return {commutator(o.A1, o.B1) + wedge(o.a1, o.b1), commutator(o.A2, o.B2) + wedge(o.a2, o.b2),
          c - c.transpose()};
}

QMatrix pencil_residual(const BarthOctuple& o, const Rational& t) {
  o.validate();
  QMatrix a = o.A1 + o.A2 * t;
  QMatrix b = o.B1 + o.B2 * t;
  QVec x(o.n), y(o.n);
  for (std::size_t i = 0; i < o.n; ++i) {
    x[i] = o.a1[i] + t * o.a2[i];
    y[i] = o.b1[i] + t * o.b2[i];
  }
  return commutator(a, b) + wedge(x, y);
}

QMatrix block_form(const BarthOctuple& o) {
  o.validate();
  const std::size_t n = o.n;
  const QMatrix id = QMatrix::identity(n);
  QMatrix c = c_of_octuple(o);
  QMatrix m(4 * n, 4 * n);
  auto put = [&](std::size_t i, std::size_t j, const QMatrix& b) { m.set_block(i * n, j * n, b); };
  put(0, 1, id);
  put(0, 2, o.A1);
  put(0, 3, o.A2);
  put(1, 0, -id);
  put(1, 2, o.B1);
  put(1, 3, o.B2);
  put(2, 0, -o.A1);
  put(2, 1, -o.B1);
  put(2, 2, commutator(o.A1, o.B1) + wedge(o.a1, o.b1));
  put(2, 3, c);
  put(3, 0, -o.A2);
  put(3, 1, -o.B2);
  put(3, 2, -c.transpose());
  put(3, 3, commutator(o.A2, o.B2) + wedge(o.a2, o.b2));
  return m;
}

QuadricNet net_of_octuple(const BarthOctuple& o) {
  o.validate();
  QMatrix c = c_of_octuple(o);
  if (!c.is_symmetric()) throw InvalidArgument("C is not symmetric");
  QuadricNet net;
  net.n = o.n;
  net.ambient = 4;
  net.blocks = {QMatrix::identity(o.n), o.A1, o.A2, o.B1, o.B2, c};
  return net;
}

OctupleNet a_of_octuple(const BarthOctuple& o, bool strict) {
  QMatrix t = tilde_matrix(o);
  OctupleNet out{t.transpose() * standard_symplectic<Rational>(2 * o.n + 2) * t, std::nullopt};
  if (closed_residuals(o).all_zero()) {
    QuadricNet net = net_of_octuple(o);
    if (flatten(net) != out.product) throw Error("net form of an octuple differs from its product form");
    out.net = std::move(net);
  } else if (strict) {
    throw BlockMismatch("octuple violates (i); A~^T Q A~ is not a net");
  }
  return out;
}

bool iv_holds(const BarthOctuple& o) {
  return rank(wedge(o.a1, o.a2)) == 2 && rank(wedge(o.b1, o.b2)) == 2;
}

bool closed_conditions_hold(const BarthOctuple& o) { return closed_residuals(o).all_zero() && iv_holds(o); }

VerificationReport gamma_conditions(const BarthOctuple& o, const VerifyOptions& opt) {
  o.validate();
  VerificationReport rep;
  rep.subject = "octuple";
  rep.n = o.n;
  rep.ambient = 4;
  rep.mode = opt.mode;
  rep.prime = opt.mode == Mode::Fast ? opt.prime : 0;

  ClosedResiduals res = closed_residuals(o);
  std::string bad;
  if (!res.r1.is_zero()) bad += " [A1,B1]+a1^b1 != 0;";
  if (!res.r2.is_zero()) bad += " [A2,B2]+a2^b2 != 0;";
  if (!res.r3.is_zero()) bad += " C is not symmetric;";
  if (!bad.empty()) bad.pop_back();
  ConditionResult ci{"i_gamma", "(i)_Γ pencil identity", bad.empty() ? Verdict::Pass : Verdict::Fail,
                     bad.empty() ? "all three identities hold" : "violated:" + bad, std::nullopt, std::nullopt};

  const long ra = static_cast<long>(rank(wedge(o.a1, o.a2)));
  const long rb = static_cast<long>(rank(wedge(o.b1, o.b2)));
  ConditionResult civ{"iv_gamma", "(iv)_Γ rank a1^a2 = rank b1^b2 = 2",
                      ra == 2 && rb == 2 ? Verdict::Pass : Verdict::Fail,
                      "rank a1^a2 = " + std::to_string(ra) + ", rank b1^b2 = " + std::to_string(rb), std::nullopt,
                      std::nullopt};

  QMatrix t = tilde_matrix(o);
  QMatrix a = t.transpose() * standard_symplectic<Rational>(2 * o.n + 2) * t;
  const long want = 2 * static_cast<long>(o.n) + 2;
  const long rk = static_cast<long>(rank(a));
  ConditionResult crk{"rank", "rank A = 2n+2", rk == want ? Verdict::Pass : Verdict::Fail,
                      "rank " + std::to_string(rk) + ", expected " + std::to_string(want), rk, std::nullopt};

  const std::string l2 = "(ii)_Γ dual monad map surjective on P^3";
  const std::string l3 = "(iii)_Γ h0(E) = 0";
  rep.conditions.push_back(ci);
  if (ci.verdict == Verdict::Pass && crk.verdict == Verdict::Pass) {
    QPresentation p = presentation_of_flat(a, o.n, 4);
    rep.conditions.push_back(surjectivity_condition(p, opt, "ii_gamma", l2));
    rep.conditions.push_back(h0_condition(p, opt, "iii_gamma", l3));
  } else {
    const std::string why = "not evaluated: needs (i)_Γ and rank 2n+2";
    rep.conditions.push_back({"ii_gamma", l2, Verdict::Indeterminate, why, std::nullopt, std::nullopt});
    rep.conditions.push_back({"iii_gamma", l3, Verdict::Indeterminate, why, std::nullopt, std::nullopt});
  }
  rep.conditions.push_back(civ);
  rep.conditions.push_back(crk);
  return rep;
}

DCertificate d_certificate(const BarthOctuple& o) {
  o.validate();
  const std::size_t n = o.n;
  DCertificate cert;
  ClosedResiduals res = closed_residuals(o);
  cert.precondition = res.r1.is_zero() && res.r2.is_zero();
  cert.iv = iv_holds(o);
  if (!cert.precondition) {
    cert.note = "precondition fails: [A_i,B_i] + a_i^b_i != 0";
    return cert;
  }
  const QMatrix id = QMatrix::identity(n);
  cert.d = QMatrix::identity(4 * n);
  cert.d.set_block(2 * n, 0, o.B1);
  cert.d.set_block(2 * n, n, -o.A1);
  cert.d.set_block(3 * n, 0, o.B2);
  cert.d.set_block(3 * n, n, -o.A2);

  QMatrix t = tilde_matrix(o);
  QMatrix a = t.transpose() * standard_symplectic<Rational>(2 * n + 2) * t;
  cert.product = cert.d * a;

  cert.x = QMatrix(2 * n, 2 * n);
  cert.x.set_block(0, 0, wedge(o.a1, o.b1));
  cert.x.set_block(0, n, outer(o.a1, o.b2) - outer(o.b1, o.a2));
  cert.x.set_block(n, 0, outer(o.a2, o.b1) - outer(o.b2, o.a1));
  cert.x.set_block(n, n, wedge(o.a2, o.b2));
  cert.expected = QMatrix(4 * n, 4 * n);
  cert.expected.set_block(0, n, id);
  cert.expected.set_block(0, 2 * n, o.A1);
  cert.expected.set_block(0, 3 * n, o.A2);
  cert.expected.set_block(n, 0, -id);
  cert.expected.set_block(n, 2 * n, o.B1);
  cert.expected.set_block(n, 3 * n, o.B2);
  cert.expected.set_block(2 * n, 2 * n, cert.x);
  cert.identity_holds = cert.product == cert.expected;

  // the top 2n rows have an identity minor in the first 2n columns, so
  // rank = 2n + rank of the Schur complement, which is X
  cert.rank_x = static_cast<long>(rank(cert.x));
  cert.rank_a = 2 * static_cast<long>(n) + cert.rank_x;
  cert.rank_certified = cert.identity_holds && cert.rank_a == 2 * static_cast<long>(n) + 2;
  if (!cert.identity_holds) cert.note = "D A differs from the expected block matrix";
  else if (!cert.rank_certified) cert.note = "rank X = " + std::to_string(cert.rank_x) + ", not 2";
  return cert;
}

void HElement::validate() const {
  require_orthogonal(g);
  require_sl2(m);
}

BarthOctuple on_action(const QMatrix& g, const BarthOctuple& o) {
  o.validate();
  require_orthogonal(g);
  if (g.rows() != o.n) throw DimensionMismatch("g is " + g.shape() + " for n=" + std::to_string(o.n));
  return BarthOctuple{o.n,       congruence(o.A1, g), congruence(o.A2, g), congruence(o.B1, g), congruence(o.B2, g),
                      g * o.a1,  g * o.a2,            g * o.b1,            g * o.b2};
}

BarthOctuple sp_action(const QMatrix& m, const BarthOctuple& o) {
  o.validate();
  require_sl2(m);
  const Rational &s = m(0, 0), &t = m(0, 1), &u = m(1, 0), &v = m(1, 1);
  BarthOctuple r = o;
  for (std::size_t i = 0; i < o.n; ++i) {
    r.a1[i] = s * o.a1[i] + u * o.b1[i];
    r.b1[i] = t * o.a1[i] + v * o.b1[i];
    r.a2[i] = s * o.a2[i] + u * o.b2[i];
    r.b2[i] = t * o.a2[i] + v * o.b2[i];
  }
  return r;
}

BarthOctuple h_action(const HElement& h, const BarthOctuple& o) { return sp_action(h.m, on_action(h.g, o)); }

GammaPoint gamma_of_octuple(const BarthOctuple& o) { return GammaPoint{o.n, 4, tilde_matrix(o)}; }

}  // namespace monadforge
