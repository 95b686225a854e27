#include "monadforge/frame.hpp"

namespace monadforge {

void GammaPoint::validate() const {
  if (ambient != 3 && ambient != 4) throw InvalidArgument("ambient must be 3 or 4");
  if (n == 0) throw InvalidArgument("n must be positive");
  if (gamma.rows() != 2 * n + 2 || gamma.cols() != ambient * n) {
    throw InvalidArgument("gamma must be " + std::to_string(2 * n + 2) + "x" + std::to_string(ambient * n) +
                          ", got " + gamma.shape());
  }
}

bool is_symplectic(const QMatrix& s) {
  if (!s.square() || s.rows() % 2 != 0 || s.rows() == 0) return false;
  QMatrix q = standard_symplectic<Rational>(s.rows());
  return s.transpose() * q * s == q;
}

void GroupElementG::validate() const {
  if (!g.square()) throw InvalidArgument("g must be square, got " + g.shape());
  if (!try_inverse(g)) throw InvalidArgument("g is singular");
  if (s.rows() != 2 * g.rows() + 2 || !s.square()) throw InvalidArgument("s must be (2n+2)x(2n+2), got " + s.shape());
  if (!is_symplectic(s)) throw InvalidArgument("s is not symplectic");
}

QMatrix a_of_gamma(const GammaPoint& gp) {
  gp.validate();
  return gp.gamma.transpose() * gp.q() * gp.gamma;
}

VerificationReport misp_verify(const GammaPoint& gp, const VerifyOptions& opt) {
  gp.validate();
  VerificationReport rep;
  rep.subject = "gamma";
  rep.n = gp.n;
  rep.ambient = gp.ambient;
  rep.mode = opt.mode;
  rep.prime = opt.mode == Mode::Fast ? opt.prime : 0;
  const std::string space = gp.ambient == 4 ? "P^3" : "P^2";

  QMatrix a = a_of_gamma(gp);
  const long want = 2 * static_cast<long>(gp.n) + 2;
  const long rk = static_cast<long>(rank(a));
  ConditionResult c1{"i", "(i) rank A(gamma) = 2n+2", rk == want ? Verdict::Pass : Verdict::Fail,
                     "rank " + std::to_string(rk) + ", expected " + std::to_string(want), rk, std::nullopt};
  rep.conditions.push_back(c1);

  Pr2Split split = decompose_pr2(a, gp.n, gp.ambient);
  const bool pr2_zero = split.pr2_part.is_zero();
  rep.conditions.push_back({"ii", "(ii) pr2 A(gamma) = 0", pr2_zero ? Verdict::Pass : Verdict::Fail,
                            pr2_zero ? "A(gamma) is a net of quadrics" : "A(gamma) has a nonzero pr2 component",
                            std::nullopt, std::nullopt});

  const std::string l3 = "(iii) dual monad map surjective at every point of " + space;
  const std::string l4 = "(iv) h0(E(gamma)) = 0";
  if (c1.verdict != Verdict::Pass || !pr2_zero) {
    const std::string why = "not evaluated: needs (i) and (ii)";
    rep.conditions.push_back({"iii", l3, Verdict::Indeterminate, why, std::nullopt, std::nullopt});
    rep.conditions.push_back({"iv", l4, Verdict::Indeterminate, why, std::nullopt, std::nullopt});
    return rep;
  }
  QPresentation p{gp.n, gp.ambient, gp.gamma, gp.q()};
  rep.conditions.push_back(surjectivity_condition(p, opt, "iii", l3));
  rep.conditions.push_back(h0_condition(p, opt, "iv", l4));
  return rep;
}

GammaPoint lift_from_net(const QPresentation& p) {
  QMatrix psi = symplectic_framing(p.qW);
  return GammaPoint{p.n, p.ambient, inverse(psi) * p.c};
}

QMatrix expand_h(const QMatrix& g, std::size_t ambient) {
  return block_diag(std::vector<QMatrix>(ambient, g));
}

GammaPoint g_action(const GroupElementG& e, const GammaPoint& gp) {
  gp.validate();
  e.validate();
  if (e.g.rows() != gp.n) throw DimensionMismatch("group element for n=" + std::to_string(e.g.rows()));
  return GammaPoint{gp.n, gp.ambient, e.s * gp.gamma * expand_h(inverse(e.g), gp.ambient)};
}

void require_orthogonal(const QMatrix& g) {
  if (!g.square()) throw InvalidArgument("g must be square, got " + g.shape());
  if (g * g.transpose() != QMatrix::identity(g.rows())) throw InvalidArgument("g is not orthogonal");
}

void require_sl2(const QMatrix& m) {
  if (m.rows() != 2 || m.cols() != 2) throw InvalidArgument("m must be 2x2, got " + m.shape());
  if (determinant(m) != Rational(1)) throw InvalidArgument("m must have determinant 1");
}

GroupElementG embed_h_in_g(const QMatrix& g, const QMatrix& m) {
  require_orthogonal(g);
  require_sl2(m);
  // m = [[s, t], [u, v]] enters as its transpose [[s, u], [t, v]]
  GroupElementG e{g, block_diag(std::vector<QMatrix>{g, g, m.transpose()})};
  if (!is_symplectic(e.s)) throw Error("embedded element is not symplectic");
  return e;
}

}  // namespace monadforge
