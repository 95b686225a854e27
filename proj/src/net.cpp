#include "monadforge/net.hpp"

namespace monadforge {

std::vector<std::pair<std::size_t, std::size_t>> QuadricNet::pairs(std::size_t ambient) {
  if (ambient != 3 && ambient != 4) throw InvalidArgument("ambient must be 3 or 4");
  std::vector<std::pair<std::size_t, std::size_t>> p;
  for (std::size_t i = 0; i < ambient; ++i)
    for (std::size_t j = i + 1; j < ambient; ++j) p.emplace_back(i, j);
  return p;
}

std::size_t QuadricNet::pair_index(std::size_t ambient, std::size_t i, std::size_t j) {
  auto p = pairs(ambient);
  for (std::size_t k = 0; k < p.size(); ++k)
    if (p[k].first == i && p[k].second == j) return k;
  throw InvalidArgument("no block for pair " + pair_key(i, j));
}

std::string QuadricNet::pair_key(std::size_t i, std::size_t j) {
  return std::to_string(i + 1) + std::to_string(j + 1);
}

QuadricNet QuadricNet::zero(std::size_t n, std::size_t ambient) {
  QuadricNet net;
  net.n = n;
  net.ambient = ambient;
  net.blocks.assign(pairs(ambient).size(), QMatrix(n, n));
  return net;
}

void QuadricNet::validate() const {
  auto p = pairs(ambient);
  if (blocks.size() != p.size()) {
    throw InvalidArgument("net needs " + std::to_string(p.size()) + " blocks, got " + std::to_string(blocks.size()));
  }
  for (std::size_t k = 0; k < p.size(); ++k) {
    const auto& b = blocks[k];
    const std::string key = pair_key(p[k].first, p[k].second);
    if (b.rows() != n || b.cols() != n) throw InvalidArgument("block " + key + " is " + b.shape());
    if (!b.is_symmetric()) throw InvalidArgument("block " + key + " is not symmetric");
  }
}

QMatrix flatten(const QuadricNet& net) {
  net.validate();
  const std::size_t n = net.n;
  QMatrix f(net.ambient * n, net.ambient * n);
  for (auto [i, j] : QuadricNet::pairs(net.ambient)) {
    const auto& b = net.block(i, j);
    f.set_block(i * n, j * n, b);
    f.set_block(j * n, i * n, -b);
  }
  return f;
}

QuadricNet net_from_flat(const QMatrix& f, std::size_t n, std::size_t ambient) {
  if (f.rows() != ambient * n || f.cols() != ambient * n) {
    throw DimensionMismatch("flattened net of size " + f.shape() + " for n=" + std::to_string(n));
  }
  for (std::size_t i = 0; i < ambient; ++i) {
    if (!f.block(i * n, i * n, n, n).is_zero()) {
      throw InvalidArgument("diagonal block " + std::to_string(i + 1) + " is nonzero");
    }
  }
  QuadricNet net = QuadricNet::zero(n, ambient);
  for (auto [i, j] : QuadricNet::pairs(ambient)) {
    QMatrix b = f.block(i * n, j * n, n, n);
    if (!b.is_symmetric()) throw InvalidArgument("block " + QuadricNet::pair_key(i, j) + " is not symmetric");
    if (f.block(j * n, i * n, n, n) != -b) {
      throw InvalidArgument("block " + QuadricNet::pair_key(j, i) + " is not minus block " +
                            QuadricNet::pair_key(i, j));
    }
    net.block(i, j) = b;
  }
  return net;
}

Pr2Split decompose_pr2(const QMatrix& t, std::size_t n, std::size_t ambient) {
  if (t.rows() != ambient * n || t.cols() != ambient * n) {
    throw DimensionMismatch("matrix of size " + t.shape() + " for n=" + std::to_string(n));
  }
  if (!t.is_skew()) throw InvalidArgument("decompose_pr2 needs a skew matrix");
  const Rational half(1, 2);
  Pr2Split s{QMatrix(t.rows(), t.cols()), QMatrix(t.rows(), t.cols())};
  for (std::size_t i = 0; i < ambient; ++i) {
    s.pr2_part.set_block(i * n, i * n, t.block(i * n, i * n, n, n));
    for (std::size_t j = i + 1; j < ambient; ++j) {
      QMatrix b = t.block(i * n, j * n, n, n);
      QMatrix bt = b.transpose();
      QMatrix sym = (b + bt) * half;
      QMatrix skw = (b - bt) * half;
      s.net_part.set_block(i * n, j * n, sym);
      s.net_part.set_block(j * n, i * n, -sym);
      s.pr2_part.set_block(i * n, j * n, skw);
      s.pr2_part.set_block(j * n, i * n, skw);
    }
  }
  return s;
}

QPresentation presentation(const QuadricNet& net) { return presentation_of_flat(flatten(net), net.n, net.ambient); }

std::vector<std::array<std::uint16_t, kMaxVars>> monomials_of_degree(std::size_t k, int t) {
  std::vector<std::array<std::uint16_t, kMaxVars>> out;
  if (t < 0 || k == 0) return out;
  std::array<std::uint16_t, kMaxVars> e{};
  // lexicographic on (e_0, e_1, ...) descending
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == k) {
      e[i] = static_cast<std::uint16_t>(left);
      out.push_back(e);
      e[i] = 0;
      return;
    }
    for (int d = left; d >= 0; --d) {
      e[i] = static_cast<std::uint16_t>(d);
      self(self, i + 1, left - d);
    }
    e[i] = 0;
  };
  rec(rec, 0, t);
  return out;
}

long dim_sym(std::size_t k, int t) {
  if (t < 0) return 0;
  long num = 1, den = 1;
  for (std::size_t i = 1; i < k; ++i) {
    num *= t + static_cast<long>(i);
    den *= static_cast<long>(i);
  }
  return num / den;
}

long chi_line_bundle(std::size_t k, int t) {
  // binomial(t + k - 1, k - 1) read as a polynomial in t
  long num = 1, den = 1;
  for (std::size_t i = 1; i < k; ++i) {
    num *= t + static_cast<long>(i);
    den *= static_cast<long>(i);
  }
  return num / den;
}

long CohomologyTable::expected_chi(int t) const {
  const long w = 2 * static_cast<long>(n) + 2;
  const long nn = static_cast<long>(n);
  return w * chi_line_bundle(ambient, t) - nn * chi_line_bundle(ambient, t - 1) -
         nn * chi_line_bundle(ambient, t + 1);
}

bool CohomologyTable::duality_holds() const {
  const int shift = ambient == 4 ? -4 : -3;
  for (int t = t_min; t <= t_max; ++t) {
    const int d = shift - t;
    if (d < t_min || d > t_max) continue;
    if (ambient == 4) {
      if (get(2, t) != get(1, d) || get(3, t) != get(0, d)) return false;
    } else {
      if (get(2, t) != get(0, d) || get(1, t) != get(1, d)) return false;
    }
  }
  return true;
}

bool CohomologyTable::chi_holds() const {
  for (int t = t_min; t <= t_max; ++t) {
    long chi = 0;
    for (std::size_t i = 0; i < ambient; ++i) chi += (i % 2 ? -1 : 1) * get(i, t);
    if (chi != expected_chi(t)) return false;
  }
  return true;
}

long h1_E_omega(const QuadricNet& net) { return static_cast<long>(rank(flatten(net))); }

ConditionResult surjectivity_condition(const QPresentation& p, const VerifyOptions& opt, const std::string& id,
                                       const std::string& label) {
  ConditionResult r;
  r.id = id;
  r.label = label;
  auto maps = monad_maps(p);
  auto ideal = minor_ideal(maps.adual_q, p.n);
  EmptinessCertificate cert = opt.mode == Mode::Exact
                                  ? projective_emptiness(ideal, opt.emptiness)
                                  : projective_emptiness_fast(ideal, PrimeField{opt.prime}, opt.emptiness);
  r.verdict = verdict_from(cert);
  r.detail = to_string(cert.kind) + " (" + to_string(cert.mode) + ") locus of the " + std::to_string(p.n) + "x" +
             std::to_string(p.n) + " minors";
  r.certificate = std::move(cert);
  return r;
}

ConditionResult h0_condition(const QPresentation& p, const VerifyOptions& opt, const std::string& id,
                             const std::string& label) {
  ConditionResult r;
  r.id = id;
  r.label = label;
  long h0 = 0;
  if (opt.mode == Mode::Exact) {
    h0 = h0_at_zero(p);
    r.verdict = h0 == 0 ? Verdict::Pass : Verdict::Fail;
    r.detail = "h0 = " + std::to_string(h0) + " over Q";
  } else {
    try {
      h0 = h0_at_zero(reduce(p, PrimeField{opt.prime}));
    } catch (const BadReduction& e) {
      r.verdict = Verdict::Indeterminate;
      r.detail = e.what();
      return r;
    }
    r.verdict = h0 == 0 ? Verdict::Probable : Verdict::Fail;
    r.detail = "h0 = " + std::to_string(h0) + " modulo " + std::to_string(opt.prime);
  }
  r.value = h0;
  return r;
}

VerificationReport barth_verify(const QuadricNet& net, const VerifyOptions& opt) {
  net.validate();
  VerificationReport rep;
  rep.subject = net.ambient == 4 ? "net" : "plane";
  rep.n = net.n;
  rep.ambient = net.ambient;
  rep.mode = opt.mode;
  rep.prime = opt.mode == Mode::Fast ? opt.prime : 0;
  const std::string space = net.ambient == 4 ? "P^3" : "P^2";

  const long want = 2 * static_cast<long>(net.n) + 2;
  ConditionResult c1{"i", "(i) rank of the flattened net = 2n+2", Verdict::Fail, "", std::nullopt, std::nullopt};
  QMatrix f = flatten(net);
  const long rk = static_cast<long>(rank(f));
  c1.value = rk;
  c1.verdict = rk == want ? Verdict::Pass : Verdict::Fail;
  c1.detail = "rank " + std::to_string(rk) + ", expected " + std::to_string(want);
  rep.conditions.push_back(c1);

  const std::string l2 = "(ii) adual_q surjective at every point of " + space;
  const std::string l3 = "(iii) h0(E) = 0";
  if (rk != want) {
    rep.conditions.push_back({"ii", l2, Verdict::Indeterminate, "not evaluated: no presentation without (i)",
                              std::nullopt, std::nullopt});
    rep.conditions.push_back({"iii", l3, Verdict::Indeterminate, "not evaluated: no presentation without (i)",
                              std::nullopt, std::nullopt});
    return rep;
  }
  auto p = presentation_of_flat(f, net.n, net.ambient);
  rep.conditions.push_back(surjectivity_condition(p, opt, "ii", l2));
  rep.conditions.push_back(h0_condition(p, opt, "iii", l3));
  return rep;
}

}  // namespace monadforge
