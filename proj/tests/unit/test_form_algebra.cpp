#include <doctest.h>

#include "../support.hpp"

using namespace mft;

namespace {

QPoly x(std::size_t i) { return QPoly::variable(4, i); }

LinearFormMatrix<Rational> random_forms(CounterRng& rng, std::size_t r, std::size_t c, std::size_t vars) {
  std::vector<QMatrix> cs;
  for (std::size_t k = 0; k < vars; ++k) cs.push_back(random_int_matrix(rng, r, c, 2));
  return LinearFormMatrix<Rational>(std::move(cs));
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  QPoly p = x(0) * x(1) + x(2) * x(2);
  QPoly r = p * p - (x(0) * x(0) * x(1) * x(1) + q(2) * x(0) * x(1) * x(2) * x(2) + x(2) * x(2) * x(2) * x(2));
  CHECK(r.is_zero());
  CHECK(p.degree() == 2);
  CHECK(p.is_homogeneous());
  CHECK(p.eval(qv({2, 3, 1, 0})) == 7);
  CHECK((p - p).is_zero());
  CHECK_THROWS_AS(x(0) + QPoly::variable(3, 0), DimensionMismatch);
}

TEST_CASE("evaluation commutes with determinants of linear form matrices") {
  CounterRng rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t k = 1 + rng.below(3);
    auto L = random_forms(rng, k, k, 4);
    QPoly det = poly_determinant(entries(L));
    QVec pt = random_vector(rng, 4, 5);
    CHECK(det.eval(pt) == determinant(L.eval_at(pt)));
    if (!det.is_zero()) {
      CHECK(det.is_homogeneous());
      CHECK(det.degree() == k);
    }
  }
}

TEST_CASE("minor ideal sizes and values") {
  CounterRng rng(22);
  auto L = random_forms(rng, 2, 3, 4);
  auto I1 = minor_ideal(L, 1);
  CHECK(I1.gens.size() <= 6);
  auto I2 = minor_ideal(L, 2);
  CHECK(I2.gens.size() <= 3);
  QVec pt = random_vector(rng, 4, 3);
  QMatrix at = L.eval_at(pt);
  // maximal minors vanish together exactly when the evaluated rank drops
  bool all_zero = true;
  for (const auto& g : I2.gens) all_zero = all_zero && is_zero(g.eval(pt));
  CHECK(all_zero == (rank(at) < 2));
  CHECK_THROWS_AS(minor_ideal(L, 3), InvalidArgument);
  CHECK_THROWS_AS(minor_ideal(L, 0), InvalidArgument);
}

TEST_CASE("Groebner basis of a small ideal") {
  Ideal<Rational> I{4, {x(0) * x(2) - x(1) * x(1), x(0)}};
  auto G = groebner(I);
  CHECK(normal_form(x(1) * x(1), G).is_zero());
  CHECK(normal_form(x(0) * x(3), G).is_zero());
  CHECK_FALSE(normal_form(x(1), G).is_zero());
  for (const auto& g : I.gens) CHECK(normal_form(g, G).is_zero());
}

TEST_CASE("normal forms are idempotent and well defined on the ideal") {
  Ideal<Rational> I{4, {x(0) * x(2) - x(1) * x(1), x(1) * x(3) - x(2) * x(2), x(0) * x(3) - x(1) * x(2)}};
  auto G = groebner(I);
  CounterRng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    QPoly f(4);
    for (int t = 0; t < 4; ++t) {
      std::array<std::uint16_t, kMaxVars> e{};
      for (int d = 0; d < 3; ++d) ++e[rng.below(4)];
      f += QPoly::monomial(4, Monomial(e), Rational(rng.range(-3, 3)));
    }
    QPoly nf = normal_form(f, G);
    CHECK(normal_form(nf, G) == nf);
    QPoly g = f + x(0) * I.gens[0] - x(3) * I.gens[2];
    CHECK(normal_form(g, G) == nf);
  }
}

TEST_CASE("basis does not depend on generator order") {
  Ideal<Rational> a{4, {x(0) * x(1) - x(2) * x(3), x(0) * x(0) - x(3) * x(3), x(1) * x(2)}};
  Ideal<Rational> b{4, {a.gens[2], a.gens[0], a.gens[1]}};
  CHECK(groebner(a) == groebner(b));
}

TEST_CASE("Groebner over F_p agrees with the reduction of the basis over Q") {
  Ideal<Rational> I{4, {x(0) * x(2) - x(1) * x(1), x(1) * x(3) - x(2) * x(2), x(0) * x(3) - x(1) * x(2)}};
  PrimeField f{1000003};
  auto Gq = groebner(I);
  auto Gp = groebner(reduce(I, f));
  REQUIRE(Gq.size() == Gp.size());
  for (std::size_t i = 0; i < Gq.size(); ++i) CHECK(reduce(Gq[i], f) == Gp[i]);
}

TEST_CASE("emptiness of the coordinate ideal") {
  Ideal<Rational> I{4, {x(0), x(1), x(2), x(3)}};
  auto c = projective_emptiness(I);
  CHECK(c.kind == EmptinessKind::Empty);
  CHECK(c.mode == CertMode::Certified);
  CHECK(c.exponents == std::vector<unsigned>{1, 1, 1, 1});
  CHECK(count_random_common_zeros(I, 1000003, 5, 200) == 0);
}

TEST_CASE("a coordinate point is found as witness") {
  Ideal<Rational> I{4, {x(0), x(1), x(2)}};
  auto c = projective_emptiness(I);
  CHECK(c.kind == EmptinessKind::Nonempty);
  CHECK(c.witness == std::vector<std::string>{"0", "0", "0", "1"});
  CHECK(c.witness_field == "Q");
}

TEST_CASE("curves have rational witnesses that satisfy every generator") {
  Ideal<Rational> I{4, {x(0) * x(2) - x(1) * x(1), x(1) * x(3) - x(2) * x(2), x(0) * x(3) - x(1) * x(2)}};
  auto c = projective_emptiness(I);
  CHECK(c.kind == EmptinessKind::Nonempty);
  REQUIRE(c.witness.size() == 4);
  QVec w;
  for (const auto& s : c.witness) w.push_back(parse_rational(s));
  for (const auto& g : I.gens) CHECK(is_zero(g.eval(w)));
}

TEST_CASE("a zero set without rational points is declared probable with an F_p witness") {
  Ideal<Rational> I{4, {x(0) * x(0) + x(1) * x(1) + x(2) * x(2), x(3)}};
  auto c = projective_emptiness(I);
  CHECK(c.kind == EmptinessKind::ProbableNonempty);
  CHECK(c.witness_field.rfind("F_", 0) == 0);
  REQUIRE(c.witness.size() == 4);
  PrimeField f{c.prime};
  Vec<Fp> w;
  for (const auto& s : c.witness) w.push_back(f.from_rational(parse_rational(s)));
  for (const auto& g : reduce(I, f).gens) CHECK(g.eval(w).is_zero());
  CHECK(verdict_from(c) == Verdict::Fail);
}

TEST_CASE("Nullstellensatz exponents are certified by normal forms") {
  Ideal<Rational> I{4, {x(0) * x(0), x(1) * x(1) - x(0) * x(2), x(2) * x(2) * x(2), x(3) - x(2)}};
  auto c = projective_emptiness(I);
  REQUIRE(c.kind == EmptinessKind::Empty);
  auto G = groebner(I);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(normal_form(QPoly::monomial(4, Monomial::var(i, c.exponents[i]), q(1)), G).is_zero());
    if (c.exponents[i] > 1)
      CHECK_FALSE(normal_form(QPoly::monomial(4, Monomial::var(i, c.exponents[i] - 1), q(1)), G).is_zero());
  }
  CHECK(count_random_common_zeros(I, 1000003, 6, 200) == 0);
}

TEST_CASE("fast emptiness matches exact on small ideals") {
  Ideal<Rational> empty{4, {x(0) * x(1) + x(2) * x(2), x(0) - x(3), x(1) + x(3), x(2) * x(3)}};
  Ideal<Rational> nonempty{4, {x(0) * x(1) - x(2) * x(3), x(0) - x(1)}};
  PrimeField f{kDefaultPrime};
  CHECK(projective_emptiness(empty).kind == EmptinessKind::Empty);
  CHECK(projective_emptiness_fast(empty, f).kind == EmptinessKind::Empty);
  CHECK(projective_emptiness_fast(empty, f).mode == CertMode::Probabilistic);
  CHECK(projective_emptiness(nonempty).kind == EmptinessKind::Nonempty);
  CHECK(projective_emptiness_fast(nonempty, f).kind != EmptinessKind::Empty);
}

TEST_CASE("resource caps yield an indeterminate verdict") {
  Ideal<Rational> I{4, {x(0) * x(2) - x(1) * x(1), x(1) * x(3) - x(2) * x(2), x(0) * x(3) - x(1) * x(2)}};
  EmptinessOptions opt;
  opt.limits.max_basis = 1;
  CHECK(projective_emptiness(I, opt).kind == EmptinessKind::Indeterminate);
  CHECK(verdict_from(projective_emptiness(I, opt)) == Verdict::Indeterminate);
}
