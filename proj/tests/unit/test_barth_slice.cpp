#include <doctest.h>

#include "../support.hpp"

using namespace mft;

namespace {

BarthOctuple random_octuple(CounterRng& rng, std::size_t n) {
  BarthOctuple o;
  o.n = n;
  o.A1 = random_symmetric(rng, n, 3);
  o.A2 = random_symmetric(rng, n, 3);
  o.B1 = random_symmetric(rng, n, 3);
  o.B2 = random_symmetric(rng, n, 3);
  o.a1 = random_vector(rng, n, 3);
  o.a2 = random_vector(rng, n, 3);
  o.b1 = random_vector(rng, n, 3);
  o.b2 = random_vector(rng, n, 3);
  return o;
}

QMatrix diag(std::initializer_list<long> xs) {
  QMatrix m(xs.size(), xs.size());
  std::size_t i = 0;
  for (long x : xs) m(i, i) = x, ++i;
  return m;
}

// Diagonal A_i, B_i with b1 = a1 and b2 = mu a2: the first two identities
// hold, and C is symmetric exactly when mu = 1.
BarthOctuple diagonal_octuple(long mu) {
  BarthOctuple o;
  o.n = 2;
  o.A1 = diag({1, 2});
  o.A2 = diag({3, -1});
  o.B1 = diag({2, 5});
  o.B2 = diag({-4, 1});
  o.a1 = qv({1, 0});
  o.a2 = qv({1, 1});
  o.b1 = o.a1;
  o.b2 = {o.a2[0] * mu, o.a2[1] * mu};
  return o;
}

}  // namespace

TEST_CASE("octuple validation") {
  BarthOctuple o = BarthOctuple::zero(2);
  CHECK_NOTHROW(o.validate());
  o.A1(0, 1) = 1;
  CHECK_THROWS_AS(o.validate(), InvalidArgument);
  o = BarthOctuple::zero(2);
  o.b2.pop_back();
  CHECK_THROWS_AS(o.validate(), InvalidArgument);
}

TEST_CASE("the product A~^T Q A~ has the closed block form for every octuple") {
  CounterRng rng(61);
  for (std::size_t n : {1u, 2u, 3u}) {
    for (int trial = 0; trial < 10; ++trial) {
      BarthOctuple o = random_octuple(rng, n);
      QMatrix t = tilde_matrix(o);
      CHECK(t.rows() == 2 * n + 2);
      CHECK(t.cols() == 4 * n);
      CHECK(a_of_octuple(o).product == block_form(o));
    }
  }
}

TEST_CASE("closed octuples give nets with pr2 = 0") {
  for (std::size_t n : {2u, 3u}) {
    for (std::uint64_t trial = 0; trial < 5; ++trial) {
      BarthOctuple o = octuple(n, 62, trial);
      CHECK(closed_conditions_hold(o));
      auto an = a_of_octuple(o, true);
      REQUIRE(an.net.has_value());
      CHECK(flatten(*an.net) == an.product);
      CHECK(decompose_pr2(an.product, n, 4).pr2_part.is_zero());
      // three routes to the same skew matrix
      CHECK(a_of_gamma(gamma_of_octuple(o)) == an.product);
      CHECK(flatten(net_of_octuple(o)) == an.product);
    }
  }
}

TEST_CASE("the pencil identity at three parameters is equivalent to (i)") {
  CounterRng rng(63);
  for (int trial = 0; trial < 20; ++trial) {
    BarthOctuple o = trial % 2 ? random_octuple(rng, 2) : octuple(2, 63, trial);
    auto r = closed_residuals(o);
    const bool pencil = pencil_residual(o, q(0)).is_zero() && pencil_residual(o, q(1)).is_zero() &&
                        pencil_residual(o, q(-1)).is_zero();
    CHECK(pencil == r.all_zero());
    // P(t) = r1 + t (C - C^T) + t^2 r2
    Rational t(rng.range(-5, 5), rng.range(1, 4));
    t.canonicalize();
    CHECK(pencil_residual(o, t) == r.r1 + t * r.r3 + t * t * r.r2);
  }
}

TEST_CASE("C is symmetric exactly when pr2 vanishes") {
  for (long mu : {1L, 2L}) {
    BarthOctuple o = diagonal_octuple(mu);
    auto r = closed_residuals(o);
    CHECK(r.r1.is_zero());
    CHECK(r.r2.is_zero());
    const bool sym = c_of_octuple(o).is_symmetric();
    CHECK(sym == (mu == 1));
    CHECK(decompose_pr2(a_of_octuple(o).product, 2, 4).pr2_part.is_zero() == sym);
    if (!sym) {
      CHECK_THROWS_AS(a_of_octuple(o, true), BlockMismatch);
      CHECK_THROWS_AS(net_of_octuple(o), InvalidArgument);
      auto rep = gamma_conditions(o, exact());
      CHECK(rep.verdict("i_gamma") == Verdict::Fail);
      CHECK(rep.get("i_gamma").label.find("(i)_Γ") != std::string::npos);
      CHECK(rep.verdict("ii_gamma") == Verdict::Indeterminate);
    }
  }
}

TEST_CASE("(iv) alone does not force rank 2n+2") {
  // A = B = 0 and b_i = a_i: (i) and (iv) hold but the last two rows of A~ agree
  BarthOctuple o = BarthOctuple::zero(2);
  o.a1 = qv({1, 0});
  o.a2 = qv({0, 1});
  o.b1 = o.a1;
  o.b2 = o.a2;
  CHECK(closed_conditions_hold(o));
  CHECK(rank(tilde_matrix(o)) == 5);
  // the product is skew, so its rank drops to the even number below
  CHECK(rank(a_of_octuple(o).product) == 4);
  auto rep = gamma_conditions(o, exact());
  CHECK(rep.verdict("i_gamma") == Verdict::Pass);
  CHECK(rep.verdict("iv_gamma") == Verdict::Pass);
  CHECK(rep.verdict("rank") == Verdict::Fail);
  auto cert = d_certificate(o);
  CHECK(cert.identity_holds);
  CHECK(cert.rank_a == 4);
  CHECK_FALSE(cert.rank_certified);
}

TEST_CASE("D certificate") {
  for (std::size_t n : {2u, 3u}) {
    for (std::uint64_t trial = 0; trial < 5; ++trial) {
      BarthOctuple o = octuple(n, 64, trial);
      auto cert = d_certificate(o);
      CHECK(cert.precondition);
      CHECK(cert.identity_holds);
      CHECK(cert.product == cert.expected);
      CHECK(determinant(cert.d) == 1);
      CHECK(cert.rank_a == static_cast<long>(2 * n) + cert.rank_x);
      CHECK(cert.rank_a == static_cast<long>(rank(a_of_octuple(o).product)));
      CHECK(cert.rank_certified == (cert.rank_a == static_cast<long>(2 * n + 2)));
    }
  }
  CounterRng rng(65);
  auto cert = d_certificate(random_octuple(rng, 2));
  CHECK_FALSE(cert.precondition);
  CHECK_FALSE(cert.identity_holds);
  CHECK_FALSE(cert.note.empty());
}

TEST_CASE("generated octuples satisfy the closed conditions for every ansatz") {
  for (Ansatz a : {Ansatz::Dense, Ansatz::Diagonal, Ansatz::Bilinear}) {
    for (std::size_t n : {2u, 3u}) {
      for (std::uint64_t trial = 0; trial < 4; ++trial) {
        BarthOctuple o = octuple(n, 66, trial, a);
        CHECK(closed_conditions_hold(o));
      }
    }
  }
  CHECK_THROWS_AS(gen_closed_octuple(1, 0), InvalidArgument);
  CHECK(gen_closed_octuple(2, 9, 3).octuple == gen_closed_octuple(2, 9, 3).octuple);
}

TEST_CASE("the diagonal ansatz never reaches rank 2n+2") {
  for (std::uint64_t trial = 0; trial < 5; ++trial) {
    BarthOctuple o = octuple(3, 67, trial, Ansatz::Diagonal);
    CHECK(rank(a_of_octuple(o).product) < 8);
  }
}

TEST_CASE("the O(n) and Sp(2) actions") {
  CounterRng rng(68);
  for (std::size_t n : {2u, 3u}) {
    BarthOctuple o = octuple(n, 68);
    for (int trial = 0; trial < 5; ++trial) {
      HElement h = random_h(rng, n);
      CHECK(sp_action(h.m, on_action(h.g, o)) == on_action(h.g, sp_action(h.m, o)));
      BarthOctuple moved = h_action(h, o);
      CHECK(closed_conditions_hold(moved));
      QMatrix e = expand_h(h.g, 4);
      CHECK(a_of_octuple(moved).product == congruence(a_of_octuple(o).product, e));
      GammaPoint viaG = g_action(embed_h_in_g(h.g, h.m), gamma_of_octuple(o));
      CHECK(viaG.gamma == gamma_of_octuple(moved).gamma);
    }
    HElement minus{-QMatrix::identity(n), -QMatrix::identity(2)};
    CHECK(h_action(minus, o) == o);
  }
  BarthOctuple o = octuple(2, 69);
  CHECK_THROWS_AS(on_action(QMatrix::from_ints({{1, 1}, {0, 1}}), o), InvalidArgument);
  CHECK_THROWS_AS(sp_action(QMatrix::from_ints({{1, 1}, {1, 1}}), o), InvalidArgument);
}

TEST_CASE("slice verdicts") {
  BarthOctuple o = octuple(2, 70);
  auto rep = gamma_conditions(o, exact());
  CHECK(rep.conditions.size() == 5);
  CHECK(rep.verdict("i_gamma") == Verdict::Pass);
  CHECK(rep.verdict("iv_gamma") == Verdict::Pass);
  if (rep.overall() == Verdict::Pass) {
    CHECK(misp_verify(gamma_of_octuple(o), exact()).overall() == Verdict::Pass);
    CHECK(barth_verify(net_of_octuple(o), exact()).overall() == Verdict::Pass);
  }
}
