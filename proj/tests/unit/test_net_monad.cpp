#include <doctest.h>

#include "../support.hpp"

using namespace mft;

namespace {

QuadricNet random_net(CounterRng& rng, std::size_t n, std::size_t ambient) {
  QuadricNet net = QuadricNet::zero(n, ambient);
  for (auto& b : net.blocks) b = random_symmetric(rng, n, 3);
  return net;
}

// A net that passes all three conditions exactly, taken from a generated octuple.
QuadricNet verified_net(std::size_t n, std::uint64_t seed) {
  for (std::uint64_t trial = 0;; ++trial) {
    BarthOctuple o = octuple(n, seed, trial);
    QuadricNet net = net_of_octuple(o);
    if (barth_verify(net, exact()).overall() == Verdict::Pass) return net;
  }
}

}  // namespace

TEST_CASE("flatten round trip and pr2 split") {
  CounterRng rng(31);
  for (std::size_t n = 1; n <= 3; ++n) {
    QuadricNet net = random_net(rng, n, 4);
    QMatrix f = flatten(net);
    CHECK(f.is_skew());
    CHECK(net_from_flat(f, n, 4) == net);
    auto split = decompose_pr2(f, n, 4);
    CHECK(split.net_part == f);
    CHECK(split.pr2_part.is_zero());

    QMatrix a = random_int_matrix(rng, 4 * n, 4 * n, 3);
    QMatrix t = a - a.transpose();
    auto s = decompose_pr2(t, n, 4);
    CHECK(s.net_part + s.pr2_part == t);
    CHECK_NOTHROW(net_from_flat(s.net_part, n, 4));
    CHECK(decompose_pr2(s.pr2_part, n, 4).net_part.is_zero());
  }
  QMatrix bad = QMatrix::identity(4);
  CHECK_THROWS_AS(decompose_pr2(bad, 1, 4), InvalidArgument);
  CHECK_THROWS_AS(net_from_flat(QMatrix(3, 3), 1, 4), DimensionMismatch);
}

TEST_CASE("net validation") {
  QuadricNet net = QuadricNet::zero(2, 4);
  CHECK(net.blocks.size() == 6);
  CHECK(QuadricNet::pair_key(2, 3) == "34");
  net.block(0, 1) = QMatrix::from_ints({{0, 1}, {2, 0}});
  CHECK_THROWS_AS(net.validate(), InvalidArgument);
  net.block(0, 1) = QMatrix::from_ints({{0, 1}, {1, 0}});
  CHECK_NOTHROW(net.validate());
  net.blocks.pop_back();
  CHECK_THROWS_AS(net.validate(), InvalidArgument);
}

TEST_CASE("null correlation presentation") {
  QuadricNet nc = gen_null_correlation();
  QPresentation p = presentation(nc);
  CHECK(p.c == QMatrix::identity(4));
  CHECK(p.c.transpose() * p.qW * p.c == flatten(nc));
  CHECK(h1_E_omega(nc) == 4);
}

TEST_CASE("zero net has the wrong rank") {
  QuadricNet z = QuadricNet::zero(1, 4);
  try {
    presentation(z);
    FAIL("expected WrongRank");
  } catch (const WrongRank& e) {
    CHECK(e.expected() == 4);
    CHECK(e.actual() == 0);
  }
  auto rep = barth_verify(z, exact());
  CHECK(rep.verdict("i") == Verdict::Fail);
  CHECK(rep.overall() == Verdict::Fail);
}

TEST_CASE("null correlation passes every condition") {
  auto rep = barth_verify(gen_null_correlation(), exact());
  CHECK(rep.verdict("i") == Verdict::Pass);
  CHECK(rep.verdict("ii") == Verdict::Pass);
  CHECK(rep.verdict("iii") == Verdict::Pass);
  const auto& cert = rep.get("ii").certificate;
  REQUIRE(cert.has_value());
  CHECK(cert->kind == EmptinessKind::Empty);
  CHECK(cert->exponents == std::vector<unsigned>{1, 1, 1, 1});
  CHECK(exit_code(rep.overall()) == 0);
}

TEST_CASE("null correlation cohomology") {
  QPresentation p = presentation(gen_null_correlation());
  auto t = cohomology_table(p, -6, 2);
  CHECK(t.get(1, -2) == 0);
  CHECK(t.get(1, -1) == 1);
  CHECK(t.get(1, 0) == 0);
  CHECK(t.get(0, 0) == 0);
  CHECK(t.get(0, 1) == 5);
  CHECK(t.duality_holds());
  CHECK(t.chi_holds());
  for (int s = -6; s <= 2; ++s) {
    CHECK(t.get(2, s) == t.get(1, -4 - s));
    CHECK(t.get(3, s) == t.get(0, -4 - s));
  }
}

TEST_CASE("line bundle Euler characteristics") {
  CHECK(chi_line_bundle(4, 0) == 1);
  CHECK(chi_line_bundle(4, 1) == 4);
  CHECK(chi_line_bundle(4, -1) == 0);
  CHECK(chi_line_bundle(4, -4) == -1);
  CHECK(chi_line_bundle(4, -5) == -4);
  CHECK(chi_line_bundle(3, -3) == 1);
  for (int t = 0; t <= 4; ++t) CHECK(dim_sym(4, t) == static_cast<long>(monomials_of_degree(4, t).size()));
  CHECK(dim_sym(4, -1) == 0);
}

TEST_CASE("cohomology of verified nets") {
  for (std::size_t n : {2u, 3u}) {
    QuadricNet net = verified_net(n, 41 + n);
    QPresentation p = presentation(net);
    auto maps = monad_maps(p);
    for (const auto& row : monad_composition(maps))
      for (const auto& e : row) CHECK(e.is_zero());
    auto t = cohomology_table(p, -6, 2);
    const long nn = static_cast<long>(n);
    CHECK(t.get(1, -2) == 0);
    CHECK(t.get(1, -1) == nn);
    CHECK(t.get(1, 0) == 2 * nn - 2);
    CHECK(t.get(0, 0) == 0);
    CHECK(t.expected_chi(0) == 2 - 2 * nn);
    CHECK(t.duality_holds());
    CHECK(t.chi_holds());
    CHECK(h1_E_omega(net) == 2 * nn + 2);
    // M1 is injective, so rank M1(t) = n dim S_{t-1}
    for (int s = 1; s <= 3; ++s) CHECK(section_counts(maps, s).rank_m1 == nn * dim_sym(4, s - 1));
    PrimeField f{1000003};
    auto tp = cohomology_table(reduce(p, f), -6, 2);
    CHECK(tp.h == t.h);
  }
}

TEST_CASE("splitting on lines agrees with sections of the restricted monad") {
  QPresentation p = presentation(gen_null_correlation());
  // the null correlation bundle jumps exactly on the lines isotropic for the form
  CHECK(line_splitting(p, qv({1, 0, 0, 0}), qv({0, 1, 0, 0})) == 0);
  CHECK(line_splitting(p, qv({1, 0, 0, 0}), qv({0, 0, 1, 0})) == 1);

  CounterRng rng(32);
  QPresentation p2 = presentation(verified_net(2, 43));
  for (int trial = 0; trial < 15; ++trial) {
    QVec x = random_vector(rng, 4, 2), y = random_vector(rng, 4, 2);
    if (trial % 3 == 0) {
      // force a line through a coordinate point
      x = qv({0, 0, 0, 1});
    }
    QMatrix pts(2, 4);
    for (std::size_t i = 0; i < 4; ++i) pts(0, i) = x[i], pts(1, i) = y[i];
    if (rank(pts) < 2) continue;
    const long d = line_splitting(p2, x, y);
    CHECK(d >= 0);
    // O(d) + O(-d): h0(t) = (d + t + 1) + max(0, t - d + 1)
    for (int t = 0; t <= 2; ++t) CHECK(line_h0(p2, x, y, t) == (d + t + 1) + std::max(0L, t - d + 1));
  }
  CHECK_THROWS_AS(line_splitting(p, qv({1, 0, 0, 0}), qv({2, 0, 0, 0})), InvalidArgument);
}

TEST_CASE("zeroing every block that touches e4 breaks surjectivity at [0:0:0:1]") {
  CounterRng rng(33);
  QuadricNet net = QuadricNet::zero(2, 4);
  do {
    net.block(0, 1) = random_symmetric(rng, 2, 3);
    net.block(0, 2) = random_symmetric(rng, 2, 3);
    net.block(1, 2) = random_symmetric(rng, 2, 3);
  } while (rank(flatten(net)) != 6);
  auto rep = barth_verify(net, exact());
  CHECK(rep.verdict("i") == Verdict::Pass);
  CHECK(rep.verdict("ii") == Verdict::Fail);
  const auto& cert = rep.get("ii").certificate;
  REQUIRE(cert.has_value());
  CHECK(cert->witness == std::vector<std::string>{"0", "0", "0", "1"});
  CHECK(exit_code(rep.overall()) == 1);
}

TEST_CASE("fast mode gives probable verdicts for the open conditions") {
  auto rep = barth_verify(gen_null_correlation(), fast());
  CHECK(rep.verdict("i") == Verdict::Pass);
  CHECK(rep.verdict("ii") == Verdict::Probable);
  CHECK(rep.verdict("iii") == Verdict::Probable);
  CHECK(exit_code(rep.overall()) == 2);
}
