#include "doctest.h"

#include <random>
#include <stdexcept>

#include "yagita/chern.hpp"
#include "yagita/witness.hpp"

using namespace yagita;

namespace {

// Random product of elementary integer matrices; unimodular.
CycMatrix random_unimodular(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<long> c(-2, 2);
  CycMatrix m = identity(n);
  for (int t = 0; t < 6; ++t) {
    const std::size_t i = idx(rng), j = idx(rng);
    if (i == j) continue;
    CycMatrix e = identity(n);
    e.set(i, j, CycNum(c(rng)));
    m = m * e;
  }
  return m;
}

}  // namespace

TEST_CASE("eigen exponents examples") {
  auto e = eigen_exponents(CycMatrix::diagonal({zeta(3), zeta(3, 2)}), 3);
  CHECK(e.multiplicity == std::vector<std::uint64_t>{0, 1, 1});
  e = eigen_exponents(CycMatrix::from_ints({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}), 3);
  CHECK(e.multiplicity == std::vector<std::uint64_t>{1, 1, 1});
  e = eigen_exponents(identity(2), 5);
  CHECK(e.multiplicity == std::vector<std::uint64_t>{2, 0, 0, 0, 0});
  CHECK(e.total() == 2);
  CHECK_THROWS_AS(eigen_exponents(CycMatrix::from_ints({{0, -1}, {1, 0}}), 3), std::invalid_argument);
}

TEST_CASE("diagonal read-off and conjugation invariance") {
  std::mt19937_64 rng(17);
  for (std::uint64_t p : {2, 3, 5, 7}) {
    std::uniform_int_distribution<std::uint64_t> a(0, p - 1);
    for (int t = 0; t < 15; ++t) {
      std::vector<std::uint64_t> expect(p, 0);
      std::vector<CycNum> d;
      for (int i = 0; i < 4; ++i) {
        const auto k = a(rng);
        ++expect[k];
        d.push_back(zeta(p, static_cast<std::int64_t>(k)));
      }
      const CycMatrix m = CycMatrix::diagonal(d);
      CHECK(eigen_exponents(m, p).multiplicity == expect);
      const CycMatrix u = random_unimodular(4, rng);
      CHECK(eigen_exponents(u * m * u.inverse(), p).multiplicity == expect);
    }
  }
}

TEST_CASE("total Chern class examples") {
  CHECK(total_chern({3, {0, 1, 1}}) == FpPoly(3, {1, 0, 2}));
  CHECK(total_chern({3, {0, 3, 0}}) == FpPoly(3, {1, 0, 0, 1}));
  CHECK(total_chern({5, {4, 0, 0, 0, 0}}) == FpPoly::constant(5, 1));
  // multiplicative over direct sums
  const CycMatrix a = regular_rep_zeta(5);
  const CycMatrix b = CycMatrix::diagonal({zeta(5, 2), zeta(5, 2)});
  CHECK(total_chern(eigen_exponents(block_diag(a, b), 5)) ==
        total_chern(eigen_exponents(a, 5)) * total_chern(eigen_exponents(b, 5)));
}

TEST_CASE("n_upper and rationality examples") {
  CHECK(n_upper(regular_rep_zeta(3), 3) == ExtNat::finite(2));
  CHECK(n_upper(CycMatrix::scalar(3, zeta(3)), 3) == ExtNat::finite(3));
  CHECK(n_upper(identity(3), 3).is_infinite());
  CHECK(rationality_check(regular_rep_zeta(3), 3, 2));
  CHECK(rationality_check(regular_rep_zeta(5), 5, 4));
  CHECK(total_chern(eigen_exponents(regular_rep_zeta(5), 5)) == FpPoly(5, {1, 0, 0, 0, -1}));
  CHECK(rationality_check(CycMatrix::diagonal({zeta(5), zeta(5, 2)}), 5, 1));
  CHECK_FALSE(rationality_check(CycMatrix::diagonal({zeta(5), zeta(5, 2)}), 5, 2));
  CHECK(rationality_check(identity(2), 5, 4));
}

TEST_CASE("upper bound from witness groups") {
  MatrixGroup trivial({identity(2)});
  trivial.enumerate();
  CHECK(yagita_upper_witness(trivial, 3) == ExtNat::finite(1));

  const auto e31 = build_extraspecial_monomial(3, 1);
  MatrixGroup g(e31.generators);
  g.enumerate();
  const ExtNat u = yagita_upper_witness(g, 3);
  REQUIRE(u.is_finite());
  CHECK(u.value() % 6 == 0);

  const auto g1 = build_g1(3, 2, RingSpec::integers());
  MatrixGroup h(g1.generators);
  h.enumerate();
  const auto subs = order_p_cyclic_subgroups(h, 3);
  REQUIRE(subs.size() == 1);
  CHECK(n_upper(subs[0], 3) == ExtNat::finite(2));
  CHECK(yagita_upper_witness(h, 3) == ExtNat::finite(4));
}

TEST_CASE("every order-p element of every witness has the m p^q shape") {
  std::vector<WitnessEmbedding> ws = {
      build_d8(), sl_pad(build_d8()), build_e2m_integer(2), build_e2m_integer(3), build_q8(),
      build_extraspecial_monomial(3, 1), blow_up(build_extraspecial_monomial(3, 1)), build_extraspecial_monomial(5, 1),
      build_g1(3, 2, RingSpec::integers()), build_g1(5, 4, RingSpec::integers()), build_g1(7, 6, RingSpec::integers()),
      build_g1(7, 2, RingSpec::quadratic(-7)), build_g1(13, 6, RingSpec::subcyclotomic(13, 3)),
      build_g2(5, 4, RingSpec::cyclotomic(40))};
  for (const auto& w : ws) {
    INFO(w.label());
    const std::uint64_t p = w.kind.p;
    MatrixGroup g(w.generators);
    const auto& elems = g.enumerate();
    const std::uint64_t oracle = w.expected_yagita;
    ExtNat upper = ExtNat::finite(1);
    for (const auto& e : elems) {
      if (e.is_identity() || !e.pow(static_cast<std::int64_t>(p)).is_identity()) continue;
      const ExtNat n = n_upper(e, p);
      REQUIRE(n.is_finite());
      CHECK((p - 1) % mp_q_decompose(n.value(), p).m == 0);
      CHECK(rationality_check(e, p, w.l));
      upper = lcm(upper, ExtNat::finite(2 * n.value()));
    }
    CHECK(upper == yagita_upper_witness(g, p));
    CHECK(upper.value() % oracle == 0);
  }
}
