#include "doctest.h"

#include <random>
#include <stdexcept>

#include "yagita/arith.hpp"
#include "yagita/witness.hpp"

using namespace yagita;

namespace {

bool has_kind(const std::vector<WitnessEmbedding>& list, const WitnessKind& k) {
  for (const auto& w : list)
    if (w.kind == k) return true;
  return false;
}

void check_verified(const WitnessEmbedding& w) {
  INFO(w.label());
  const WitnessCheck c = verify_witness(w);
  CHECK(c.closure_order == w.expected_order);
  CHECK(c.relations_ok);
  if (w.claims_sl) CHECK(c.all_det_one);
  CHECK(c.verified);
}

}  // namespace

TEST_CASE("regular representation of zeta_p") {
  CHECK(regular_rep_zeta(2) == CycMatrix::from_ints({{-1}}));
  CHECK(regular_rep_zeta(3) == CycMatrix::from_ints({{0, -1}, {1, -1}}));
  CHECK(regular_rep_zeta(5) ==
        CycMatrix::from_ints({{0, 0, 0, -1}, {1, 0, 0, -1}, {0, 1, 0, -1}, {0, 0, 1, -1}}));
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
    const CycMatrix r = regular_rep_zeta(p);
    CHECK(r.is_integral());
    CHECK(element_order(r) == p);
    CHECK(det(r) == CycNum(p == 2 ? -1 : 1));
  }
}

TEST_CASE("Galois representation") {
  CHECK(galois_rep(5, 1) == identity(4));
  CHECK(galois_rep(3, 2) == CycMatrix::from_ints({{1, -1}, {0, -1}}));
  for (std::uint64_t p : {3, 5, 7, 11, 13}) {
    const CycMatrix r = regular_rep_zeta(p);
    for (std::uint64_t g = 1; g < p; ++g) {
      const CycMatrix s = galois_rep(p, g);
      CHECK(s * r * s.inverse() == r.pow(static_cast<std::int64_t>(g)));
    }
  }
  CHECK_THROWS(galois_rep(5, 10));
}

TEST_CASE("cyclotomic basis over intermediate fields") {
  // Q(sqrt(-7)) inside Q(zeta_7): the minimal polynomial of zeta_7 has degree 3.
  const CyclotomicBasis b(7, 3);
  CHECK(b.galois_group() == std::vector<std::uint64_t>{1, 2, 4});
  const auto& mu = b.minimal_polynomial();
  REQUIRE(mu.size() == 4);
  CHECK(mu[3] == CycNum(1));
  CycNum value;
  for (std::size_t i = 0; i < mu.size(); ++i) value += mu[i] * zeta(7, static_cast<std::int64_t>(i));
  CHECK(value.is_zero());
  CHECK(element_order(b.companion()) == 7);
  for (std::uint64_t h : b.galois_group()) {
    const CycMatrix s = b.galois_matrix(h);
    CHECK(s * b.companion() * s.inverse() == b.companion().pow(static_cast<std::int64_t>(h)));
  }
  CHECK_THROWS(b.galois_matrix(3));
  CHECK_THROWS(CyclotomicBasis(7, 4));
}

TEST_CASE("unit_of_order picks the least unit") {
  CHECK(unit_of_order(5, 4) == 2);
  CHECK(unit_of_order(7, 3) == 2);
  CHECK(unit_of_order(7, 6) == 3);
  CHECK(unit_of_order(13, 1) == 1);
  CHECK_THROWS(unit_of_order(7, 4));
}

TEST_CASE("G1 examples") {
  const auto w32 = build_g1(3, 2, RingSpec::integers());
  CHECK(w32.dimension == 2);
  CHECK(w32.generators[0].is_integral());
  CHECK(verify_witness(w32).closure_order == 6);
  const auto w54 = build_g1(5, 4, RingSpec::integers());
  CHECK(w54.dimension == 4);
  CHECK(verify_witness(w54).closure_order == 20);
  const auto w52 = build_g1(5, 2, RingSpec::cyclotomic(5));
  CHECK(w52.dimension == 2);
  CHECK(w52.construction == "monomial");
  CHECK(verify_witness(w52).closure_order == 10);
  for (std::uint64_t p : {3, 5, 7, 11, 13})
    CHECK(det(build_g1(p, p - 1, RingSpec::integers()).generators[0]) == CycNum(1));
}

TEST_CASE("G1 over many rings verifies") {
  const std::vector<RingSpec> rings = {RingSpec::integers(),       RingSpec::cyclotomic(3),  RingSpec::cyclotomic(4),
                                       RingSpec::cyclotomic(5),    RingSpec::cyclotomic(7),  RingSpec::quadratic(-7),
                                       RingSpec::quadratic(5),     RingSpec::quadratic(-3),  RingSpec::quadratic(13),
                                       RingSpec::subcyclotomic(7, 2), RingSpec::subcyclotomic(13, 3),
                                       RingSpec::subcyclotomic(13, 4), RingSpec::subcyclotomic(13, 6)};
  for (std::uint64_t p : {3, 5, 7, 13})
    for (const auto& r : rings) {
      std::uint64_t l;
      try {
        l = compute_l(r, p);
      } catch (const std::exception&) {
        continue;
      }
      for (auto m : divisors(p - 1)) {
        const auto w = build_g1(p, m, r);
        CHECK(w.dimension == m * l / gcd_u64(m, l));
        check_verified(w);
        if (w.dimension < kMaxWitnessDimension) check_verified(sl_pad(w));
      }
    }
}

TEST_CASE("sl_pad") {
  const auto pad = sl_pad(build_g1(3, 2, RingSpec::integers()));
  CHECK(pad.dimension == 3);
  CHECK(pad.claims_sl);
  const auto c = verify_witness(pad);
  CHECK(c.closure_order == 6);
  CHECK(c.all_det_one);

  WitnessEmbedding trivial;
  trivial.kind = WitnessKind::g1(3, 1);
  trivial.dimension = 2;
  trivial.generators = {identity(2)};
  const auto tp = sl_pad(trivial);
  CHECK(tp.generators[0] == identity(3));

  WitnessEmbedding bad = trivial;
  bad.generators = {CycNum(2) * identity(2)};
  CHECK_THROWS_AS(sl_pad(bad), std::invalid_argument);
}

TEST_CASE("G2 examples") {
  const auto a = build_g2(5, 2, RingSpec::cyclotomic(20));
  CHECK(a.dimension == 2);
  const auto ca = verify_witness(a);
  CHECK(ca.closure_order == 20);
  CHECK(ca.all_det_one);
  CHECK(ca.verified);
  const auto b = build_g2(5, 4, RingSpec::cyclotomic(40));
  CHECK(b.dimension == 4);
  const auto cb = verify_witness(b);
  CHECK(cb.closure_order == 40);
  CHECK(cb.all_det_one);
  CHECK(det(b.generators[1]) == CycNum(1));
  CHECK_THROWS_AS(build_g2(5, 2, RingSpec::cyclotomic(5)), std::invalid_argument);
  check_verified(build_g2(7, 2, RingSpec::quadratic(-1)));
  check_verified(build_g2(13, 4, RingSpec::cyclotomic(8)));
}

TEST_CASE("extraspecial monomial model") {
  const auto w = build_extraspecial_monomial(3, 1);
  CHECK(w.dimension == 3);
  const auto c = verify_witness(w);
  CHECK(c.closure_order == 27);
  CHECK(c.all_det_one);
  std::size_t central = 0;
  for (const auto& e : c.group->elements()) {
    bool commutes = true;
    for (const auto& g : w.generators) commutes = commutes && e * g == g * e;
    if (!commutes) continue;
    ++central;
    bool scalar = false;
    for (std::int64_t k = 0; k < 3; ++k) scalar = scalar || e == CycMatrix::scalar(3, zeta(3, k));
    CHECK(scalar);
  }
  CHECK(central == 3);
  const auto& x = w.generators[0];
  const auto& z = w.generators[1];
  CHECK(z * x == zeta(3) * (x * z));
  check_verified(build_extraspecial_monomial(3, 2));
  check_verified(build_extraspecial_monomial(5, 1));
  check_verified(build_extraspecial_monomial(7, 1));
  CHECK_THROWS(build_extraspecial_monomial(3, 4));
}

TEST_CASE("blow_up to the integers") {
  const auto w = blow_up(build_extraspecial_monomial(3, 1));
  CHECK(w.dimension == 6);
  CHECK(w.ring == RingSpec::integers());
  for (const auto& g : w.generators) CHECK(g.is_integral());
  const auto c = verify_witness(w);
  CHECK(c.closure_order == 27);
  CHECK(c.all_det_one);

  WitnessEmbedding id;
  id.kind = WitnessKind::e(5, 1);
  id.dimension = 2;
  id.generators = {identity(2, 5)};
  CHECK(blow_up(id).generators[0] == identity(8));

  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> k(0, 4), perm(0, 1), coef(-2, 2);
  for (int t = 0; t < 20; ++t) {
    std::vector<CycMatrix> gens;
    for (int i = 0; i < 2; ++i) {
      CycMatrix m(2, 5);
      const int s = perm(rng);
      m.set(0, s, CycNum(coef(rng)) * zeta(5, k(rng)) + CycNum(coef(rng)));
      m.set(1, 1 - s, zeta(5, k(rng)));
      gens.push_back(m);
    }
    gens.push_back(gens[0] * gens[1]);
    WitnessEmbedding pair;
    pair.kind = WitnessKind::e(5, 1);
    pair.dimension = 2;
    pair.generators = gens;
    const auto big = blow_up(pair);
    CHECK(big.generators[0] * big.generators[1] == big.generators[2]);
  }
  CycMatrix half(1, 5);
  half.set(0, 0, CycNum(Rational(1, 2)) * zeta(5));
  id.dimension = 1;
  id.generators = {half};
  CHECK_THROWS(blow_up(id));
}

TEST_CASE("blow_up homomorphism on witness generators") {
  for (const auto& w : {build_extraspecial_monomial(3, 1), build_extraspecial_monomial(5, 1),
                        build_g1(7, 3, RingSpec::cyclotomic(7))}) {
    WitnessEmbedding prods = w;
    prods.generators.clear();
    for (const auto& a : w.generators)
      for (const auto& b : w.generators) {
        prods.generators.push_back(a);
        prods.generators.push_back(b);
        prods.generators.push_back(a * b);
      }
    const auto big = blow_up(prods);
    for (std::size_t i = 0; i + 2 < big.generators.size(); i += 3)
      CHECK(big.generators[i] * big.generators[i + 1] == big.generators[i + 2]);
    check_verified(blow_up(w));
  }
}

TEST_CASE("E(2, m) over the integers") {
  const auto d = build_e2m_integer(1);
  auto c = verify_witness(d);
  CHECK(c.closure_order == 8);
  CHECK_FALSE(c.all_det_one);
  const CycNum dets = c.generator_dets[0] * c.generator_dets[1];
  CHECK(dets == CycNum(-1));
  const auto pad = sl_pad(d);
  c = verify_witness(pad);
  CHECK(pad.dimension == 3);
  CHECK(c.closure_order == 8);
  CHECK(c.all_det_one);
  for (std::uint64_t m = 2; m <= 4; ++m) {
    const auto e = build_e2m_integer(m);
    CHECK(e.dimension == (1u << m));
    c = verify_witness(e);
    CHECK(c.closure_order == (1u << (2 * m + 1)));
    CHECK(c.all_det_one);
    CHECK(c.verified);
  }
}

TEST_CASE("Q8") {
  const auto q = build_q8();
  const auto c = verify_witness(q);
  CHECK(c.closure_order == 8);
  CHECK(c.all_det_one);
  const auto& i = q.generators[0];
  const auto& j = q.generators[1];
  const CycMatrix k = i * j;
  CHECK(k * k == CycNum(-1) * identity(2));
  CHECK(i * j == CycNum(-1) * (j * i));
  const CycMatrix minus = CycNum(-1) * identity(2);
  CHECK(minus * minus == identity(2));
}

TEST_CASE("witness menus") {
  CHECK(has_kind(witness_menu(3, 2, RingSpec::integers()).gl, WitnessKind::g1(3, 2)));
  CHECK(has_kind(witness_menu(2, 4, RingSpec::integers()).gl, WitnessKind::e(2, 2)));
  CHECK(has_kind(witness_menu(2, 4, RingSpec::integers()).sl, WitnessKind::e(2, 2)));
  const auto empty = witness_menu(5, 3, RingSpec::integers());
  CHECK(empty.gl.empty());
  CHECK(empty.sl.empty());
  CHECK(has_kind(witness_menu(2, 2, RingSpec::cyclotomic(4)).sl, WitnessKind::q8()));
  CHECK_FALSE(has_kind(witness_menu(2, 2, RingSpec::integers()).sl, WitnessKind::d8()));
  CHECK(has_kind(witness_menu(2, 3, RingSpec::integers()).sl, WitnessKind::d8()));
  CHECK(has_kind(witness_menu(3, 6, RingSpec::integers()).gl, WitnessKind::e(3, 1)));
  CHECK_FALSE(has_kind(witness_menu(3, 5, RingSpec::integers()).gl, WitnessKind::e(3, 1)));
  CHECK(has_kind(witness_menu(5, 2, RingSpec::cyclotomic(20)).sl, WitnessKind::g2(5, 2)));

  for (const auto& ring : {RingSpec::integers(), RingSpec::cyclotomic(3), RingSpec::quadratic(-7)})
    for (std::uint64_t p : {2, 3, 7})
      for (std::uint64_t n = 1; n <= 7; ++n) {
        const auto menu = witness_menu(p, n, ring);
        for (const auto& w : menu.gl) {
          CHECK(w.dimension <= n);
          check_verified(w);
        }
        for (const auto& w : menu.sl) {
          CHECK(w.dimension <= n);
          CHECK(w.claims_sl);
          check_verified(w);
        }
      }
}
