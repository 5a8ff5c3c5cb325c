#include "doctest.h"

#include <random>
#include <stdexcept>

#include "yagita/fppoly.hpp"

using namespace yagita;

namespace {

FpPoly random_poly(std::uint64_t p, std::mt19937_64& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<std::int64_t> c(0, static_cast<std::int64_t>(p) - 1);
  std::vector<std::int64_t> v(deg(rng) + 1);
  for (auto& x : v) x = c(rng);
  return FpPoly(p, v);
}

// Product of (1 + a_i x) with a_i random units.
FpPoly random_linear_product(std::uint64_t p, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(1, 10);
  std::uniform_int_distribution<std::int64_t> unit(1, static_cast<std::int64_t>(p) - 1);
  FpPoly f = FpPoly::constant(p, 1);
  for (int i = count(rng); i > 0; --i) f = f * FpPoly::linear_one_plus(p, unit(rng));
  return f;
}

}  // namespace

TEST_CASE("exponent_gcd examples") {
  CHECK(exponent_gcd(FpPoly(3, {1, 0, 2})) == ExtNat::finite(2));
  CHECK(exponent_gcd(FpPoly(7, {1, 1})) == ExtNat::finite(1));
  CHECK(exponent_gcd(FpPoly::constant(5, 1)).is_infinite());
  CHECK(exponent_gcd(FpPoly(5, {3, 0, 0, 0, 0, 0, 2, 0, 0, 4})) == ExtNat::finite(3));
}

TEST_CASE("multiply and evaluate") {
  CHECK(multiply(FpPoly(3, {1, 1}), FpPoly(3, {1, 2})) == FpPoly(3, {1, 0, 2}));
  CHECK(evaluate(FpPoly(11, {1, 1}), 10) == 0);
  const FpPoly f(7, {3, 0, 5, 1});
  CHECK(f * FpPoly::constant(7, 1) == f);
  CHECK(FpPoly(5, {-1, 6, 10}) == FpPoly(5, {4, 1}));
  CHECK(FpPoly(5, {0, 0}).is_zero());
}

TEST_CASE("all_roots_in_units examples") {
  const auto scan = all_roots_in_units(FpPoly(3, {1, 0, 2}));
  CHECK(scan.all_in_units);
  REQUIRE(scan.roots.size() == 2);
  CHECK(scan.roots[0] == std::pair<std::uint64_t, unsigned>{1, 1});
  CHECK(scan.roots[1] == std::pair<std::uint64_t, unsigned>{2, 1});
  CHECK_FALSE(all_roots_in_units(FpPoly(3, {0, 1})).all_in_units);
  CHECK_FALSE(all_roots_in_units(FpPoly(3, {1, 0, 1})).all_in_units);
  CHECK(all_roots_in_units(FpPoly(3, {1, 0, 1})).roots.empty());
  CHECK_THROWS(all_roots_in_units(FpPoly(3)));
  const auto cube = all_roots_in_units(FpPoly(3, {1, 1}).pow(3));
  CHECK(cube.all_in_units);
  REQUIRE(cube.roots.size() == 1);
  CHECK(cube.roots[0] == std::pair<std::uint64_t, unsigned>{2, 3});
}

TEST_CASE("mp_q_decompose") {
  CHECK(mp_q_decompose(12, 3) == MpQ{4, 1});
  CHECK(mp_q_decompose(1, 5) == MpQ{1, 0});
  CHECK(mp_q_decompose(50, 5) == MpQ{2, 2});
}

TEST_CASE("check_prop6 examples") {
  FpPoly all_units = FpPoly::constant(5, 1);
  for (int a = 1; a < 5; ++a) all_units = all_units * FpPoly::linear_one_plus(5, a);
  CHECK(all_units == FpPoly(5, {1, 0, 0, 0, 4}));
  auto v = check_prop6(all_units);
  CHECK(v.gcd == 4);
  CHECK(v.m == 4);
  CHECK(v.q == 0);
  CHECK(v.holds);

  v = check_prop6(FpPoly(3, {1, 1}).pow(3));
  CHECK(v.gcd == 3);
  CHECK(v.m == 1);
  CHECK(v.q == 1);
  CHECK(v.holds);

  v = check_prop6(FpPoly(3, {1, 0, 2}));
  CHECK(v.gcd == 2);
  CHECK(v.holds);

  CHECK_THROWS_AS(check_prop6(FpPoly::constant(3, 2)), std::invalid_argument);
  CHECK_THROWS_AS(check_prop6(FpPoly(3, {1, 0, 1})), std::invalid_argument);
}

TEST_CASE("random products of linear factors satisfy the m p^q shape") {
  std::mt19937_64 rng(20260101);
  for (std::uint64_t p : {3, 5, 7, 11, 13})
    for (int i = 0; i < 300; ++i) {
      const FpPoly f = random_linear_product(p, rng);
      if (f.is_constant()) continue;
      const auto v = check_prop6(f);
      CHECK(v.holds);
      CHECK((p - 1) % v.m == 0);
    }
}

TEST_CASE("random_unit_root_poly has unit roots only") {
  std::mt19937_64 rng(7);
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13})
    for (int i = 0; i < 200; ++i) {
      const FpPoly f = random_unit_root_poly(p, rng);
      CHECK(f.degree() <= 48);
      if (f.is_constant()) continue;
      CHECK(all_roots_in_units(f).all_in_units);
      CHECK(check_prop6(f).holds);
    }
}

TEST_CASE("algebraic properties") {
  std::mt19937_64 rng(42);
  for (std::uint64_t p : {2, 3, 5, 7, 13}) {
    for (int i = 0; i < 100; ++i) {
      const FpPoly f = random_poly(p, rng, 8);
      const FpPoly g = random_poly(p, rng, 8);
      // Frobenius
      CHECK(f.pow(p) == f.substitute_power(p));
      const auto ef = exponent_gcd(f), eg = exponent_gcd(g), efg = exponent_gcd(f * g);
      if (ef.is_finite() && eg.is_finite() && efg.is_finite())
        CHECK(efg.value() % std::gcd(ef.value(), eg.value()) == 0);
      for (std::uint64_t k : {2, 3, 5})
        if (ef.is_finite()) CHECK(exponent_gcd(f.substitute_power(k)) == ExtNat::finite(k * ef.value()));
      for (std::uint64_t r = 0; r < p; ++r) {
        CHECK(evaluate(f * g, r) == evaluate(f, r) * evaluate(g, r) % p);
        CHECK(evaluate(f + g, r) == (evaluate(f, r) + evaluate(g, r)) % p);
      }
      CHECK(FpPoly::parse(f.to_string()) == f);
    }
  }
}

TEST_CASE("text form") {
  CHECK(FpPoly(3, {1, 1, 2}).to_string() == "1 + x + 2*x^2 (mod 3)");
  CHECK(FpPoly(5).to_string() == "0 (mod 5)");
  CHECK(FpPoly::parse("x^2 - 2*x + 1 (mod 5)") == FpPoly(5, {1, 3, 1}));
  CHECK(FpPoly::parse("x + x (mod 3)") == FpPoly(3, {0, 2}));
  CHECK_THROWS(FpPoly::parse("1 + x"));
  CHECK_THROWS(FpPoly::parse("1 + y (mod 3)"));
}
