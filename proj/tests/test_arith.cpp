#include "doctest.h"

#include <numeric>

#include "yagita/arith.hpp"
#include "yagita/errors.hpp"
#include "yagita/ringspec.hpp"

using namespace yagita;

namespace {

bool naive_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d < n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t naive_phi(std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t k = 1; k <= n; ++k) c += std::gcd(k, n) == 1;
  return c;
}

std::uint64_t naive_order(std::uint64_t a, std::uint64_t n) {
  std::uint64_t x = a % n, k = 1;
  while (x != 1 % n) {
    x = x * a % n;
    ++k;
  }
  return k;
}

}  // namespace

TEST_CASE("number theory helpers agree with brute force") {
  for (std::uint64_t n = 0; n < 400; ++n) CHECK(is_prime(n) == naive_prime(n));
  for (std::uint64_t n = 1; n < 300; ++n) {
    CHECK(euler_phi(n) == naive_phi(n));
    const auto ds = divisors(n);
    CHECK(ds.front() == 1);
    CHECK(ds.back() == n);
    std::uint64_t prod = 1;
    for (auto [q, e] : factorize(n))
      for (unsigned i = 0; i < e; ++i) prod *= q;
    CHECK(prod == n);
  }
  for (std::uint64_t p : {3, 5, 7, 11, 13, 97})
    for (std::uint64_t a = 1; a < p; ++a) CHECK(mult_order(a, p) == naive_order(a, p));
  CHECK(pow_mod(3, 200, 1000000007ULL) == pow_mod(9, 100, 1000000007ULL));
  CHECK(mod_floor(-1, 5) == 4);
  CHECK(squarefree_part(-12) == -3);
  CHECK(squarefree_part(50) == 2);
  CHECK(is_squarefree(-7));
  CHECK_FALSE(is_squarefree(18));
  CHECK_THROWS_AS(lcm_u64(~0ULL, ~0ULL - 1), std::overflow_error);
}

TEST_CASE("ExtNat") {
  const ExtNat inf = ExtNat::infinity();
  CHECK(inf.is_infinite());
  CHECK(inf.to_string() == "inf");
  CHECK(ExtNat::parse("inf") == inf);
  CHECK(ExtNat::parse("12") == ExtNat::finite(12));
  CHECK(lcm(ExtNat::finite(4), ExtNat::finite(6)) == ExtNat::finite(12));
  CHECK(lcm(ExtNat::finite(4), inf) == inf);
  CHECK_THROWS(inf.value());
}

TEST_CASE("compute_l examples") {
  CHECK(compute_l(RingSpec::integers(), 5) == 4);
  CHECK(compute_l(RingSpec::cyclotomic(7), 7) == 1);
  CHECK(compute_l(RingSpec::quadratic(-7), 7) == 3);
  CHECK(compute_l(RingSpec::subcyclotomic(7, 3), 7) == 2);
  CHECK(compute_l(RingSpec::quadratic(5), 5) == 2);
  CHECK(compute_l(RingSpec::quadratic(-5), 5) == 4);
  CHECK(compute_l(RingSpec::quadratic(-3), 3) == 1);
  CHECK(compute_l(RingSpec::cyclotomic(4), 5) == 4);
  CHECK(compute_l(RingSpec::cyclotomic(4), 2) == 1);
  CHECK(compute_l(RingSpec::abstract(3, 2), 7) == 3);
  CHECK_THROWS_AS(compute_l(RingSpec::subcyclotomic(7, 3), 5), UnsupportedField);
  CHECK_THROWS_AS(compute_l(RingSpec::abstract(4, 2), 7), UnsupportedField);
}

TEST_CASE("roots of unity") {
  CHECK(roots_of_unity_order(RingSpec::integers()) == 2);
  CHECK(roots_of_unity_order(RingSpec::cyclotomic(4)) == 4);
  CHECK(roots_of_unity_order(RingSpec::cyclotomic(5)) == 10);
  CHECK(roots_of_unity_order(RingSpec::quadratic(-1)) == 4);
  CHECK(roots_of_unity_order(RingSpec::quadratic(-3)) == 6);
  CHECK(roots_of_unity_order(RingSpec::quadratic(2)) == 2);
  CHECK(has_nth_root_of_minus_one(RingSpec::integers(), 3));
  CHECK_FALSE(has_nth_root_of_minus_one(RingSpec::integers(), 2));
  CHECK(has_nth_root_of_minus_one(RingSpec::cyclotomic(4), 2));
  CHECK(contains_zeta_p(RingSpec::cyclotomic(5), 5));
  CHECK_FALSE(contains_zeta_p(RingSpec::integers(), 3));
  CHECK(contains_zeta_p(RingSpec::cyclotomic(10), 5));
}

TEST_CASE("has_nth_root_of_minus_one matches enumeration in mu_M") {
  for (std::uint64_t M = 2; M <= 60; M += 2)
    for (std::uint64_t n = 1; n <= 30; ++n) {
      bool found = false;
      for (std::uint64_t t = 0; t < M && !found; ++t) found = (t * n) % M == M / 2;
      CHECK(has_nth_root_of_minus_one(RingSpec::abstract(1, M), n) == found);
    }
}

TEST_CASE("ringspec invariants") {
  std::vector<RingSpec> rings = {RingSpec::integers(), RingSpec::quadratic(-1), RingSpec::quadratic(-3),
                                 RingSpec::quadratic(5), RingSpec::quadratic(-7), RingSpec::quadratic(13)};
  for (std::uint64_t n : {1, 3, 4, 5, 7, 8, 12, 15, 20, 21}) rings.push_back(RingSpec::cyclotomic(n));
  for (std::uint64_t p = 2; p < 60; ++p) {
    if (!is_prime(p)) continue;
    for (const auto& r : rings) {
      const auto l = compute_l(r, p);
      CHECK((p - 1) % l == 0);
      CHECK(contains_zeta_p(r, p) == (l == 1));
      for (std::uint64_t n = 1; n < 20; n += 2) CHECK(has_nth_root_of_minus_one(r, n));
    }
    for (std::uint64_t n : {1, 3, 4, 8, 9, 25})
      if (n % p != 0) CHECK(compute_l(RingSpec::cyclotomic(n), p) == p - 1);
  }
}

TEST_CASE("ring parsing") {
  CHECK(RingSpec::parse("Z") == RingSpec::integers());
  CHECK(RingSpec::parse("Z[i]") == RingSpec::cyclotomic(4));
  CHECK(RingSpec::parse("quadratic:-7") == RingSpec::quadratic(-7));
  CHECK(RingSpec::parse("subcyclotomic:13:3") == RingSpec::subcyclotomic(13, 3));
  CHECK(RingSpec::parse("abstract:2:6") == RingSpec::abstract(2, 6));
  for (const char* s : {"Z", "cyclotomic:12", "quadratic:-7", "subcyclotomic:13:3", "abstract:2:6"})
    CHECK(RingSpec::parse(RingSpec::parse(s).to_string()) == RingSpec::parse(s));
  CHECK_THROWS(RingSpec::parse("quadratic:4"));
  CHECK_THROWS(RingSpec::parse("quadratic:1"));
  CHECK_THROWS(RingSpec::parse("subcyclotomic:7:4"));
  CHECK_THROWS(RingSpec::parse("abstract:1:3"));
  CHECK_THROWS(RingSpec::parse("cyclotomic:0"));
  CHECK_THROWS(RingSpec::parse("Q"));
}
