#pragma once

// Small integer helpers shared by every module.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace yagita {

bool is_prime(std::uint64_t n);
std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
/// Throws std::overflow_error when the result does not fit.
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t euler_phi(std::uint64_t n);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);
/// Multiplicative order of a modulo n; requires gcd(a, n) = 1.
std::uint64_t mult_order(std::uint64_t a, std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);
/// Prime factorisation as (prime, exponent) pairs, ascending.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);
/// Squarefree part with sign, e.g. -12 -> -3.
std::int64_t squarefree_part(std::int64_t d);
bool is_squarefree(std::int64_t d);
/// Least nonnegative representative of a mod n.
std::uint64_t mod_floor(std::int64_t a, std::uint64_t n);

/// Positive integer or infinity. Used for n(C)-style quantities, where an
/// unbounded supremum is a legitimate answer.
class ExtNat {
 public:
  static ExtNat infinity() { return ExtNat(); }
  static ExtNat finite(std::uint64_t v) { return ExtNat(v); }

  bool is_infinite() const noexcept { return !value_.has_value(); }
  bool is_finite() const noexcept { return value_.has_value(); }
  /// Throws std::logic_error on infinity.
  std::uint64_t value() const;
  std::string to_string() const;
  static ExtNat parse(const std::string& s);

  friend bool operator==(const ExtNat&, const ExtNat&) = default;

 private:
  ExtNat() = default;
  explicit ExtNat(std::uint64_t v) : value_(v) {}
  std::optional<std::uint64_t> value_;
};

/// lcm with the convention that anything involving infinity is infinity.
ExtNat lcm(const ExtNat& a, const ExtNat& b);

}  // namespace yagita
