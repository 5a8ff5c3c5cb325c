#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N).
//
// A CycNum is stored in the power basis 1, zeta_N, ..., zeta_N^(phi(N)-1)
// with integer numerators over one shared positive denominator, reduced so
// that gcd(numerators, denominator) = 1. The representation is unique for a
// fixed conductor, so equality at equal conductors is coordinatewise.

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace yagita {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense integer polynomial, index i = coefficient of x^i, no trailing zeros.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  const std::vector<Integer>& coeffs() const noexcept { return c_; }
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  const Integer& operator[](std::size_t i) const { return c_[i]; }

  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
  std::string to_string() const;

 private:
  std::vector<Integer> c_;
};

/// Exact quotient a / b; b must be monic and divide a exactly, otherwise
/// std::domain_error.
IntPoly exact_divide_monic(const IntPoly& a, const IntPoly& b);

/// Phi_N. Results are memoised in a mutex-guarded table.
const IntPoly& cyclotomic_poly(std::uint64_t n);

class CycNum {
 public:
  /// Zero, conductor 1.
  CycNum();
  CycNum(long v);  // NOLINT(google-explicit-constructor): integers are field elements
  explicit CycNum(const Rational& r, std::uint64_t conductor = 1);

  /// Builds sum_k coords[k] zeta_N^k / den for arbitrary length coords,
  /// reducing modulo Phi_N.
  static CycNum from_coords(std::uint64_t conductor, std::vector<Integer> coords, Integer den = 1);
  /// zeta_N^k (k may be negative).
  static CycNum zeta(std::uint64_t conductor, std::int64_t k = 1);

  std::uint64_t conductor() const noexcept { return n_; }
  const std::vector<Integer>& numerators() const noexcept { return num_; }
  const Integer& denominator() const noexcept { return den_; }
  bool is_zero() const;
  bool is_integral() const { return den_ == 1; }

  CycNum operator-() const;
  friend CycNum operator+(const CycNum& a, const CycNum& b);
  friend CycNum operator-(const CycNum& a, const CycNum& b);
  friend CycNum operator*(const CycNum& a, const CycNum& b);
  /// Throws std::domain_error on division by zero.
  friend CycNum operator/(const CycNum& a, const CycNum& b);
  CycNum& operator+=(const CycNum& o) { return *this = *this + o; }
  CycNum& operator-=(const CycNum& o) { return *this = *this - o; }
  CycNum& operator*=(const CycNum& o) { return *this = *this * o; }
  /// Semantic equality: conductors are unified first.
  friend bool operator==(const CycNum& a, const CycNum& b);

  /// Multiplicative inverse via the extended Euclidean algorithm of the
  /// numerator polynomial against Phi_N over Q. Throws std::domain_error on 0.
  CycNum inverse() const;
  CycNum pow(std::int64_t e) const;

  /// Same element with conductor target (zeta_N -> zeta_target^(target/N)).
  /// Throws std::invalid_argument unless N divides target.
  CycNum embed(std::uint64_t target) const;
  /// zeta_N -> zeta_N^k; requires gcd(k, N) = 1.
  CycNum galois(std::int64_t k) const;
  std::optional<Rational> as_rational() const;

  /// Serialised (conductor, numerators, denominator); equal keys iff equal
  /// numbers at the same conductor.
  std::string key() const;
  /// Human-readable form such as "-1 + 2*z12^3" or "(1 + z5)/2".
  std::string to_string() const;

  nlohmann::json to_json() const;
  static CycNum from_json(const nlohmann::json& j);

 private:
  void normalize();
  std::uint64_t n_;
  std::vector<Integer> num_;
  Integer den_;
};

CycNum zeta(std::uint64_t conductor, std::int64_t k = 1);
CycNum invert(const CycNum& x);
CycNum embed_conductor(const CycNum& x, std::uint64_t target);
CycNum galois_apply(const CycNum& x, std::int64_t k);
std::optional<Rational> as_rational(const CycNum& x);

/// Integer JSON value: a number when it fits in int64, otherwise a decimal
/// string. Readers accept either.
nlohmann::json integer_to_json(const Integer& v);
Integer integer_from_json(const nlohmann::json& j);

}  // namespace yagita
