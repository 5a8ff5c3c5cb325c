#pragma once

// Polynomials over F_p. The variable x stands for the degree-2 generator of
// H^*(BC_p; Z) reduced mod p, so exponents here are half the cohomological
// degree.

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "yagita/arith.hpp"

namespace yagita {

class FpPoly {
 public:
  /// Zero polynomial over F_p. Throws std::invalid_argument unless p is prime.
  explicit FpPoly(std::uint64_t p);
  /// Coefficients are reduced mod p (negative values allowed) and trimmed.
  FpPoly(std::uint64_t p, const std::vector<std::int64_t>& coeffs);

  static FpPoly constant(std::uint64_t p, std::int64_t c) { return FpPoly(p, {c}); }
  /// 1 + a x
  static FpPoly linear_one_plus(std::uint64_t p, std::int64_t a) { return FpPoly(p, {1, a}); }

  std::uint64_t prime() const noexcept { return p_; }
  const std::vector<std::uint64_t>& coeffs() const noexcept { return c_; }
  std::uint64_t coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }

  std::uint64_t evaluate(std::uint64_t r) const;
  /// f(x) -> f(x^k)
  FpPoly substitute_power(std::uint64_t k) const;
  FpPoly pow(std::uint64_t e) const;

  friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator+(const FpPoly& a, const FpPoly& b);
  friend bool operator==(const FpPoly&, const FpPoly&) = default;

  /// "c0 + c1*x + c2*x^2 (mod p)", zero terms omitted, unit coefficients on
  /// x-powers dropped.
  std::string to_string() const;
  /// Accepts the to_string form; terms may be in any order, coefficients
  /// may be omitted ("x^2") or negative ("- 2*x"), and repeated exponents add.
  static FpPoly parse(const std::string& text);

 private:
  void trim();
  std::uint64_t p_;
  std::vector<std::uint64_t> c_;
};

FpPoly multiply(const FpPoly& a, const FpPoly& b);
std::uint64_t evaluate(const FpPoly& f, std::uint64_t r);

/// gcd of the exponents carrying a nonzero coefficient, ignoring the
/// constant term. f lies in F_p[x^n] exactly when n divides this; constant
/// polynomials lie in every such subalgebra and give infinity.
ExtNat exponent_gcd(const FpPoly& f);

struct RootScan {
  bool all_in_units = false;
  /// (root, multiplicity) in increasing root order. Only roots in F_p^x
  /// are tried.
  std::vector<std::pair<std::uint64_t, unsigned>> roots;
};

/// Strips linear factors (x - r), r in F_p^x, by trial division; all roots
/// are units iff what remains is constant. Throws on the zero polynomial.
RootScan all_roots_in_units(const FpPoly& f);

struct MpQ {
  std::uint64_t m;
  unsigned q;
  friend bool operator==(const MpQ&, const MpQ&) = default;
};

/// n = m p^q with p not dividing m.
MpQ mp_q_decompose(std::uint64_t n, std::uint64_t p);

struct Prop6Verdict {
  std::uint64_t gcd = 0;
  std::uint64_t m = 0;
  unsigned q = 0;
  bool holds = false;
};

/// For f with every root in F_p^x and f = g(x^n), n = exponent_gcd(f) has
/// the shape m p^q with m | p-1. Throws std::invalid_argument when f is
/// constant or has a root outside F_p^x, and InternalError if the shape
/// check itself fails.
Prop6Verdict check_prop6(const FpPoly& f);

/// Random c * prod_i (x^d - b_i^d)^(e_i), raised to a random p^q, for a
/// random d | p-1; every root is a unit. Degree stays at most max_degree.
FpPoly random_unit_root_poly(std::uint64_t p, std::mt19937_64& rng, std::size_t max_degree = 48);

}  // namespace yagita
