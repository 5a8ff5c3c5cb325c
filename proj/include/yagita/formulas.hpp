#pragma once

// Closed-form Yagita invariants of GL_n and SL_n over subrings of C.
//
// Everything is exact integer arithmetic. Where the SL value is only known
// up to a factor of two the result says so (SlResult::ambiguous_half)
// instead of picking one.

#include <cstdint>
#include <string>

#include "yagita/ringspec.hpp"

namespace yagita {

/// Greatest power of p that is <= num/den. Throws std::invalid_argument
/// unless num/den >= 1.
std::uint64_t psi(std::uint64_t num, std::uint64_t den, std::uint64_t p);
inline std::uint64_t psi(std::uint64_t t, std::uint64_t p) { return psi(t, 1, p); }

/// lcm{ m : l | m, m | p-1, m <= n }; 1 for the empty set.
std::uint64_t middle_row_lcm(std::uint64_t p, std::uint64_t n, std::uint64_t l);

/// Value for GL_n(O) where l = [F(zeta_p):F]. Requires l | p-1, n >= 1.
std::uint64_t yagita_gl(std::uint64_t p, std::uint64_t n, std::uint64_t l);

struct SlResult {
  enum class Kind { exact, ambiguous_half };
  Kind kind;
  /// The full value; for ambiguous_half the invariant is value or value/2.
  std::uint64_t value;

  bool is_exact() const noexcept { return kind == Kind::exact; }
  std::string to_string() const;
  friend bool operator==(const SlResult&, const SlResult&) = default;

  static SlResult exact(std::uint64_t v) { return {Kind::exact, v}; }
  static SlResult ambiguous(std::uint64_t v) { return {Kind::ambiguous_half, v}; }
};

/// SL_n(O), n >= 2, for integrally closed O with the given l. Exact unless
/// one of the two exceptional shapes holds with no suitable root of -1:
///   p = 2, n = 2 and i not in O;
///   p odd, n = 2^r l with 2^r | (p-1)/l, and no n-th root of -1 in O.
SlResult yagita_sl(std::uint64_t p, std::uint64_t n, std::uint64_t l, const RingSpec& ring);

/// GL_n(Z) and SL_n(Z); both always exact.
std::uint64_t yagita_gl_Z(std::uint64_t p, std::uint64_t n);
std::uint64_t yagita_sl_Z(std::uint64_t p, std::uint64_t n);

/// GL_n(R) / SL_n(R) for an arbitrary subring R of C containing zeta_p.
std::uint64_t yagita_gl_R(std::uint64_t p, std::uint64_t n);
/// Exact when n >= max(p, 3), or p odd and R has a (p-1)-st root of -1,
/// or n = p = 2 and i is in R. Throws std::invalid_argument when the ring
/// does not contain zeta_p.
SlResult yagita_sl_R(std::uint64_t p, std::uint64_t n, const RingSpec& ring);

/// The sharpest SL statement available for ring: the Z-specific values for
/// Z, the union of both criteria when zeta_p is in O, the general one
/// otherwise.
SlResult yagita_sl_best(std::uint64_t p, std::uint64_t n, const RingSpec& ring);

/// lcm{ m <= n : m = l q^r, q prime, r >= 0, q^r | (p-1)/l }.
/// Requires l | p-1 and l <= n <= p-1.
std::uint64_t lcm_form_reduced(std::uint64_t p, std::uint64_t l, std::uint64_t n);

}  // namespace yagita

#include "yagita/witness_kind.hpp"

namespace yagita {

/// Known Yagita invariants of the witness groups:
///   G1(p,m), G2(p,m) -> 2m;  E(p,m) -> 2p^m (p odd), 2^(m+1) (p = 2);
///   D8 = E(2,1) -> 4;  Q8 -> 4.
std::uint64_t oracle_yagita(const WitnessKind& kind);

}  // namespace yagita
