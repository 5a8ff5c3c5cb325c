#pragma once

#include <cstdint>
#include <string>

namespace yagita {

/// The finite groups used as lower-bound witnesses.
///   G1(p, m)  split metacyclic C_p : C_m, C_m acting faithfully (p odd, m | p-1)
///   G2(p, m)  C_p : C_2m acting through its quotient C_m (p odd, m even, m | p-1)
///   E(p, m)   extraspecial of order p^(2m+1), exponent p for odd p;
///             E(2, m) is the central product of m dihedral groups of order 8
///   Q8, D8    quaternion and dihedral groups of order 8 (p = 2)
struct WitnessKind {
  enum class Family { G1, G2, E, Q8, D8 };
  Family family;
  std::uint64_t p = 2;
  std::uint64_t m = 1;

  static WitnessKind g1(std::uint64_t p, std::uint64_t m) { return {Family::G1, p, m}; }
  static WitnessKind g2(std::uint64_t p, std::uint64_t m) { return {Family::G2, p, m}; }
  static WitnessKind e(std::uint64_t p, std::uint64_t m) { return {Family::E, p, m}; }
  static WitnessKind q8() { return {Family::Q8, 2, 1}; }
  static WitnessKind d8() { return {Family::D8, 2, 1}; }

  /// Throws std::invalid_argument when the parameters violate the
  /// divisibility conditions above.
  void validate() const;
  /// Order of the abstract group.
  std::uint64_t abstract_order() const;

  /// "g1:p:m", "g2:p:m", "e:p:m", "q8", "d8".
  static WitnessKind parse(const std::string& text);
  std::string to_string() const;

  friend bool operator==(const WitnessKind&, const WitnessKind&) = default;
  friend auto operator<=>(const WitnessKind&, const WitnessKind&) = default;
};

}  // namespace yagita
