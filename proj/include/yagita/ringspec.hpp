#pragma once

// Symbolic descriptions of integrally closed coefficient rings O inside C.
//
// Only the fraction field F matters for the invariants computed here, and
// only through two numbers: the degree l = [F(zeta_p):F] and the order M of
// the (cyclic) group of roots of unity in F.

#include <cstdint>
#include <string>
#include <variant>

namespace yagita {

struct RationalIntegers {
  friend bool operator==(const RationalIntegers&, const RationalIntegers&) = default;
};

/// Z[zeta_N].
struct Cyclotomic {
  std::uint64_t conductor;
  friend bool operator==(const Cyclotomic&, const Cyclotomic&) = default;
};

/// Ring of integers of Q(sqrt(D)), D squarefree and not in {0, 1}.
struct QuadraticOrder {
  std::int64_t discriminant_root;
  friend bool operator==(const QuadraticOrder&, const QuadraticOrder&) = default;
};

/// Ring of integers of the unique subfield of Q(zeta_p) of degree d over Q.
struct SubCyclotomicFixedField {
  std::uint64_t prime;
  std::uint64_t degree;
  friend bool operator==(const SubCyclotomicFixedField&, const SubCyclotomicFixedField&) = default;
};

/// User-asserted ring: l and the root-of-unity order M are taken on trust.
struct AbstractRing {
  std::uint64_t l;
  std::uint64_t roots_of_unity;
  friend bool operator==(const AbstractRing&, const AbstractRing&) = default;
};

class RingSpec {
 public:
  using Kind = std::variant<RationalIntegers, Cyclotomic, QuadraticOrder, SubCyclotomicFixedField, AbstractRing>;

  /// Validates the kind's invariants; throws std::invalid_argument.
  explicit RingSpec(Kind kind);

  static RingSpec integers() { return RingSpec(RationalIntegers{}); }
  static RingSpec cyclotomic(std::uint64_t n) { return RingSpec(Cyclotomic{n}); }
  static RingSpec quadratic(std::int64_t d) { return RingSpec(QuadraticOrder{d}); }
  static RingSpec subcyclotomic(std::uint64_t p, std::uint64_t d) { return RingSpec(SubCyclotomicFixedField{p, d}); }
  static RingSpec abstract(std::uint64_t l, std::uint64_t m) { return RingSpec(AbstractRing{l, m}); }

  /// Accepts "Z", "Z[i]", "cyclotomic:N", "quadratic:D", "subcyclotomic:p:d",
  /// "abstract:l:M".
  static RingSpec parse(const std::string& text);
  /// Inverse of parse (Z[i] is printed as cyclotomic:4).
  std::string to_string() const;

  const Kind& kind() const noexcept { return kind_; }
  bool is_integers() const noexcept { return std::holds_alternative<RationalIntegers>(kind_); }

  friend bool operator==(const RingSpec&, const RingSpec&) = default;

 private:
  Kind kind_;
};

/// l = [F(zeta_p):F]. Throws UnsupportedField when no rule applies.
std::uint64_t compute_l(const RingSpec& ring, std::uint64_t p);

/// Order M of the group of roots of unity of F (always even).
std::uint64_t roots_of_unity_order(const RingSpec& ring);

/// Whether some x in F with x^n = -1 exists. Solvable in the cyclic group
/// mu_M iff gcd(n, M) divides M/2.
bool has_nth_root_of_minus_one(const RingSpec& ring, std::uint64_t n);

bool contains_zeta_p(const RingSpec& ring, std::uint64_t p);

}  // namespace yagita
