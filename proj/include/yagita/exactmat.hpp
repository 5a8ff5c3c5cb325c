#pragma once

// Exact square matrices over cyclotomic fields and finite matrix groups.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "yagita/cyclo.hpp"

namespace yagita {

inline constexpr std::uint64_t kDefaultCap = 1'000'000;

/// Square matrix over Q(zeta_N); every entry carries the matrix conductor.
class CycMatrix {
 public:
  /// Zero matrix.
  explicit CycMatrix(std::size_t n = 0, std::uint64_t conductor = 1);
  /// Entries are lifted to the lcm of their conductors.
  static CycMatrix from_rows(const std::vector<std::vector<CycNum>>& rows);
  static CycMatrix from_ints(const std::vector<std::vector<long>>& rows);
  static CycMatrix identity(std::size_t n, std::uint64_t conductor = 1);
  static CycMatrix scalar(std::size_t n, const CycNum& s);
  static CycMatrix diagonal(const std::vector<CycNum>& d);

  std::size_t size() const noexcept { return n_; }
  std::uint64_t conductor() const noexcept { return conductor_; }
  const CycNum& operator()(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }
  /// Lifts the whole matrix if v lives in a larger field.
  void set(std::size_t i, std::size_t j, const CycNum& v);
  const std::vector<CycNum>& entries() const noexcept { return e_; }

  /// Re-express over conductor target (a multiple of the current one).
  CycMatrix embed(std::uint64_t target) const;
  /// Conductor 1 copy when every entry is rational, otherwise *this.
  CycMatrix lowered() const;
  CycMatrix galois(std::int64_t k) const;

  bool is_identity() const;
  bool is_integral() const;

  friend CycMatrix operator*(const CycMatrix& a, const CycMatrix& b);
  friend CycMatrix operator+(const CycMatrix& a, const CycMatrix& b);
  friend CycMatrix operator*(const CycNum& s, const CycMatrix& a);
  friend bool operator==(const CycMatrix& a, const CycMatrix& b);

  /// Gauss-Jordan over the field; throws std::domain_error when singular.
  CycMatrix inverse() const;
  CycMatrix pow(std::int64_t e) const;

  /// Canonical serialised key; the conductor is part of the key, so callers
  /// compare keys only between matrices of one conductor.
  std::string key() const;
  std::string to_string() const;

  nlohmann::json to_json() const;
  static CycMatrix from_json(const nlohmann::json& j);

 private:
  std::size_t n_;
  std::uint64_t conductor_;
  std::vector<CycNum> e_;
};

CycMatrix identity(std::size_t n, std::uint64_t conductor = 1);
CycMatrix multiply(const CycMatrix& a, const CycMatrix& b);
/// Tensor product; (A (x) B)[(i,k),(j,l)] = A[i,j] B[k,l].
CycMatrix kron(const CycMatrix& a, const CycMatrix& b);
CycMatrix block_diag(const CycMatrix& a, const CycMatrix& b);
CycNum trace(const CycMatrix& a);

/// Bareiss elimination with exact division (row pivoting on zeros). Sizes
/// up to 3 use cofactor expansion directly.
CycNum det(const CycMatrix& a);
/// Laplace expansion; exponential, kept for small sizes and cross-checks.
CycNum det_cofactor(const CycMatrix& a);

/// Least k >= 1 with A^k = I; throws CapExceeded if none up to cap.
std::uint64_t element_order(const CycMatrix& a, std::uint64_t cap = kDefaultCap);

/// Breadth-first closure under left multiplication by the generators,
/// starting from the identity. Throws CapExceeded past cap elements and
/// std::invalid_argument on an empty or ragged generator list.
std::vector<CycMatrix> closure(const std::vector<CycMatrix>& gens, std::uint64_t cap = kDefaultCap);

class MatrixGroup {
 public:
  explicit MatrixGroup(std::vector<CycMatrix> generators, std::uint64_t cap = kDefaultCap);

  const std::vector<CycMatrix>& generators() const noexcept { return gens_; }
  std::uint64_t cap() const noexcept { return cap_; }
  bool enumerated() const noexcept { return elements_.has_value(); }
  /// Runs closure once and caches the result.
  const std::vector<CycMatrix>& enumerate();
  /// Requires enumerate() to have run.
  const std::vector<CycMatrix>& elements() const;
  std::uint64_t order() const { return elements().size(); }

 private:
  std::vector<CycMatrix> gens_;
  std::uint64_t cap_;
  std::optional<std::vector<CycMatrix>> elements_;
};

/// One generator per cyclic subgroup of order p (p prime), in the order the
/// elements were enumerated.
std::vector<CycMatrix> order_p_cyclic_subgroups(const MatrixGroup& group, std::uint64_t p);

/// A letter g_i^e of a word in the generators; e may be negative.
struct Letter {
  std::size_t gen;
  std::int64_t exp;
};
using Word = std::vector<Letter>;

/// Words written with 'a', 'b', ... for generators and 'A', 'B', ... for
/// their inverses, with optional integer powers: "a^3", "b a B a^-2".
Word parse_word(const std::string& text);
std::string word_to_string(const Word& w);

CycMatrix evaluate_word(const std::vector<CycMatrix>& gens, const Word& w);
/// True when every relator evaluates to the identity.
bool relations_check(const std::vector<CycMatrix>& gens, const std::vector<Word>& relators);

}  // namespace yagita
