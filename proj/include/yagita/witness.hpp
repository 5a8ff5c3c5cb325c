#pragma once

// Explicit matrix realisations of the witness groups over a given ring.
//
// All constructions go through the O-basis 1, zeta, ..., zeta^(l-1) of
// O[zeta_p]: multiplication by zeta_p is the companion matrix of the
// minimal polynomial of zeta_p over F, and the Galois group of F(zeta_p)/F
// (the order-l subgroup H of (Z/p)^x) acts by ordinary basis substitution.
// Both have entries in the fixed field of H intersected with O.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "yagita/exactmat.hpp"
#include "yagita/ringspec.hpp"
#include "yagita/witness_kind.hpp"

namespace yagita {

inline constexpr std::size_t kMaxWitnessDimension = 64;

/// Minimal polynomial of zeta_p over a field F with [F(zeta_p):F] = l.
class CyclotomicBasis {
 public:
  CyclotomicBasis(std::uint64_t p, std::uint64_t l);

  std::uint64_t prime() const noexcept { return p_; }
  std::uint64_t degree() const noexcept { return l_; }
  /// Units h mod p with h^l = 1.
  const std::vector<std::uint64_t>& galois_group() const noexcept { return h_; }
  /// Monic, ascending coefficients, length l + 1.
  const std::vector<CycNum>& minimal_polynomial() const noexcept { return mu_; }
  /// Multiplication by zeta_p.
  const CycMatrix& companion() const noexcept { return companion_; }
  /// Coordinates of zeta_p^e.
  std::vector<CycNum> coordinates(std::int64_t e) const;
  /// zeta^i -> zeta^(h i); h must lie in the Galois group.
  CycMatrix galois_matrix(std::uint64_t h) const;
  /// Image of an element of Z[zeta_p] under the induced O-linear action.
  CycMatrix multiplication_matrix(const CycNum& a) const;

 private:
  std::uint64_t p_;
  std::uint64_t l_;
  std::vector<std::uint64_t> h_;
  std::vector<CycNum> mu_;
  CycMatrix companion_;
  std::vector<CycMatrix> companion_powers_;
};

/// Companion matrix of Phi_p: multiplication by zeta_p on Z[zeta_p].
CycMatrix regular_rep_zeta(std::uint64_t p);
/// zeta^i -> zeta^(g i) on the power basis of Z[zeta_p].
CycMatrix galois_rep(std::uint64_t p, std::uint64_t g);
/// Least unit mod p of multiplicative order exactly m.
std::uint64_t unit_of_order(std::uint64_t p, std::uint64_t m);

struct WitnessEmbedding {
  WitnessKind kind;
  RingSpec ring = RingSpec::integers();
  /// How the matrices were obtained, e.g. "monomial", "sl_pad(galois)".
  std::string construction;
  std::size_t dimension = 0;
  /// l of the ring at kind.p; the Chern classes of order-p elements are
  /// polynomials in x^l.
  std::uint64_t l = 1;
  std::vector<CycMatrix> generators;
  std::vector<Word> relators;
  std::uint64_t expected_order = 0;
  std::uint64_t expected_yagita = 0;
  bool claims_sl = false;

  std::string label() const;
};

struct WitnessCheck {
  std::uint64_t closure_order = 0;
  bool order_ok = false;
  bool relations_ok = false;
  /// Every element has determinant exactly 1.
  bool all_det_one = false;
  bool verified = false;
  std::vector<CycNum> generator_dets;
  std::shared_ptr<MatrixGroup> group;
};

/// Enumerates the group, compares with expected_order, checks relators and
/// scans all determinants. Throws CapExceeded when the closure is too big.
WitnessCheck verify_witness(const WitnessEmbedding& w, std::uint64_t cap = kDefaultCap);

/// G1(p, m) in GL_n(O), n = ml/(m,l); m = 1 gives the cyclic group C_p.
WitnessEmbedding build_g1(std::uint64_t p, std::uint64_t m, const RingSpec& ring);
/// g -> diag(g, det g^-1). Throws std::invalid_argument when some generator
/// determinant is not a unit of Z[zeta].
WitnessEmbedding sl_pad(const WitnessEmbedding& w);
/// A and mu B with mu^m = -1. Throws std::invalid_argument when O has no
/// m-th root of -1.
WitnessEmbedding build_g2(std::uint64_t p, std::uint64_t m, const RingSpec& ring);
/// Tensor-product model of E(p, m) over Z[zeta_p] in dimension p^m.
WitnessEmbedding build_extraspecial_monomial(std::uint64_t p, std::uint64_t m);
/// Restriction of scalars from O[zeta_p] to O: each entry in Z[zeta_p]
/// becomes its l x l multiplication block.
WitnessEmbedding blow_up(const WitnessEmbedding& w, const RingSpec& ring);
inline WitnessEmbedding blow_up(const WitnessEmbedding& w) { return blow_up(w, RingSpec::integers()); }
/// E(p, m) over O, dimension l p^m.
WitnessEmbedding build_extraspecial(std::uint64_t p, std::uint64_t m, const RingSpec& ring);
/// E(2, m) over Z in dimension 2^m. For m = 1 this is D8 in GL_2(Z); for
/// m >= 2 the construction is enumerated once here and rejected (with
/// InternalError) unless order, centre and determinants come out right.
WitnessEmbedding build_e2m_integer(std::uint64_t m);
WitnessEmbedding build_q8();
WitnessEmbedding build_d8();

/// Dispatch on kind. E(p, m) with p odd is built over ring (monomial when
/// zeta_p is in O); Q8 requires i in O.
WitnessEmbedding build_witness(const WitnessKind& kind, const RingSpec& ring);

struct WitnessMenu {
  std::vector<WitnessEmbedding> gl;
  std::vector<WitnessEmbedding> sl;
};

/// Every witness that fits in GL_n(O), and separately in SL_n(O),
/// restricted to dimensions <= min(n, kMaxWitnessDimension).
WitnessMenu witness_menu(std::uint64_t p, std::uint64_t n, const RingSpec& ring);

}  // namespace yagita
