#pragma once

// Total Chern classes mod p of order-p matrices, read off from the
// eigenvalue multiplicities, and the divisor bounds they give for n(C).

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "yagita/arith.hpp"
#include "yagita/exactmat.hpp"
#include "yagita/fppoly.hpp"

namespace yagita {

/// Multiplicity of the eigenvalue zeta_p^a for a = 0, ..., p-1.
struct EigenExponents {
  std::uint64_t p = 2;
  std::vector<std::uint64_t> multiplicity;

  std::uint64_t total() const;
  std::string to_string() const;
  nlohmann::json to_json() const;
};

using TotalChernClass = FpPoly;

/// Character sums m_a = (1/p) sum_k tr(M^k) zeta_p^(-ak). Throws
/// std::invalid_argument when M^p != I and InternalError when a multiplicity
/// is not a nonnegative integer.
EigenExponents eigen_exponents(const CycMatrix& m, std::uint64_t p);

/// prod_a (1 + a x)^(m_a) over F_p.
TotalChernClass total_chern(const EigenExponents& e);

/// Largest k with the total Chern class a polynomial in x^k; infinite for
/// the identity.
ExtNat n_upper(const CycMatrix& m, std::uint64_t p);

/// l divides n_upper (always true for the identity).
bool rationality_check(const CycMatrix& m, std::uint64_t p, std::uint64_t l);

/// lcm of 2 n_upper over the cyclic subgroups of order p; 1 if there are
/// none. The group must already be enumerated.
ExtNat yagita_upper_witness(const MatrixGroup& group, std::uint64_t p);

}  // namespace yagita
