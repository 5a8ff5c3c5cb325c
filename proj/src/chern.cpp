#include "yagita/chern.hpp"

#include <sstream>
#include <stdexcept>

#include "yagita/errors.hpp"

namespace yagita {

std::uint64_t EigenExponents::total() const {
  std::uint64_t s = 0;
  for (auto m : multiplicity) s += m;
  return s;
}

std::string EigenExponents::to_string() const {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (std::size_t a = 0; a < multiplicity.size(); ++a) {
    if (!multiplicity[a]) continue;
    if (!first) out << ", ";
    out << a << "->" << multiplicity[a];
    first = false;
  }
  out << "}";
  return out.str();
}

nlohmann::json EigenExponents::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (std::size_t a = 0; a < multiplicity.size(); ++a)
    if (multiplicity[a]) j[std::to_string(a)] = std::to_string(multiplicity[a]);
  return j;
}

EigenExponents eigen_exponents(const CycMatrix& m, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("eigen_exponents: p must be prime");
  const std::uint64_t cond = lcm_u64(m.conductor(), p);
  const CycMatrix base = m.embed(cond);
  std::vector<CycNum> traces;
  CycMatrix power = CycMatrix::identity(m.size(), cond);
  for (std::uint64_t k = 0; k < p; ++k) {
    traces.push_back(trace(power));
    power = power * base;
  }
  if (!power.is_identity()) throw std::invalid_argument("eigen_exponents: M^p is not the identity");

  EigenExponents e;
  e.p = p;
  const CycNum inv_p(Rational(1, static_cast<long>(p)));
  for (std::uint64_t a = 0; a < p; ++a) {
    CycNum s;
    for (std::uint64_t k = 0; k < p; ++k)
      s += traces[k] * CycNum::zeta(p, -static_cast<std::int64_t>((a * k) % p));
    s *= inv_p;
    const auto r = s.as_rational();
    if (!r || r->get_den() != 1 || *r < 0 || !r->get_num().fits_ulong_p())
      throw InternalError("eigen_exponents: multiplicity " + s.to_string() + " is not a nonnegative integer");
    e.multiplicity.push_back(r->get_num().get_ui());
  }
  if (e.total() != m.size()) throw InternalError("eigen_exponents: multiplicities do not sum to the size");
  return e;
}

TotalChernClass total_chern(const EigenExponents& e) {
  FpPoly c = FpPoly::constant(e.p, 1);
  for (std::size_t a = 1; a < e.multiplicity.size(); ++a)
    if (e.multiplicity[a]) c = c * FpPoly::linear_one_plus(e.p, static_cast<std::int64_t>(a)).pow(e.multiplicity[a]);
  return c;
}

ExtNat n_upper(const CycMatrix& m, std::uint64_t p) { return exponent_gcd(total_chern(eigen_exponents(m, p))); }

bool rationality_check(const CycMatrix& m, std::uint64_t p, std::uint64_t l) {
  const ExtNat n = n_upper(m, p);
  return n.is_infinite() || n.value() % l == 0;
}

ExtNat yagita_upper_witness(const MatrixGroup& group, std::uint64_t p) {
  ExtNat acc = ExtNat::finite(1);
  for (const auto& c : order_p_cyclic_subgroups(group, p)) {
    const ExtNat n = n_upper(c, p);
    acc = lcm(acc, n.is_infinite() ? n : ExtNat::finite(2 * n.value()));
  }
  return acc;
}

}  // namespace yagita
