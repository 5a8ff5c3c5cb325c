#include "yagita/formulas.hpp"

#include <stdexcept>

#include "yagita/arith.hpp"

namespace yagita {

namespace {

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
}

void require_l(std::uint64_t p, std::uint64_t l) {
  if (l == 0 || (p - 1) % l != 0)
    throw std::invalid_argument("l = " + std::to_string(l) + " does not divide p-1 = " + std::to_string(p - 1));
}

}  // namespace

std::string SlResult::to_string() const {
  if (is_exact()) return std::to_string(value);
  return std::to_string(value) + " or " + std::to_string(value / 2);
}

std::uint64_t psi(std::uint64_t num, std::uint64_t den, std::uint64_t p) {
  require_prime(p);
  if (den == 0 || num < den) throw std::invalid_argument("psi: argument must be >= 1");
  // largest p^k with p^k * den <= num
  std::uint64_t power = 1;
  while (static_cast<unsigned __int128>(power) * p * den <= num) power *= p;
  return power;
}

std::uint64_t middle_row_lcm(std::uint64_t p, std::uint64_t n, std::uint64_t l) {
  std::uint64_t acc = 1;
  for (std::uint64_t m : divisors(p - 1))
    if (m % l == 0 && m <= n) acc = lcm_u64(acc, m);
  return acc;
}

std::uint64_t yagita_gl(std::uint64_t p, std::uint64_t n, std::uint64_t l) {
  require_prime(p);
  require_l(p, l);
  if (n == 0) throw std::invalid_argument("yagita_gl: n must be positive");
  if (n < l) return 1;
  if (n <= p - 1) return 2 * middle_row_lcm(p, n, l);
  return 2 * (p - 1) * psi(n, l, p);
}

SlResult yagita_sl(std::uint64_t p, std::uint64_t n, std::uint64_t l, const RingSpec& ring) {
  if (n < 2) throw std::invalid_argument("yagita_sl: n must be >= 2");
  const std::uint64_t gl = yagita_gl(p, n, l);
  if (p == 2) {
    if (n == 2 && !has_nth_root_of_minus_one(ring, 2)) return SlResult::ambiguous(gl);
    return SlResult::exact(gl);
  }
  if (n % l == 0) {
    const std::uint64_t two_power = n / l;
    const bool is_power_of_two = (two_power & (two_power - 1)) == 0;
    if (is_power_of_two && ((p - 1) / l) % two_power == 0 && !has_nth_root_of_minus_one(ring, n))
      return SlResult::ambiguous(gl);
  }
  return SlResult::exact(gl);
}

std::uint64_t yagita_gl_Z(std::uint64_t p, std::uint64_t n) {
  require_prime(p);
  if (n == 0) throw std::invalid_argument("yagita_gl_Z: n must be positive");
  if (n < p - 1) return 1;
  return 2 * (p - 1) * psi(n, p - 1, p);
}

std::uint64_t yagita_sl_Z(std::uint64_t p, std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("yagita_sl_Z: n must be >= 2");
  if (p == 2 && n == 2) return 2;
  if (p != 2 && n == p - 1) return p - 1;
  return yagita_gl_Z(p, n);
}

std::uint64_t yagita_gl_R(std::uint64_t p, std::uint64_t n) {
  require_prime(p);
  if (n == 0) throw std::invalid_argument("yagita_gl_R: n must be positive");
  if (n <= p - 1) {
    std::uint64_t acc = 1;
    for (std::uint64_t m : divisors(p - 1))
      if (m <= n) acc = lcm_u64(acc, m);
    return 2 * acc;
  }
  return 2 * (p - 1) * psi(n, p);
}

SlResult yagita_sl_R(std::uint64_t p, std::uint64_t n, const RingSpec& ring) {
  if (n < 2) throw std::invalid_argument("yagita_sl_R: n must be >= 2");
  if (!contains_zeta_p(ring, p)) throw std::invalid_argument("yagita_sl_R: ring does not contain zeta_p");
  const std::uint64_t gl = yagita_gl_R(p, n);
  const bool a = n >= std::max<std::uint64_t>(p, 3);
  const bool b = p != 2 && has_nth_root_of_minus_one(ring, p - 1);
  const bool c = n == 2 && p == 2 && has_nth_root_of_minus_one(ring, 2);
  return (a || b || c) ? SlResult::exact(gl) : SlResult::ambiguous(gl);
}

SlResult yagita_sl_best(std::uint64_t p, std::uint64_t n, const RingSpec& ring) {
  if (ring.is_integers()) return SlResult::exact(yagita_sl_Z(p, n));
  const std::uint64_t l = compute_l(ring, p);
  const SlResult general = yagita_sl(p, n, l, ring);
  if (l == 1 && !general.is_exact()) {
    const SlResult with_zeta = yagita_sl_R(p, n, ring);
    if (with_zeta.is_exact()) return with_zeta;
  }
  return general;
}

std::uint64_t lcm_form_reduced(std::uint64_t p, std::uint64_t l, std::uint64_t n) {
  require_prime(p);
  require_l(p, l);
  if (n < l || n > p - 1) throw std::invalid_argument("lcm_form_reduced: need l <= n <= p-1");
  const std::uint64_t rest = (p - 1) / l;
  std::uint64_t acc = l;  // q^0
  for (auto [q, e] : factorize(rest)) {
    std::uint64_t qr = 1;
    for (unsigned r = 1; r <= e; ++r) {
      qr *= q;
      if (l * qr <= n) acc = lcm_u64(acc, l * qr);
    }
  }
  return acc;
}

}  // namespace yagita

namespace yagita {

std::uint64_t oracle_yagita(const WitnessKind& kind) {
  kind.validate();
  using F = WitnessKind::Family;
  switch (kind.family) {
    case F::G1:
    case F::G2:
      return 2 * kind.m;
    case F::E: {
      std::uint64_t v = 2;
      for (std::uint64_t i = 0; i < kind.m; ++i) v *= kind.p;
      return v;  // 2p^m, which is 2^(m+1) at p = 2
    }
    case F::Q8:
    case F::D8:
      return 4;
  }
  return 0;
}

}  // namespace yagita
