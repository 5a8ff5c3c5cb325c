#include "yagita/arith.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

namespace yagita {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  const std::uint64_t g = std::gcd(a, b);
  const std::uint64_t q = a / g;
  if (q > std::numeric_limits<std::uint64_t>::max() / b) throw std::overflow_error("lcm overflow");
  return q * b;
}

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("euler_phi(0)");
  std::uint64_t result = n;
  for (auto [q, e] : factorize(n)) result = result / q * (q - 1);
  return result;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  if (mod == 1) return 0;
  unsigned __int128 r = 1, b = base % mod;
  while (exp) {
    if (exp & 1) r = r * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t mult_order(std::uint64_t a, std::uint64_t n) {
  if (n == 1) return 1;
  if (std::gcd(a % n, n) != 1) throw std::invalid_argument("mult_order: not a unit");
  const std::uint64_t phi = euler_phi(n);
  std::uint64_t order = phi;
  for (auto [q, e] : factorize(phi)) {
    (void)e;
    while (order % q == 0 && pow_mod(a, order / q, n) == 1) order /= q;
  }
  return order;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q) continue;
    unsigned e = 0;
    while (n % q == 0) {
      n /= q;
      ++e;
    }
    out.emplace_back(q, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::int64_t squarefree_part(std::int64_t d) {
  if (d == 0) return 0;
  const std::int64_t sign = d < 0 ? -1 : 1;
  std::uint64_t m = static_cast<std::uint64_t>(d < 0 ? -d : d);
  std::int64_t out = 1;
  for (auto [q, e] : factorize(m))
    if (e % 2) out *= static_cast<std::int64_t>(q);
  return sign * out;
}

bool is_squarefree(std::int64_t d) {
  if (d == 0) return false;
  std::uint64_t m = static_cast<std::uint64_t>(d < 0 ? -d : d);
  for (auto [q, e] : factorize(m))
    if (e > 1) return false;
  return true;
}

std::uint64_t mod_floor(std::int64_t a, std::uint64_t n) {
  const auto sn = static_cast<std::int64_t>(n);
  std::int64_t r = a % sn;
  if (r < 0) r += sn;
  return static_cast<std::uint64_t>(r);
}

std::uint64_t ExtNat::value() const {
  if (!value_) throw std::logic_error("ExtNat: value() on infinity");
  return *value_;
}

std::string ExtNat::to_string() const { return value_ ? std::to_string(*value_) : "inf"; }

ExtNat ExtNat::parse(const std::string& s) {
  if (s == "inf" || s == "infinity") return infinity();
  return finite(std::stoull(s));
}

ExtNat lcm(const ExtNat& a, const ExtNat& b) {
  if (a.is_infinite() || b.is_infinite()) return ExtNat::infinity();
  return ExtNat::finite(lcm_u64(a.value(), b.value()));
}

}  // namespace yagita
