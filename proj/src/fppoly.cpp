#include "yagita/fppoly.hpp"

#include <cctype>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "yagita/errors.hpp"

namespace yagita {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

}  // namespace

FpPoly::FpPoly(std::uint64_t p) : p_(p) {
  if (!is_prime(p)) throw std::invalid_argument("FpPoly: modulus " + std::to_string(p) + " is not prime");
}

FpPoly::FpPoly(std::uint64_t p, const std::vector<std::int64_t>& coeffs) : FpPoly(p) {
  c_.reserve(coeffs.size());
  for (auto v : coeffs) c_.push_back(mod_floor(v, p));
  trim();
}

void FpPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::uint64_t FpPoly::evaluate(std::uint64_t r) const {
  r %= p_;
  std::uint64_t acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = (mulmod(acc, r, p_) + *it) % p_;
  return acc;
}

FpPoly FpPoly::substitute_power(std::uint64_t k) const {
  if (k == 0) throw std::invalid_argument("substitute_power: k must be positive");
  FpPoly out(p_);
  if (c_.empty()) return out;
  out.c_.assign((c_.size() - 1) * k + 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i * k] = c_[i];
  return out;
}

FpPoly FpPoly::pow(std::uint64_t e) const {
  FpPoly result = constant(p_, 1);
  FpPoly base = *this;
  while (e) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
  if (a.p_ != b.p_) throw std::invalid_argument("FpPoly: mismatched moduli");
  FpPoly out(a.p_);
  if (a.c_.empty() || b.c_.empty()) return out;
  out.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      out.c_[i + j] = (out.c_[i + j] + mulmod(a.c_[i], b.c_[j], a.p_)) % a.p_;
  }
  out.trim();
  return out;
}

FpPoly operator+(const FpPoly& a, const FpPoly& b) {
  if (a.p_ != b.p_) throw std::invalid_argument("FpPoly: mismatched moduli");
  FpPoly out(a.p_);
  out.c_.assign(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] = (a.coeff(i) + b.coeff(i)) % a.p_;
  out.trim();
  return out;
}

std::string FpPoly::to_string() const {
  std::ostringstream os;
  if (c_.empty()) {
    os << "0";
  } else {
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      if (!first) os << " + ";
      first = false;
      if (i == 0) {
        os << c_[i];
        continue;
      }
      if (c_[i] != 1) os << c_[i] << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  os << " (mod " << p_ << ")";
  return os.str();
}

FpPoly FpPoly::parse(const std::string& text) {
  const auto open = text.rfind("(mod");
  if (open == std::string::npos) throw std::invalid_argument("polynomial text needs a '(mod p)' suffix");
  const auto close = text.find(')', open);
  if (close == std::string::npos) throw std::invalid_argument("polynomial text: unterminated '(mod'");
  const std::uint64_t p = std::stoull(text.substr(open + 4, close - open - 4));

  std::string body;
  for (char ch : text.substr(0, open))
    if (!std::isspace(static_cast<unsigned char>(ch))) body += ch;
  if (body.empty()) throw std::invalid_argument("polynomial text: empty body");

  std::map<std::size_t, std::int64_t> terms;
  std::size_t i = 0;
  while (i < body.size()) {
    std::int64_t sign = 1;
    while (i < body.size() && (body[i] == '+' || body[i] == '-')) {
      if (body[i] == '-') sign = -sign;
      ++i;
    }
    std::int64_t coeff = 1;
    bool has_coeff = false;
    std::size_t start = i;
    while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i]))) ++i;
    if (i > start) {
      coeff = std::stoll(body.substr(start, i - start));
      has_coeff = true;
    }
    std::size_t exponent = 0;
    if (i < body.size() && body[i] == '*') {
      if (!has_coeff) throw std::invalid_argument("polynomial text: stray '*'");
      ++i;
    }
    if (i < body.size() && body[i] == 'x') {
      ++i;
      exponent = 1;
      if (i < body.size() && body[i] == '^') {
        ++i;
        start = i;
        while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i]))) ++i;
        if (i == start) throw std::invalid_argument("polynomial text: missing exponent");
        exponent = std::stoull(body.substr(start, i - start));
      }
    } else if (!has_coeff) {
      throw std::invalid_argument("polynomial text: cannot parse near '" + body.substr(start) + "'");
    }
    if (i < body.size() && body[i] != '+' && body[i] != '-')
      throw std::invalid_argument("polynomial text: unexpected '" + std::string(1, body[i]) + "'");
    terms[exponent] += sign * static_cast<std::int64_t>(mod_floor(coeff, p));
  }
  std::vector<std::int64_t> c(terms.empty() ? 0 : terms.rbegin()->first + 1, 0);
  for (auto [e, v] : terms) c[e] = v;
  return FpPoly(p, c);
}

FpPoly multiply(const FpPoly& a, const FpPoly& b) { return a * b; }

std::uint64_t evaluate(const FpPoly& f, std::uint64_t r) { return f.evaluate(r); }

ExtNat exponent_gcd(const FpPoly& f) {
  std::uint64_t g = 0;
  const auto& c = f.coeffs();
  for (std::size_t i = 1; i < c.size(); ++i)
    if (c[i] != 0) g = std::gcd(g, static_cast<std::uint64_t>(i));
  return g == 0 ? ExtNat::infinity() : ExtNat::finite(g);
}

RootScan all_roots_in_units(const FpPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("all_roots_in_units: zero polynomial");
  const std::uint64_t p = f.prime();
  RootScan scan;
  std::vector<std::uint64_t> q = f.coeffs();
  for (std::uint64_t r = 1; r < p && q.size() > 1; ++r) {
    unsigned mult = 0;
    for (;;) {
      // Synthetic division by (x - r).
      std::vector<std::uint64_t> quotient(q.size() - 1);
      std::uint64_t carry = 0;
      for (std::size_t k = q.size(); k-- > 1;) {
        carry = (q[k] + mulmod(carry, r, p)) % p;
        quotient[k - 1] = carry;
      }
      const std::uint64_t remainder = (q[0] + mulmod(carry, r, p)) % p;
      if (remainder != 0) break;
      q = std::move(quotient);
      ++mult;
      if (q.size() <= 1) break;
    }
    if (mult) scan.roots.emplace_back(r, mult);
  }
  scan.all_in_units = q.size() <= 1;
  return scan;
}

MpQ mp_q_decompose(std::uint64_t n, std::uint64_t p) {
  if (n == 0) throw std::invalid_argument("mp_q_decompose: n must be positive");
  if (p < 2) throw std::invalid_argument("mp_q_decompose: p must be prime");
  MpQ out{n, 0};
  while (out.m % p == 0) {
    out.m /= p;
    ++out.q;
  }
  return out;
}

Prop6Verdict check_prop6(const FpPoly& f) {
  if (f.is_constant()) throw std::invalid_argument("check_prop6: polynomial is constant");
  if (!all_roots_in_units(f).all_in_units)
    throw std::invalid_argument("check_prop6: not every root of " + f.to_string() + " lies in F_p^x");
  const std::uint64_t p = f.prime();
  Prop6Verdict v;
  v.gcd = exponent_gcd(f).value();
  const auto [m, q] = mp_q_decompose(v.gcd, p);
  v.m = m;
  v.q = q;
  v.holds = (p - 1) % m == 0;
  if (!v.holds)
    throw InternalError("check_prop6: exponent gcd " + std::to_string(v.gcd) + " of " + f.to_string() +
                        " is not of the form m p^q with m | p-1");
  return v;
}

FpPoly random_unit_root_poly(std::uint64_t p, std::mt19937_64& rng, std::size_t max_degree) {
  if (!is_prime(p)) throw std::invalid_argument("random_unit_root_poly: p must be prime");
  if (max_degree < 1) throw std::invalid_argument("random_unit_root_poly: max_degree must be positive");
  auto pick = [&](std::uint64_t lo, std::uint64_t hi) { return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng); };
  const auto ds = divisors(p - 1);
  const std::uint64_t d = ds[pick(0, ds.size() - 1)];
  std::uint64_t frob = 1;
  while (frob * p * d <= max_degree && pick(0, 2) == 0) frob *= p;
  FpPoly f = FpPoly::constant(p, static_cast<std::int64_t>(pick(1, p - 1)));
  const std::size_t budget = std::max<std::size_t>(1, max_degree / (d * frob));
  std::size_t used = 0;
  const std::size_t factors = pick(1, budget);
  while (used < factors) {
    const std::uint64_t e = pick(1, factors - used);
    const std::uint64_t c = pow_mod(pick(1, p - 1), d, p);
    std::vector<std::int64_t> fac(d + 1, 0);
    fac[0] = -static_cast<std::int64_t>(c);
    fac[d] = 1;
    f = f * FpPoly(p, fac).pow(e);
    used += e;
  }
  return f.pow(frob);
}

}  // namespace yagita
