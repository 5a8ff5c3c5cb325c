#include "yagita/cyclo.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "yagita/arith.hpp"

namespace yagita {

namespace {

using QPoly = std::vector<Rational>;

void trim(QPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// remainder and quotient of a / b over Q, b nonzero
void divmod(const QPoly& a, const QPoly& b, QPoly& quotient, QPoly& remainder) {
  remainder = a;
  trim(remainder);
  quotient.clear();
  if (remainder.size() < b.size()) return;
  quotient.assign(remainder.size() - b.size() + 1, Rational(0));
  const Rational& lead = b.back();
  for (std::size_t k = remainder.size(); k-- >= b.size();) {
    if (remainder[k] == 0) continue;
    const Rational c = remainder[k] / lead;
    const std::size_t shift = k - (b.size() - 1);
    quotient[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) remainder[shift + i] -= c * b[i];
    if (k == b.size() - 1) break;
  }
  trim(remainder);
  trim(quotient);
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

QPoly sub(const QPoly& a, const QPoly& b) {
  QPoly out(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

}  // namespace

IntPoly::IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  for (long v : coeffs) c_.emplace_back(v);
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.c_.empty() || b.c_.empty()) return {};
  std::vector<Integer> out(a.c_.size() + b.c_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  return IntPoly(std::move(out));
}

std::string IntPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k] == 0) continue;
    Integer c = c_[k];
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    c = abs(c);
    if (k == 0 || c != 1) os << c.get_str();
    if (k > 0) os << (c != 1 ? "*x" : "x");
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

IntPoly exact_divide_monic(const IntPoly& a, const IntPoly& b) {
  if (b.coeffs().empty() || b.coeffs().back() != 1) throw std::domain_error("exact_divide_monic: divisor not monic");
  std::vector<Integer> r = a.coeffs();
  const auto& d = b.coeffs();
  if (r.size() < d.size()) {
    if (r.empty()) return {};
    throw std::domain_error("exact_divide_monic: inexact division");
  }
  std::vector<Integer> q(r.size() - d.size() + 1, Integer(0));
  for (std::size_t k = r.size(); k-- >= d.size();) {
    const std::size_t shift = k - (d.size() - 1);
    const Integer c = r[k];
    q[shift] = c;
    if (c != 0)
      for (std::size_t i = 0; i < d.size(); ++i) r[shift + i] -= c * d[i];
    if (k == d.size() - 1) break;
  }
  for (const auto& v : r)
    if (v != 0) throw std::domain_error("exact_divide_monic: inexact division");
  return IntPoly(std::move(q));
}

const IntPoly& cyclotomic_poly(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("cyclotomic_poly(0)");
  static std::mutex mu;
  static std::map<std::uint64_t, std::unique_ptr<const IntPoly>> table;
  {
    std::lock_guard lock(mu);
    if (auto it = table.find(n); it != table.end()) return *it->second;
  }
  // x^n - 1 = prod_{d | n} Phi_d
  std::vector<Integer> c(n + 1, Integer(0));
  c[0] = -1;
  c[n] = 1;
  IntPoly acc(std::move(c));
  for (std::uint64_t d : divisors(n))
    if (d != n) acc = exact_divide_monic(acc, cyclotomic_poly(d));
  std::lock_guard lock(mu);
  auto [it, inserted] = table.emplace(n, std::make_unique<const IntPoly>(std::move(acc)));
  return *it->second;
}

CycNum::CycNum() : n_(1), num_{Integer(0)}, den_(1) {}

CycNum::CycNum(long v) : n_(1), num_{Integer(v)}, den_(1) {}

CycNum::CycNum(const Rational& r, std::uint64_t conductor) : n_(conductor), den_(r.get_den()) {
  if (conductor == 0) throw std::invalid_argument("CycNum: conductor must be positive");
  num_.assign(euler_phi(conductor), Integer(0));
  num_[0] = r.get_num();
}

CycNum CycNum::from_coords(std::uint64_t conductor, std::vector<Integer> coords, Integer den) {
  if (conductor == 0) throw std::invalid_argument("CycNum: conductor must be positive");
  if (den == 0) throw std::domain_error("CycNum: zero denominator");
  const std::uint64_t phi = euler_phi(conductor);
  // zeta^N = 1: fold exponents mod N first.
  std::vector<Integer> folded(conductor, Integer(0));
  for (std::size_t k = 0; k < coords.size(); ++k) folded[k % conductor] += coords[k];
  const auto& phi_poly = cyclotomic_poly(conductor).coeffs();
  for (std::size_t k = conductor; k-- > phi;) {
    if (folded[k] == 0) continue;
    const Integer c = folded[k];
    const std::size_t shift = k - phi;
    for (std::size_t i = 0; i <= phi; ++i) folded[shift + i] -= c * phi_poly[i];
  }
  folded.resize(phi);
  CycNum out;
  out.n_ = conductor;
  out.num_ = std::move(folded);
  out.den_ = std::move(den);
  if (out.den_ < 0) {
    out.den_ = -out.den_;
    for (auto& v : out.num_) v = -v;
  }
  out.normalize();
  return out;
}

CycNum CycNum::zeta(std::uint64_t conductor, std::int64_t k) {
  if (conductor == 0) throw std::invalid_argument("zeta: conductor must be positive");
  std::vector<Integer> coords(conductor, Integer(0));
  coords[mod_floor(k, conductor)] = 1;
  return from_coords(conductor, std::move(coords));
}

void CycNum::normalize() {
  bool all_zero = true;
  Integer g = den_;
  for (const auto& v : num_) {
    if (v != 0) all_zero = false;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  if (all_zero) {
    den_ = 1;
    return;
  }
  if (g != 1) {
    for (auto& v : num_) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

bool CycNum::is_zero() const {
  for (const auto& v : num_)
    if (v != 0) return false;
  return true;
}

CycNum CycNum::operator-() const {
  CycNum out = *this;
  for (auto& v : out.num_) v = -v;
  return out;
}

CycNum operator+(const CycNum& a, const CycNum& b) {
  if (a.n_ != b.n_) {
    const std::uint64_t n = lcm_u64(a.n_, b.n_);
    return a.embed(n) + b.embed(n);
  }
  CycNum out;
  out.n_ = a.n_;
  out.num_.resize(a.num_.size());
  if (a.den_ == b.den_) {
    for (std::size_t i = 0; i < a.num_.size(); ++i) out.num_[i] = a.num_[i] + b.num_[i];
    out.den_ = a.den_;
  } else {
    for (std::size_t i = 0; i < a.num_.size(); ++i) out.num_[i] = a.num_[i] * b.den_ + b.num_[i] * a.den_;
    out.den_ = a.den_ * b.den_;
  }
  out.normalize();
  return out;
}

CycNum operator-(const CycNum& a, const CycNum& b) { return a + (-b); }

CycNum operator*(const CycNum& a, const CycNum& b) {
  if (a.n_ != b.n_) {
    const std::uint64_t n = lcm_u64(a.n_, b.n_);
    return a.embed(n) * b.embed(n);
  }
  if (a.n_ == 1) {
    CycNum out;
    out.num_[0] = a.num_[0] * b.num_[0];
    out.den_ = a.den_ * b.den_;
    out.normalize();
    return out;
  }
  if (a.is_zero() || b.is_zero()) return CycNum(Rational(0), a.n_);
  std::vector<Integer> prod(a.num_.size() + b.num_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.num_.size(); ++i) {
    if (a.num_[i] == 0) continue;
    for (std::size_t j = 0; j < b.num_.size(); ++j)
      if (b.num_[j] != 0) prod[i + j] += a.num_[i] * b.num_[j];
  }
  return CycNum::from_coords(a.n_, std::move(prod), a.den_ * b.den_);
}

CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inverse(); }

bool operator==(const CycNum& a, const CycNum& b) {
  if (a.n_ == b.n_) return a.den_ == b.den_ && a.num_ == b.num_;
  const std::uint64_t n = lcm_u64(a.n_, b.n_);
  return a.embed(n) == b.embed(n);
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw std::domain_error("CycNum: division by zero");
  if (n_ == 1 || as_rational()) {
    const Rational r = *as_rational();
    return CycNum(Rational(1) / r, n_);
  }
  QPoly a;
  for (const auto& v : num_) a.emplace_back(v);
  trim(a);
  QPoly b;
  for (const auto& v : cyclotomic_poly(n_).coeffs()) b.emplace_back(v);
  // Invariant: s1 * a == r1 (mod Phi_N).
  QPoly r0 = b, r1 = a, s0, s1{Rational(1)};
  while (!r1.empty()) {
    QPoly q, r;
    divmod(r0, r1, q, r);
    QPoly s = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.size() != 1) throw std::domain_error("CycNum::inverse: numerator shares a factor with Phi_N");
  // s0 * a == r0[0]; x = a / den, so 1/x = den * s0 / r0[0].
  Integer common = 1;
  for (const auto& c : s0) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), c.get_den_mpz_t());
  const Rational scale = Rational(den_) / r0[0];
  std::vector<Integer> coords;
  coords.reserve(s0.size());
  for (const auto& c : s0) {
    const Rational v = c * common;
    coords.push_back(v.get_num());
  }
  // coords / common * scale
  const Integer num_scale = scale.get_num();
  for (auto& v : coords) v *= num_scale;
  return from_coords(n_, std::move(coords), common * scale.get_den());
}

CycNum CycNum::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  CycNum result(Rational(1), n_);
  CycNum base = *this;
  auto k = static_cast<std::uint64_t>(e);
  while (k) {
    if (k & 1) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

CycNum CycNum::embed(std::uint64_t target) const {
  if (target == 0 || target % n_ != 0)
    throw std::invalid_argument("embed_conductor: " + std::to_string(n_) + " does not divide " + std::to_string(target));
  if (target == n_) return *this;
  const std::uint64_t k = target / n_;
  std::vector<Integer> coords((num_.size() - 1) * k + 1, Integer(0));
  for (std::size_t i = 0; i < num_.size(); ++i) coords[i * k] = num_[i];
  return from_coords(target, std::move(coords), den_);
}

CycNum CycNum::galois(std::int64_t k) const {
  const std::uint64_t kk = mod_floor(k, n_);
  if (gcd_u64(kk, n_) != 1) throw std::invalid_argument("galois_apply: k is not a unit mod N");
  std::vector<Integer> coords(n_, Integer(0));
  for (std::size_t i = 0; i < num_.size(); ++i) coords[(i * kk) % n_] += num_[i];
  return from_coords(n_, std::move(coords), den_);
}

std::optional<Rational> CycNum::as_rational() const {
  for (std::size_t i = 1; i < num_.size(); ++i)
    if (num_[i] != 0) return std::nullopt;
  Rational r(num_[0], den_);
  r.canonicalize();
  return r;
}

std::string CycNum::key() const {
  std::string out = std::to_string(n_);
  out += '|';
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (i) out += ',';
    if (num_[i] != 0) out += num_[i].get_str(36);
  }
  out += '|';
  out += den_.get_str(36);
  return out;
}

std::string CycNum::to_string() const {
  std::ostringstream os;
  bool first = true;
  int terms = 0;
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0) continue;
    ++terms;
    Integer c = num_[i];
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    c = abs(c);
    if (i == 0) {
      os << c.get_str();
      continue;
    }
    if (c != 1) os << c.get_str() << "*";
    os << "z" << n_;
    if (i > 1) os << "^" << i;
  }
  if (first) return "0";
  if (den_ == 1) return os.str();
  if (terms == 1) return os.str() + "/" + den_.get_str();
  return "(" + os.str() + ")/" + den_.get_str();
}

nlohmann::json integer_to_json(const Integer& v) {
  if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
  return v.get_str();
}

Integer integer_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) return Integer(j.get<std::string>());
  throw std::invalid_argument("expected an integer (number or decimal string)");
}

nlohmann::json CycNum::to_json() const {
  nlohmann::json nums = nlohmann::json::array();
  for (const auto& v : num_) nums.push_back(integer_to_json(v));
  return {{"conductor", n_}, {"num", nums}, {"den", integer_to_json(den_)}};
}

CycNum CycNum::from_json(const nlohmann::json& j) {
  if (j.is_number_integer() || j.is_string()) return from_coords(1, {integer_from_json(j)});
  const auto n = j.at("conductor").get<std::uint64_t>();
  std::vector<Integer> coords;
  for (const auto& v : j.at("num")) coords.push_back(integer_from_json(v));
  const Integer den = j.contains("den") ? integer_from_json(j.at("den")) : Integer(1);
  return from_coords(n, std::move(coords), den);
}

CycNum zeta(std::uint64_t conductor, std::int64_t k) { return CycNum::zeta(conductor, k); }
CycNum invert(const CycNum& x) { return x.inverse(); }
CycNum embed_conductor(const CycNum& x, std::uint64_t target) { return x.embed(target); }
CycNum galois_apply(const CycNum& x, std::int64_t k) { return x.galois(k); }
std::optional<Rational> as_rational(const CycNum& x) { return x.as_rational(); }

}  // namespace yagita
