#include "yagita/ringspec.hpp"

#include <stdexcept>
#include <vector>

#include "yagita/arith.hpp"
#include "yagita/errors.hpp"

namespace yagita {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::uint64_t parse_u64(const std::string& s, const std::string& what) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    if (!s.empty() && s[0] == '-') throw std::invalid_argument("negative");
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("ring spec: bad " + what + " '" + s + "'");
  }
  if (pos != s.size()) throw std::invalid_argument("ring spec: bad " + what + " '" + s + "'");
  return v;
}

std::int64_t parse_i64(const std::string& s, const std::string& what) {
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("ring spec: bad " + what + " '" + s + "'");
  }
  if (pos != s.size()) throw std::invalid_argument("ring spec: bad " + what + " '" + s + "'");
  return v;
}

}  // namespace

RingSpec::RingSpec(Kind kind) : kind_(std::move(kind)) {
  std::visit(Overloaded{
                 [](const RationalIntegers&) {},
                 [](const Cyclotomic& c) {
                   if (c.conductor < 1) throw std::invalid_argument("cyclotomic conductor must be >= 1");
                 },
                 [](const QuadraticOrder& q) {
                   if (q.discriminant_root == 0 || q.discriminant_root == 1 || !is_squarefree(q.discriminant_root))
                     throw std::invalid_argument("quadratic D must be squarefree and not 0 or 1");
                 },
                 [](const SubCyclotomicFixedField& s) {
                   if (!is_prime(s.prime)) throw std::invalid_argument("subcyclotomic field needs a prime");
                   if (s.degree < 1 || (s.prime - 1) % s.degree != 0)
                     throw std::invalid_argument("subcyclotomic degree must divide p-1");
                 },
                 [](const AbstractRing& a) {
                   if (a.l < 1) throw std::invalid_argument("abstract ring needs l >= 1");
                   if (a.roots_of_unity < 2 || a.roots_of_unity % 2 != 0)
                     throw std::invalid_argument("abstract ring needs an even M >= 2");
                 },
             },
             kind_);
}

RingSpec RingSpec::parse(const std::string& text) {
  if (text == "Z") return integers();
  if (text == "Z[i]") return cyclotomic(4);
  const auto parts = split(text, ':');
  const std::string& head = parts[0];
  if (head == "cyclotomic" && parts.size() == 2) return cyclotomic(parse_u64(parts[1], "conductor"));
  if (head == "quadratic" && parts.size() == 2) return quadratic(parse_i64(parts[1], "D"));
  if (head == "subcyclotomic" && parts.size() == 3)
    return subcyclotomic(parse_u64(parts[1], "prime"), parse_u64(parts[2], "degree"));
  if (head == "abstract" && parts.size() == 3) return abstract(parse_u64(parts[1], "l"), parse_u64(parts[2], "M"));
  throw std::invalid_argument("unrecognised ring spec '" + text + "'");
}

std::string RingSpec::to_string() const {
  return std::visit(
      Overloaded{
          [](const RationalIntegers&) -> std::string { return "Z"; },
          [](const Cyclotomic& c) { return "cyclotomic:" + std::to_string(c.conductor); },
          [](const QuadraticOrder& q) { return "quadratic:" + std::to_string(q.discriminant_root); },
          [](const SubCyclotomicFixedField& s) {
            return "subcyclotomic:" + std::to_string(s.prime) + ":" + std::to_string(s.degree);
          },
          [](const AbstractRing& a) { return "abstract:" + std::to_string(a.l) + ":" + std::to_string(a.roots_of_unity); },
      },
      kind_);
}

std::uint64_t compute_l(const RingSpec& ring, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("compute_l: p must be prime");
  if (const auto* a = std::get_if<AbstractRing>(&ring.kind())) {
    if ((p - 1) % a->l != 0)
      throw UnsupportedField("abstract ring: l = " + std::to_string(a->l) + " does not divide p-1");
    return a->l;
  }
  // zeta_2 = -1 lies in every field.
  if (p == 2) return 1;
  return std::visit(
      Overloaded{
          [&](const RationalIntegers&) -> std::uint64_t { return p - 1; },
          [&](const Cyclotomic& c) -> std::uint64_t {
            return euler_phi(lcm_u64(c.conductor, p)) / euler_phi(c.conductor);
          },
          [&](const QuadraticOrder& q) -> std::uint64_t {
            // The unique quadratic subfield of Q(zeta_p) is Q(sqrt(p*)),
            // p* = (-1)^((p-1)/2) p. Adjoining zeta_p to that field halves
            // the degree; to any other quadratic field it does not.
            const auto p_star = static_cast<std::int64_t>(p) * (p % 4 == 1 ? 1 : -1);
            return squarefree_part(q.discriminant_root) == p_star ? (p - 1) / 2 : p - 1;
          },
          [&](const SubCyclotomicFixedField& s) -> std::uint64_t {
            if (s.prime != p)
              throw UnsupportedField("subcyclotomic field of conductor " + std::to_string(s.prime) +
                                     " at prime " + std::to_string(p) + " is not supported");
            return (p - 1) / s.degree;
          },
          [&](const AbstractRing& a) -> std::uint64_t { return a.l; },
      },
      ring.kind());
}

std::uint64_t roots_of_unity_order(const RingSpec& ring) {
  return std::visit(Overloaded{
                        [](const RationalIntegers&) -> std::uint64_t { return 2; },
                        [](const Cyclotomic& c) -> std::uint64_t {
                          return c.conductor % 2 == 0 ? c.conductor : 2 * c.conductor;
                        },
                        [](const QuadraticOrder& q) -> std::uint64_t {
                          if (q.discriminant_root == -1) return 4;
                          if (q.discriminant_root == -3) return 6;
                          return 2;
                        },
                        [](const SubCyclotomicFixedField& s) -> std::uint64_t {
                          // The roots of unity of Q(zeta_p) are mu_{2p}; a proper
                          // subfield only keeps +-1.
                          if (s.prime > 2 && s.degree == s.prime - 1) return 2 * s.prime;
                          return 2;
                        },
                        [](const AbstractRing& a) -> std::uint64_t { return a.roots_of_unity; },
                    },
                    ring.kind());
}

bool has_nth_root_of_minus_one(const RingSpec& ring, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("has_nth_root_of_minus_one: n must be positive");
  const std::uint64_t m = roots_of_unity_order(ring);
  return (m / 2) % gcd_u64(n, m) == 0;
}

bool contains_zeta_p(const RingSpec& ring, std::uint64_t p) { return compute_l(ring, p) == 1; }

}  // namespace yagita
