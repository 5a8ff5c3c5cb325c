#include "yagita/witness_kind.hpp"

#include <stdexcept>
#include <vector>

#include "yagita/arith.hpp"

namespace yagita {

void WitnessKind::validate() const {
  switch (family) {
    case Family::G1:
    case Family::G2:
      if (!is_prime(p) || p == 2) throw std::invalid_argument(to_string() + ": p must be an odd prime");
      if (m < 1 || (p - 1) % m != 0) throw std::invalid_argument(to_string() + ": m must divide p-1");
      if (family == Family::G2 && m % 2 != 0) throw std::invalid_argument(to_string() + ": m must be even");
      return;
    case Family::E:
      if (!is_prime(p)) throw std::invalid_argument(to_string() + ": p must be prime");
      if (m < 1) throw std::invalid_argument(to_string() + ": m must be positive");
      return;
    case Family::Q8:
    case Family::D8:
      return;
  }
}

std::uint64_t WitnessKind::abstract_order() const {
  switch (family) {
    case Family::G1:
      return p * m;
    case Family::G2:
      return 2 * p * m;
    case Family::E: {
      std::uint64_t order = p;
      for (std::uint64_t i = 0; i < 2 * m; ++i) order *= p;
      return order;
    }
    case Family::Q8:
    case Family::D8:
      return 8;
  }
  return 0;
}

WitnessKind WitnessKind::parse(const std::string& text) {
  if (text == "q8" || text == "Q8") return q8();
  if (text == "d8" || text == "D8") return d8();
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ':') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  if (parts.size() != 3) throw std::invalid_argument("witness kind '" + text + "' not recognised");
  const std::uint64_t p = std::stoull(parts[1]);
  const std::uint64_t m = std::stoull(parts[2]);
  WitnessKind k;
  if (parts[0] == "g1" || parts[0] == "G1") {
    k = g1(p, m);
  } else if (parts[0] == "g2" || parts[0] == "G2") {
    k = g2(p, m);
  } else if (parts[0] == "e" || parts[0] == "E") {
    k = e(p, m);
  } else {
    throw std::invalid_argument("witness kind '" + text + "' not recognised");
  }
  k.validate();
  return k;
}

std::string WitnessKind::to_string() const {
  const auto pm = "(" + std::to_string(p) + "," + std::to_string(m) + ")";
  switch (family) {
    case Family::G1:
      return "G1" + pm;
    case Family::G2:
      return "G2" + pm;
    case Family::E:
      return "E" + pm;
    case Family::Q8:
      return "Q8";
    case Family::D8:
      return "D8";
  }
  return "?";
}

}  // namespace yagita
