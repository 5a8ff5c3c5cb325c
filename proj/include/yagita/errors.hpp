#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace yagita {

/// Raised when a (ring, prime) combination has no symbolic rule.
class UnsupportedField : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an enumeration or power iteration exceeds its element cap.
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(std::uint64_t cap)
      : std::runtime_error("element cap exceeded (" + std::to_string(cap) + ")"), cap_(cap) {}
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t cap_;
};

/// An internal consistency check failed. Seeing one of these means a bug,
/// not bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace yagita
