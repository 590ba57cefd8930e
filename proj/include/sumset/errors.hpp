#pragma once

#include <atomic>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace sumset {

using Int = std::int64_t;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad input values (empty set, negative element, box violation, ...).
class ValidationError : public Error {
 public:
  enum class Reason { empty_set, negative_value, universe_exceeded, constraint };

  ValidationError(Reason reason, const std::string& what)
      : Error(what), reason_(reason) {}

  Reason reason() const noexcept { return reason_; }

 private:
  Reason reason_;
};

// Parameters outside the domain where a formula is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A statement's threshold is not met; the caller asked for a value the
// statement does not provide.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

namespace config {

inline constexpr std::uint64_t default_universe_bits = std::uint64_t{1} << 24;
inline constexpr std::uint64_t default_enum_cap = 10'000'000;

namespace detail {
inline std::atomic<std::uint64_t>& universe_bits_storage() {
  static std::atomic<std::uint64_t> bits{default_universe_bits};
  return bits;
}
}  // namespace detail

/// Soft cap on the number of bits any set's bit-vector may use.
inline std::uint64_t universe_bits() {
  return detail::universe_bits_storage().load(std::memory_order_relaxed);
}

inline void set_universe_bits(std::uint64_t bits) {
  if (bits == 0 || bits > (std::uint64_t{1} << 40))
    throw DomainError("universe cap must lie in [1, 2^40] bits");
  detail::universe_bits_storage().store(bits, std::memory_order_relaxed);
}

}  // namespace config

}  // namespace sumset
