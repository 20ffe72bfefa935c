#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qw22 {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A 64-bit exponent or a generator index left its checked range.
class ArithmeticBoundError : public Error {
 public:
  using Error::Error;
};

/// Negative power of something that is not a unit of the ring/algebra.
class UnsupportedInverseError : public Error {
 public:
  using Error::Error;
};

/// Evaluation at a point outside the domain (q = 0, p = 0).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Operation not defined for the requested deformation or variable profile.
class UnsupportedProfileError : public Error {
 public:
  using Error::Error;
};

/// Generator without an action on the oscillator module (T, T^-1).
class UnsupportedGeneratorError : public Error {
 public:
  using Error::Error;
};

/// Unknown axiom, relation, or suite identifier.
class UnknownIdentifierError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(message + " at line " + std::to_string(line) + ", column " +
              std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Generator indices and module grades are capped so that derived q-exponents
/// such as -2(n+1)m stay far inside int64.
inline constexpr std::int64_t kIndexCap = std::int64_t{1} << 20;

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw ArithmeticBoundError("exponent overflow in addition");
  }
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw ArithmeticBoundError("exponent overflow in subtraction");
  }
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw ArithmeticBoundError("exponent overflow in multiplication");
  }
  return r;
}

inline std::int64_t check_index(std::int64_t n) {
  if (n > kIndexCap || n < -kIndexCap) {
    throw ArithmeticBoundError("index " + std::to_string(n) +
                               " exceeds the cap 2^20");
  }
  return n;
}

}  // namespace detail
}  // namespace qw22
