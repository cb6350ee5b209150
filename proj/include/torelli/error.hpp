#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace torelli {

  // Base of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Vectors or matrices belonging to surfaces of different genus were mixed.
  class DimensionError : public Error {
   public:
    using Error::Error;
  };

  // An argument lies outside the domain of the operation (e.g. bar of 0).
  class DomainError : public Error {
   public:
    using Error::Error;
  };

  // A structural invariant of an input value does not hold.
  class InvariantError : public Error {
   public:
    using Error::Error;
  };

  class OverflowError : public Error {
   public:
    using Error::Error;
  };

  // Malformed input document or word syntax.
  class SchemaError : public Error {
   public:
    using Error::Error;
  };

  namespace checked {
    inline std::int64_t add(std::int64_t x, std::int64_t y) {
      std::int64_t r;
      if (__builtin_add_overflow(x, y, &r)) {
        throw OverflowError("integer overflow in addition");
      }
      return r;
    }

    inline std::int64_t sub(std::int64_t x, std::int64_t y) {
      std::int64_t r;
      if (__builtin_sub_overflow(x, y, &r)) {
        throw OverflowError("integer overflow in subtraction");
      }
      return r;
    }

    inline std::int64_t mul(std::int64_t x, std::int64_t y) {
      std::int64_t r;
      if (__builtin_mul_overflow(x, y, &r)) {
        throw OverflowError("integer overflow in multiplication");
      }
      return r;
    }

    inline std::int64_t neg(std::int64_t x) {
      return sub(0, x);
    }
  }  // namespace checked

}  // namespace torelli
