#pragma once

#include <stdexcept>
#include <string>

namespace permprod {

// Base class for all domain errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegreeMismatch : Error {
  using Error::Error;
};

struct OutOfRange : Error {
  using Error::Error;
};

struct SupportOverlap : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

struct ParityViolation : Error {
  using Error::Error;
};

struct FixedPointFreeInvolutions : Error {
  using Error::Error;
};

// A complete search failed even though the preconditions held.  This is an
// internal defect signal, never an expected outcome.
struct SearchExhausted : Error {
  using Error::Error;
};

struct TypeMismatch : Error {
  using Error::Error;
};

struct InvalidArity : Error {
  using Error::Error;
};

struct NoSuchPrime : Error {
  using Error::Error;
};

struct BudgetExceeded : Error {
  using Error::Error;
};

struct ProductNotIdentity : Error {
  using Error::Error;
};

struct NonIntegralGenus : Error {
  using Error::Error;
};

}  // namespace permprod
