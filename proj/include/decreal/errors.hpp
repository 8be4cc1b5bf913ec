#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace decreal {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation that needs a syntactic digit tail got an opaque lazy stream.
class NotFinitelyRepresented : public Error {
 public:
  NotFinitelyRepresented() : Error("decimal is not finitely represented") {}
};

class InsufficientScale : public Error {
 public:
  using Error::Error;
};

class ZeroInput : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class NegativeInput : public Error {
 public:
  using Error::Error;
};

class BoundsTooLarge : public Error {
 public:
  using Error::Error;
};

/// A sequence broke the convergence contract its modulus certified.
class ContractViolation : public Error {
 public:
  ContractViolation(const std::string& what, std::int64_t k, std::int64_t m, std::int64_t n)
      : Error(what), k(k), m(m), n(n) {}
  std::int64_t k;
  std::int64_t m;
  std::int64_t n;
};

class MonotonicityViolation : public Error {
 public:
  MonotonicityViolation(const std::string& what, std::int64_t m, std::int64_t n)
      : Error(what), m(m), n(n) {}
  std::int64_t m;
  std::int64_t n;
};

class BracketViolation : public Error {
 public:
  BracketViolation(const std::string& what, std::int64_t k, std::int64_t n)
      : Error(what), k(k), n(n) {}
  std::int64_t k;
  std::int64_t n;
};

/// A refinement loop ran out of its digit budget.
class BudgetExhausted : public Error {
 public:
  using Error::Error;
};

/// Factorisation needed for a period length gave up.
class FactorizationLimit : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset, std::string expected)
      : Error(what), offset(offset), expected(std::move(expected)) {}
  std::size_t offset;
  std::string expected;
};

}  // namespace decreal
