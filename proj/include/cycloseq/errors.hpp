#pragma once

#include <stdexcept>
#include <string>

namespace cycloseq {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IncompatibleCongruences : public Error {
 public:
  using Error::Error;
};

class NotCoprime : public Error {
 public:
  using Error::Error;
};

class InvalidParams : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

class Overflow : public Error {
 public:
  using Error::Error;
};

class DivisionByZeroPolynomial : public Error {
 public:
  using Error::Error;
};

class PartitionViolation : public Error {
 public:
  using Error::Error;
};

class InvalidMapping : public Error {
 public:
  using Error::Error;
};

class MalformedSequence : public Error {
 public:
  using Error::Error;
};

// Raised when Berlekamp-Massey and the gcd route disagree. Always a bug.
class MethodDisagreement : public Error {
 public:
  using Error::Error;
};

}  // namespace cycloseq
