#pragma once

#include <stdexcept>
#include <string>

namespace kronecker {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No Laurent polynomial with integer coefficients is a quotient.
class NotDivisible : public Error {
 public:
  using Error::Error;
};

class ZeroPolynomial : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

/// Raised for m in {1, 2}: those are the initial cluster, not M(m).
class InitialClusterIndex : public Error {
 public:
  using Error::Error;
};

class UnsupportedRep : public Error {
 public:
  using Error::Error;
};

class SizeLimit : public Error {
 public:
  using Error::Error;
};

class UnknownSuite : public Error {
 public:
  using Error::Error;
};

}  // namespace kronecker
