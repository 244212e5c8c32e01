#pragma once

#include <stdexcept>
#include <string>

namespace nslattice {

// Base of every domain error raised by the library. The CLI maps these to
// exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParameterError : public Error {
 public:
  using Error::Error;
};

// Coefficient vector length does not match the lattice rank.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Operation called on a lattice of the wrong surface family.
class FamilyError : public Error {
 public:
  using Error::Error;
};

// Odd value where adjunction parity forces an even one. Only reachable
// through hand-edited Gram data.
class LatticeCorruptionError : public Error {
 public:
  using Error::Error;
};

// The complete linear system of the class is empty.
class NotEffectiveError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace nslattice
