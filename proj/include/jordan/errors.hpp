#pragma once

#include <stdexcept>
#include <string>

namespace jordan {

/// Base of every exception raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live at different algebra levels or have mismatched sizes.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Operands belong to different algebras.
class AlgebraMismatch : public Error {
 public:
  using Error::Error;
};

/// A descriptor names a structure that is not a Euclidean Jordan algebra, e.g. H(4,O).
class UnsupportedStructure : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// An operation was called with inputs violating its precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// No symmetry v with v*v = p + q exists (atoms in different summands).
class NoSymmetryError : public Error {
 public:
  using Error::Error;
};

class NoMidpointError : public Error {
 public:
  using Error::Error;
};

/// Transition values of a witness problem differ beyond tolerance.
class IllPosedError : public Error {
 public:
  using Error::Error;
};

class SearchExhausted : public Error {
 public:
  using Error::Error;
};

/// A linear map failed automorphism certification.
class CertificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace jordan
