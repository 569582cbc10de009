#pragma once

#include <stdexcept>
#include <string>

namespace geohom {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed abstract graph (loop, duplicate edge, endpoint out of range).
class GraphError : public Error {
 public:
  using Error::Error;
};

/// Points of a realization are not in general position, or out of range.
class GeneralPositionViolation : public Error {
 public:
  using Error::Error;
};

class UnknownEdge : public Error {
 public:
  using Error::Error;
};

/// Two realizations were compared whose underlying graphs are not isomorphic.
class AbstractMismatch : public Error {
 public:
  using Error::Error;
};

/// A non-precedence certificate was requested for a pair that does have a homomorphism.
class NotApplicable : public Error {
 public:
  using Error::Error;
};

/// Catalog anchors matched zero or several classes.
class AnchorConflict : public Error {
 public:
  using Error::Error;
};

class UnknownLabel : public Error {
 public:
  using Error::Error;
};

/// Malformed input file. The message carries the line or field that failed.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace geohom
