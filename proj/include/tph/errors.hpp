#pragma once

#include <stdexcept>
#include <string>

namespace tph {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not fit the operation.
class ShapeError : public Error {
public:
  using Error::Error;
};

/// An argument violates a documented precondition (index ranges, power ranges).
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// Malformed textual input (rationals, JSON documents).
class ParseError : public Error {
public:
  using Error::Error;
};

/// All blocks of the generating sequence vanish.
class ZeroSequence : public Error {
public:
  using Error::Error;
};

/// The right defect is positive, so no full set of right essential polynomials exists.
class DefectUnsupported : public Error {
public:
  using Error::Error;
};

/// A polynomial matrix whose determinant is not a nonzero constant.
class NotUnimodular : public Error {
public:
  using Error::Error;
};

/// A column passed as essential has a nonzero coefficient in the band that must vanish.
class EssentialityViolation : public Error {
public:
  using Error::Error;
};

/// An internal identity that must hold by construction failed.
class ConsistencyError : public Error {
public:
  using Error::Error;
};

} // namespace tph
