#pragma once

#include <stdexcept>
#include <string>

namespace d4vgit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  explicit DivisionByZero(const std::string& what = "division by zero") : Error(what) {}
};

/// Adjoining the square root of zero.
class DegenerateExtension : public Error {
 public:
  using Error::Error;
};

/// A quadratic tower would exceed its depth cap.
class ExtensionLimit : public Error {
 public:
  using Error::Error;
};

/// Two scalars live in towers that are not nested.
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented domain (e.g. a point off Z).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class UnknownVariable : public Error {
 public:
  using Error::Error;
};

/// The point has no chart at the requested index.
class NotInChart : public Error {
 public:
  using Error::Error;
};

/// Degenerate input for an enumeration (coincident lines, singular maps).
class DegeneratePoint : public Error {
 public:
  using Error::Error;
};

/// Character on a GIT wall.
class WallCharacter : public Error {
 public:
  using Error::Error;
};

/// Bad command-line usage or an unknown suite name.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace d4vgit
