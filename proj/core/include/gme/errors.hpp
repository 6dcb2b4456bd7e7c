#pragma once

#include <stdexcept>
#include <string>

namespace gme {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Dimension / index mismatch (wrong party count, bad cut, non-qubit input, ...).
class ShapeError : public Error {
 public:
  explicit ShapeError(const std::string& what) : Error(what) {}
};

/// Argument outside its mathematical domain (zero-norm state, e outside [0,1],
/// epsilon <= 0, annihilated state).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

/// Numerically invalid input (non-finite entries, non-Hermitian matrix where a
/// Hermitian one is required, instrument violating completeness).
class InvalidInputError : public Error {
 public:
  explicit InvalidInputError(const std::string& what) : Error(what) {}
};

}  // namespace gme
