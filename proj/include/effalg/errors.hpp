#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace effalg {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// The same ordered pair was declared twice with different results.
class DuplicateSum : public Error {
  public:
    using Error::Error;
};

/// A table in which zero and unit coincide.
class DegenerateAlgebra : public Error {
  public:
    using Error::Error;
};

/// Malformed EAF or state text. Carries the 1-based line number (0 when unknown).
class ParseError : public Error {
  public:
    ParseError(std::size_t line, const std::string& message)
        : Error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

class UnknownName : public ParseError {
  public:
    using ParseError::ParseError;
};

class MissingHeader : public ParseError {
  public:
    using ParseError::ParseError;
};

class MissingElement : public ParseError {
  public:
    using ParseError::ParseError;
};

class NegativeDenominator : public ParseError {
  public:
    using ParseError::ParseError;
};

class ZeroElement : public Error {
  public:
    using Error::Error;
};

/// x ∧ y or x ∨ y does not exist where an operation needs both.
class BoundsMissing : public Error {
  public:
    using Error::Error;
};

class NotDecomposable : public Error {
  public:
    using Error::Error;
};

class InvalidDecomposition : public Error {
  public:
    using Error::Error;
};

/// A structural hypothesis (lattice order, sharp domination, ...) is not met.
class PreconditionFailed : public Error {
  public:
    using Error::Error;
};

class InvalidState : public Error {
  public:
    using Error::Error;
};

class SizeLimit : public Error {
  public:
    using Error::Error;
};

class DegenerateBlock : public Error {
  public:
    using Error::Error;
};

class UnknownFixture : public Error {
  public:
    using Error::Error;
};

}  // namespace effalg
