#pragma once

#include <stdexcept>
#include <string>

namespace locoh {

// Base class for everything this library throws on bad input.
// TheoremViolation is deliberately separate: it signals that a proved
// statement failed on actual data, i.e. a bug in this code (or a genuinely
// exciting counterexample), never a user mistake.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct LengthMismatch : Error {
  using Error::Error;
};

struct ConstantGenerator : Error {
  using Error::Error;
};

struct NonPositiveExponent : Error {
  using Error::Error;
};

struct NotSquareFree : Error {
  using Error::Error;
};

struct NotAFace : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct PreconditionViolation : Error {
  using Error::Error;
};

struct SeedNotGeneralizedCM : Error {
  using Error::Error;
};

struct BadField : Error {
  using Error::Error;
};

struct TheoremViolation : Error {
  using Error::Error;
};

// Input-file syntax error with position info.
struct ParseError : Error {
  int line;
  int column;
  ParseError(const std::string& what, int line_, int column_)
      : Error("line " + std::to_string(line_) + ", col " +
              std::to_string(column_) + ": " + what),
        line(line_),
        column(column_) {}
};

struct IndexOutOfRange : ParseError {
  using ParseError::ParseError;
};

struct ZeroExponent : ParseError {
  using ParseError::ParseError;
};

}  // namespace locoh
