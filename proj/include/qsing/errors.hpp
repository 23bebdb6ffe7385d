#pragma once

#include <stdexcept>
#include <string>

namespace qsing {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent user input (maps to CLI exit code 2).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class NotARoot : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class NonSquare : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// The quiver is not of Dynkin type (maps to CLI exit code 3).
class NonDynkin : public Error {
 public:
  using Error::Error;
};

// The b-function driver found no admissible terminal reduction (exit code 4).
class TerminalRuleInapplicable : public Error {
 public:
  TerminalRuleInapplicable(const std::string& what, std::string partial)
      : Error(what), partial_(std::move(partial)) {}
  const std::string& partial_product() const { return partial_; }

 private:
  std::string partial_;
};

// A violated internal invariant; indicates a bug rather than bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace qsing
