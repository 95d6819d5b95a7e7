#pragma once

#include <stdexcept>
#include <string>

namespace electsys {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input: bad ids, bad weights, wrong sizes.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// An operation that needs linear orders got approval vectors, or vice versa.
class BallotKindMismatch : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class ParityViolation : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class PoolMissing : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class ParseError : public InvalidInput {
 public:
  ParseError(int line, const std::string& what)
      : InvalidInput("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// No sequence of switches can make the candidate a Condorcet winner.
class Unreachable : public Error {
 public:
  using Error::Error;
};

class NoWinnerExists : public Error {
 public:
  using Error::Error;
};

class ConstructionUnverified : public Error {
 public:
  using Error::Error;
};

// Exact search hit its node/enumeration budget before deciding.
class SearchBudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Brute-force oracles refuse inputs outside their exhaustion bound.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace electsys
