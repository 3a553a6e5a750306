#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace preclusion {

// Base of every error thrown by the library. The CLI maps all of these to
// exit code 2 except where noted.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid generator or option parameter (n = 0, probability outside [0,1]).
class ParameterError : public Error {
 public:
  using Error::Error;
};

// An EdgeSet was used with a graph other than the one it was built for.
class TagMismatchError : public Error {
 public:
  using Error::Error;
};

// An operation's precondition does not hold for the given input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A brute-force oracle was asked to enumerate more subsets than allowed.
class OracleLimitError : public Error {
 public:
  using Error::Error;
};

// An exhaustive verification is too large for the requested mode.
class BudgetError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace preclusion
