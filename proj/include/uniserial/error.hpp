#pragma once

#include <stdexcept>
#include <string>

namespace uniserial {

// Raised when an exact operation is undefined (division by zero, negative
// radicand, mixing incompatible surds).
class ArithmeticError : public std::domain_error {
public:
  explicit ArithmeticError(const std::string& what) : std::domain_error(what) {}
};

// Raised when an operation's documented precondition does not hold. The
// message names the failing clause.
class PreconditionError : public std::invalid_argument {
public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

class ParseError : public std::invalid_argument {
public:
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace uniserial
