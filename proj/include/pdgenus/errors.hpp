#pragma once

#include <stdexcept>

namespace pdgenus {

// Malformed rotation or polynomial text.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Structurally invalid input: bad label multiplicity, forbidden sign pattern,
// subset out of range, violated operation precondition.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The request would exceed a configured or representational size bound.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pdgenus
