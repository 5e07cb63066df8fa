#pragma once

#include <stdexcept>
#include <string>

namespace hurwitz {

// Malformed or out-of-regime input. Maps to CLI exit code 2.
class InvalidInput : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A configured search limit would be exceeded. Maps to CLI exit code 3.
class ResourceLimit : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// An internal consistency check failed; always a bug or a malformed object.
class InvariantViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace hurwitz
