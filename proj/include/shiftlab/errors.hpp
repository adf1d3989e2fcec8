#pragma once

#include <stdexcept>
#include <string>

namespace shiftlab {

// Malformed input: basis spec, point literal, JSON file, CLI argument.
// The CLI maps this to exit code 2.
class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented operation precondition was violated by the caller.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace shiftlab
