#pragma once

#include <stdexcept>
#include <string>

namespace srlab {

// Input/precondition violations (CLI exit code 2).
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A mathematical identity the module certifies failed to hold (exit code 3).
class VerificationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Brute-force enumeration cap exceeded (exit code 4).
class CapExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace srlab
