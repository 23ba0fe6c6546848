#pragma once

#include <stdexcept>
#include <string>

namespace kn {

/// Caller passed a value outside an operation's domain.
class InvalidArgument : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// An enumeration grew past its configured member cap.
class CapExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Exact polynomial or integer division left a nonzero remainder.
class InexactDivision : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An internal invariant failed; indicates a bug rather than bad input.
class BrokenInvariant : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace kn
