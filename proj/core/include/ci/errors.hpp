#pragma once

#include <stdexcept>
#include <string>

namespace ci {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input text: bad syntax, unknown or duplicate variables,
// non-disjoint statement sides.
struct ParseError : Error {
  using Error::Error;
};

// Operands built over different universes.
struct UniverseMismatch : Error {
  using Error::Error;
};

// A documented size cap was exceeded (enumeration, closure, transforms).
struct CapExceeded : Error {
  using Error::Error;
};

}  // namespace ci
