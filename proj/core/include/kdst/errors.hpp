#pragma once

#include <stdexcept>
#include <string>

namespace kdst {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed instance or solution input. line is 1-based, 0 if unknown.
struct ParseError : Error {
  ParseError(int line_number, const std::string& message)
      : Error(line_number > 0 ? "line " + std::to_string(line_number) + ": " + message
                              : message),
        line(line_number) {}
  int line = 0;
};

// The instance (or a proposed solution) cannot meet the connectivity target.
struct InfeasibleError : Error {
  using Error::Error;
};

// An enumeration guard (|E| or |V| bound) was exceeded.
struct LimitError : Error {
  using Error::Error;
};

// A structural invariant the algorithm relies on was violated: corrupt
// AugState, an exactness bug in the LP loop, a failed halving assertion.
struct InternalError : Error {
  using Error::Error;
};

} // namespace kdst
