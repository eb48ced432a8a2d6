#pragma once

#include <stdexcept>
#include <string>

namespace tightspan {

/// Contract violation on an operation's stated precondition.
/// Mapped to its own CLI exit code so callers can tell it apart from bad data.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input document (missing key, wrong shape, invalid table).
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Filesystem / stream failure.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Iterative solver exceeded its iteration cap; message carries the residual.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tightspan
