#pragma once

#include <stdexcept>
#include <string>

namespace tiltlab {

// The numeric values double as CLI exit codes.
enum class ErrorKind { Validation = 1, Computation = 2, Input = 3 };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Bad structure: failed preconditions, invalid representations, non-sinks.
struct ValidationError : Error {
  explicit ValidationError(const std::string& what) : Error(ErrorKind::Validation, what) {}
};

// Caps exceeded, singular matrices, resolutions that do not terminate in time.
struct ComputationError : Error {
  explicit ComputationError(const std::string& what) : Error(ErrorKind::Computation, what) {}
};

// Unreadable files and malformed input text.
struct InputError : Error {
  explicit InputError(const std::string& what) : Error(ErrorKind::Input, what) {}
};

}  // namespace tiltlab
