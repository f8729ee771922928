#pragma once

#include <stdexcept>
#include <string>

namespace logcone {

// Raised when a face or dual computation would need a cone that contains a line.
struct LinealityError : std::runtime_error {
  explicit LinealityError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an operation requires a sharp monoid (trivial unit group).
struct NotSharpError : std::runtime_error {
  explicit NotSharpError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an input exceeds the configured rank or size guard.
struct InputTooLargeError : std::runtime_error {
  explicit InputTooLargeError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a pan operation requires a strongly convex support.
struct NotStronglyConvexError : std::runtime_error {
  explicit NotStronglyConvexError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when no saturation exponent is found below the search bound.
struct ExponentNotFound : std::runtime_error {
  explicit ExponentNotFound(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a verification routine is called with data violating its hypotheses.
// Carries the name of the first violated predicate.
struct PreconditionFailed : std::runtime_error {
  std::string predicate;
  PreconditionFailed(std::string pred, const std::string& what)
      : std::runtime_error(what), predicate(std::move(pred)) {}
  explicit PreconditionFailed(const std::string& what)
      : std::runtime_error(what), predicate() {}
};

// Raised for malformed input documents.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace logcone
