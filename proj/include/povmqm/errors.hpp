#pragma once

#include <stdexcept>
#include <string>

namespace povmqm {

/// Bad inputs detected before any computation starts.  CLI exit code 2.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// A grid cannot represent the requested kernel or state.
class ResolutionError : public ValidationError {
 public:
  explicit ResolutionError(const std::string& what) : ValidationError(what) {}
};

/// A numerical safety check tripped mid-run (norm drift, convergence
/// failure, step-size guard).  CLI exit code 3.
class NumericalGuardError : public std::runtime_error {
 public:
  explicit NumericalGuardError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace povmqm
