#pragma once

#include <stdexcept>
#include <string>

namespace gbenard {

// Error taxonomy mirrored by the CLI exit codes:
//   ConfigError -> 2, NumericError -> 3, InvariantError -> 4.

/// Bad user input: config files, registry names, precondition violations.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// An iterative method failed to converge or a computation left its
/// supported domain (CG stagnation, Picard rejection, series cap, ...).
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A certified property of the discretization failed at run time.
class InvariantError : public std::runtime_error {
 public:
  explicit InvariantError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace gbenard
