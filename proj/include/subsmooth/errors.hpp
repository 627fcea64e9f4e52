#pragma once

#include <stdexcept>
#include <string>

namespace subsmooth {

// Invalid configuration (bad grid parameters, empty grids, ...).
struct ConfigError : std::invalid_argument {
  explicit ConfigError(const std::string& msg) : std::invalid_argument(msg) {}
};

// An operation was called outside its stated precondition
// (e.g. a difference quotient at a point where f is infinite).
struct PreconditionError : std::invalid_argument {
  explicit PreconditionError(const std::string& msg) : std::invalid_argument(msg) {}
};

// A numeric scan could not produce an estimate (no admissible samples,
// too few tail samples, every alpha skipped, ...).
struct EstimationError : std::runtime_error {
  explicit EstimationError(const std::string& msg) : std::runtime_error(msg) {}
};

// A contract between modules was violated (dimension mismatch, a
// construction that requires convexity metadata, ...).
struct ContractError : std::logic_error {
  explicit ContractError(const std::string& msg) : std::logic_error(msg) {}
};

struct LookupError : std::out_of_range {
  explicit LookupError(const std::string& msg) : std::out_of_range(msg) {}
};

struct ReconstructionError : std::runtime_error {
  explicit ReconstructionError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace subsmooth
