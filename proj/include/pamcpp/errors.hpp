#pragma once

#include <stdexcept>
#include <string>

namespace pamcpp {

// Malformed input document (syntax, missing/ill-typed fields).
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Structurally valid input violating a model invariant.
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Random instance generation could not satisfy its constraints.
struct PlacementError : std::runtime_error {
  explicit PlacementError(const std::string& msg) : std::runtime_error(msg) {}
};

// A solver-internal invariant was broken; never expected on valid inputs.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace pamcpp
