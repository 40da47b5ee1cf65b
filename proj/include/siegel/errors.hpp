#pragma once

#include <stdexcept>
#include <string>

namespace siegel {

/// Bad mathematical input: violated preconditions, non-dominant weights,
/// level constraints, divisibility.
class ValidationError : public std::invalid_argument {
public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// Input is well formed but outside what this engine computes: enumeration
/// caps, genus limits, Hecke elements that are not integral.
class ScopeError : public std::runtime_error {
public:
  explicit ScopeError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace siegel
