#pragma once

#include <stdexcept>
#include <string>

namespace shearspec {

// Base class for every failure the library raises; catch this to handle all.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Argument outside the mathematical domain (gamma poles, E <= 0, nu outside
// (1/2, 1], invalid parameters).
struct DomainError : Error {
  using Error::Error;
};

// Argument outside an implementation's declared evaluation range.
struct RangeError : Error {
  using Error::Error;
};

// Result not representable in double precision.
struct OverflowError : Error {
  using Error::Error;
};

// Series or iteration failed to reach its tolerance.
struct ConvergenceError : Error {
  using Error::Error;
};

// Adaptive quadrature could not meet the requested tolerance.
struct QuadratureError : Error {
  using Error::Error;
};

// Root bracketing failed or the bracket scan was exhausted.
struct BracketError : Error {
  using Error::Error;
};

// Eigenfunction matching ratio is numerically unusable (denominator ~ 0).
struct MatchingError : Error {
  using Error::Error;
};

// Two features (nodes, roots) too close to separate at working precision.
struct ResolutionError : Error {
  using Error::Error;
};

}  // namespace shearspec
