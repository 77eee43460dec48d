#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace unitfield {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Evaluation point lies outside the chart's open domain rectangle.
struct PointOutOfDomain : Error {
  using Error::Error;
};

// Point is inside the domain but too close to the boundary for the stencil,
// or the configured step is out of proportion to the domain.
struct StepTooLarge : Error {
  using Error::Error;
};

// Invalid construction parameters (non-positive radius, bad grid size, ...).
struct BadParams : Error {
  using Error::Error;
};

// Two bundle vectors anchored at different points of the bundle.
struct BasePointMismatch : Error {
  using Error::Error;
};

// Sectional-curvature input pair fails the orthonormality or tangency check.
struct NonOrthonormalInput : Error {
  using Error::Error;
};

// The derivative operator vanishes where a caller demanded a regular frame.
struct DegenerateOperator : Error {
  using Error::Error;
};

// Malformed CLI usage (unknown scenario, unknown suite, bad flag value).
struct UsageError : Error {
  using Error::Error;
};

// Expression or chart-file syntax error; position is a 0-based offset
// (column for expressions, line for chart files).
struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t position) : Error(msg), position(position) {}
  std::size_t position = 0;
};

}  // namespace unitfield
