#pragma once

#include <stdexcept>
#include <string>

namespace e2m {

// Validation problems: bad shapes, bad arguments, malformed configs.
class ShapeError : public std::invalid_argument {
 public:
  explicit ShapeError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Numeric failures at runtime (NaN/Inf in a loss term, divergence).
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

// File format / I/O failures.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace e2m
