#pragma once

#include <stdexcept>
#include <string>

namespace mplab {

// Operand shapes disagree (vector lengths, matrix sizes, ambient dimensions).
class DimensionMismatch : public std::invalid_argument {
 public:
  explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

// Polynomial is not a single torus-weight vector.
class MixedWeights : public std::invalid_argument {
 public:
  explicit MixedWeights(const std::string& what) : std::invalid_argument(what) {}
};

// Gradient-identity checks were requested before the normalization was fixed.
class NormalizationUncalibrated : public std::logic_error {
 public:
  NormalizationUncalibrated()
      : std::logic_error("gradient identity normalization has not been calibrated") {}
};

}  // namespace mplab
