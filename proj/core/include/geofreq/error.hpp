#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace geofreq {

/// Operands of incompatible dimension (vector length, matrix shape).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The vector magnitude fell below the guard floor, so ratios by |v|^2 are
/// undefined at this sample.
class SingularMagnitudeError : public std::domain_error {
 public:
  SingularMagnitudeError(double magnitude, double floor)
      : std::domain_error("vector magnitude " + std::to_string(magnitude) +
                          " is at or below guard floor " +
                          std::to_string(floor)),
        magnitude_(magnitude),
        floor_(floor) {}

  double magnitude() const noexcept { return magnitude_; }
  double floor() const noexcept { return floor_; }

 private:
  double magnitude_;
  double floor_;
};

/// Malformed CSV input. `row()` is 1-based and counts the header line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t row, const std::string& what)
      : std::runtime_error("row " + std::to_string(row) + ": " + what),
        row_(row) {}

  std::size_t row() const noexcept { return row_; }

 private:
  std::size_t row_;
};

}  // namespace geofreq
