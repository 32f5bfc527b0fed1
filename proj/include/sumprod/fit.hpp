#pragma once

#include <span>
#include <utility>

namespace sumprod {

/// log(value) ≈ intercept + slope·log(n), fitted by ordinary least squares.
struct ExponentFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

/// Needs at least three (n, value) pairs with n > 0 and value > 0, and at
/// least two distinct n. A constant series fits with r² = 1.
ExponentFit fit_exponent(std::span<const std::pair<double, double>> points);

}  // namespace sumprod
