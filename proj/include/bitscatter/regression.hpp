#pragma once

#include <span>

namespace bitscatter {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

/// y = a x^2 + b x + c.
struct QuadraticFit {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;

  double operator()(double x) const noexcept { return (a * x + b) * x + c; }
};

/// Least-squares quadratic through `points`. Throws UndefinedStatisticError
/// when the design matrix is rank deficient (fewer than three distinct x).
QuadraticFit regress_quadratic(std::span<const Point2> points);

}  // namespace bitscatter
