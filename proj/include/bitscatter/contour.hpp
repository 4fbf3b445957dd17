#pragma once

#include <span>
#include <vector>

#include "bitscatter/regression.hpp"

namespace bitscatter {

struct Segment {
  Point2 a;
  Point2 b;
};

/// Marching squares over node values laid out row-major (values[iy * xs.size() + ix]).
/// Squares touching a NaN node are skipped.
std::vector<Segment> contour_segments(std::span<const double> xs, std::span<const double> ys,
                                      std::span<const double> values, double level);

}  // namespace bitscatter
