#include "bitscatter/contour.hpp"

#include <cmath>
#include <stdexcept>

namespace bitscatter {
namespace {

Point2 lerp(Point2 p, Point2 q, double vp, double vq, double level) {
  const double t = vq == vp ? 0.5 : (level - vp) / (vq - vp);
  return {p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)};
}

}  // namespace

std::vector<Segment> contour_segments(std::span<const double> xs, std::span<const double> ys,
                                      std::span<const double> values, double level) {
  const std::size_t nx = xs.size(), ny = ys.size();
  if (values.size() != nx * ny) throw std::invalid_argument("contour_segments: values size mismatch");
  std::vector<Segment> out;
  if (nx < 2 || ny < 2) return out;

  for (std::size_t iy = 0; iy + 1 < ny; ++iy) {
    for (std::size_t ix = 0; ix + 1 < nx; ++ix) {
      // Corners counter-clockwise from bottom-left.
      const Point2 p[4] = {{xs[ix], ys[iy]}, {xs[ix + 1], ys[iy]}, {xs[ix + 1], ys[iy + 1]}, {xs[ix], ys[iy + 1]}};
      const double v[4] = {values[iy * nx + ix], values[iy * nx + ix + 1], values[(iy + 1) * nx + ix + 1],
                           values[(iy + 1) * nx + ix]};
      if (std::isnan(v[0]) || std::isnan(v[1]) || std::isnan(v[2]) || std::isnan(v[3])) continue;

      int mask = 0;
      for (int c = 0; c < 4; ++c)
        if (v[c] >= level) mask |= 1 << c;
      if (mask == 0 || mask == 15) continue;

      auto edge = [&](int e) {
        const int c0 = e, c1 = (e + 1) % 4;
        return lerp(p[c0], p[c1], v[c0], v[c1], level);
      };
      // Edge e joins corner e and corner e+1.
      std::vector<int> crossed;
      for (int e = 0; e < 4; ++e) {
        const bool a = (mask >> e) & 1, b = (mask >> ((e + 1) % 4)) & 1;
        if (a != b) crossed.push_back(e);
      }
      if (crossed.size() == 2) {
        out.push_back({edge(crossed[0]), edge(crossed[1])});
      } else {
        // Saddle: resolve with the centre value.
        const double centre = 0.25 * (v[0] + v[1] + v[2] + v[3]);
        const bool centre_high = centre >= level;
        const bool c0_high = mask & 1;
        if (centre_high == c0_high) {
          out.push_back({edge(0), edge(1)});
          out.push_back({edge(2), edge(3)});
        } else {
          out.push_back({edge(3), edge(0)});
          out.push_back({edge(1), edge(2)});
        }
      }
    }
  }
  return out;
}

}  // namespace bitscatter
