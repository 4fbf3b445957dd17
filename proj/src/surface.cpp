#include "bitscatter/surface.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "bitscatter/errors.hpp"
#include "bitscatter/records_csv.hpp"

namespace bitscatter {
namespace {

struct Axis {
  double lo;
  double width;
  std::size_t bins;
};

Axis make_axis(double lo, double hi, std::size_t bins) {
  if (hi > lo) return {lo, (hi - lo) / static_cast<double>(bins), bins};
  return {lo - 0.5, 1.0, 1};
}

std::vector<double> edges(const Axis& a) {
  std::vector<double> e(a.bins + 1);
  for (std::size_t i = 0; i <= a.bins; ++i) e[i] = a.lo + a.width * static_cast<double>(i);
  return e;
}

void write_column(const std::filesystem::path& path, const std::vector<double>& values) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  for (double v : values) out << format_double(v) << '\n';
}

}  // namespace

std::optional<double> SurfaceGrid::at(std::size_t ix, std::size_t iy) const {
  const std::size_t i = iy * nx + ix;
  if (!admissible.at(i)) return std::nullopt;
  return values[i];
}

std::size_t SurfaceGrid::admissible_count() const {
  return static_cast<std::size_t>(std::count(admissible.begin(), admissible.end(), std::uint8_t{1}));
}

SurfaceGrid interpolate_surface(std::span<const SurfacePoint> points, const SurfaceOptions& options) {
  if (points.empty()) throw InsufficientDataError("interpolate_surface: no points");
  if (options.nx == 0 || options.ny == 0) throw std::invalid_argument("interpolate_surface: empty grid");

  double xlo = points[0].x, xhi = xlo, ylo = points[0].y, yhi = ylo;
  for (const auto& p : points) {
    xlo = std::min(xlo, p.x);
    xhi = std::max(xhi, p.x);
    ylo = std::min(ylo, p.y);
    yhi = std::max(yhi, p.y);
  }
  const Axis ax = make_axis(xlo, xhi, options.nx);
  const Axis ay = make_axis(ylo, yhi, options.ny);

  SurfaceGrid grid;
  grid.nx = ax.bins;
  grid.ny = ay.bins;
  grid.x_edges = edges(ax);
  grid.y_edges = edges(ay);
  const std::size_t cells = grid.nx * grid.ny;
  std::vector<double> weight_sum(cells, 0.0), value_sum(cells, 0.0);
  std::vector<double> exact_sum(cells, 0.0);
  std::vector<std::size_t> exact_count(cells, 0);

  const double r = options.radius_cells;
  const auto reach = static_cast<std::ptrdiff_t>(std::ceil(r));
  for (const auto& p : points) {
    const double gx = (p.x - ax.lo) / ax.width;
    const double gy = (p.y - ay.lo) / ay.width;
    const auto cx = static_cast<std::ptrdiff_t>(std::floor(gx));
    const auto cy = static_cast<std::ptrdiff_t>(std::floor(gy));
    for (std::ptrdiff_t iy = cy - reach; iy <= cy + reach; ++iy) {
      if (iy < 0 || iy >= static_cast<std::ptrdiff_t>(grid.ny)) continue;
      for (std::ptrdiff_t ix = cx - reach; ix <= cx + reach; ++ix) {
        if (ix < 0 || ix >= static_cast<std::ptrdiff_t>(grid.nx)) continue;
        const double d = std::hypot(gx - (static_cast<double>(ix) + 0.5), gy - (static_cast<double>(iy) + 0.5));
        if (d > r) continue;
        const auto cell = static_cast<std::size_t>(iy) * grid.nx + static_cast<std::size_t>(ix);
        if (d < 1e-12) {
          exact_sum[cell] += p.value;
          ++exact_count[cell];
          continue;
        }
        const double w = 1.0 / std::pow(d, options.power);
        weight_sum[cell] += w;
        value_sum[cell] += w * p.value;
      }
    }
  }

  grid.values.assign(cells, std::numeric_limits<double>::quiet_NaN());
  grid.admissible.assign(cells, 0);
  for (std::size_t c = 0; c < cells; ++c) {
    // A sample sitting on the centre determines the cell outright.
    if (exact_count[c] > 0) {
      grid.values[c] = exact_sum[c] / static_cast<double>(exact_count[c]);
      grid.admissible[c] = 1;
    } else if (weight_sum[c] > 0.0) {
      grid.values[c] = value_sum[c] / weight_sum[c];
      grid.admissible[c] = 1;
    }
  }
  return grid;
}

SurfaceGrid build_surface(std::span<const RunRecord> records, SurfaceValue value, CompressorKind compressor,
                          const SurfaceOptions& options) {
  std::vector<SurfacePoint> points;
  for (const auto& r : records) {
    if (!r.delta0_valid) continue;
    points.push_back({r.delta0_bits, static_cast<double>(r.l0_bytes(compressor)),
                      value == SurfaceValue::kP0 ? r.p0_hat : r.rho(compressor)});
  }
  if (points.size() < 10) throw InsufficientDataError("build_surface: need at least 10 records with a valid Delta0");
  return interpolate_surface(points, options);
}

void write_surface_csv(const SurfaceGrid& grid, const std::filesystem::path& stem) {
  auto path_with = [&](const std::string& suffix) {
    auto p = stem;
    p += suffix;
    return p;
  };
  {
    const auto path = path_with(".csv");
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    for (std::size_t iy = 0; iy < grid.ny; ++iy) {
      for (std::size_t ix = 0; ix < grid.nx; ++ix) {
        if (ix > 0) out << ',';
        if (auto v = grid.at(ix, iy)) out << format_double(*v);
      }
      out << '\n';
    }
  }
  write_column(path_with("_x_edges.csv"), grid.x_edges);
  write_column(path_with("_y_edges.csv"), grid.y_edges);
}

}  // namespace bitscatter
