#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <vector>

#include "bitscatter/harness.hpp"

namespace bitscatter {

struct SurfacePoint {
  double x = 0.0;
  double y = 0.0;
  double value = 0.0;
};

struct SurfaceOptions {
  std::size_t nx = 40;
  std::size_t ny = 40;
  double radius_cells = 2.0;  // samples farther than this from a cell centre are ignored
  double power = 2.0;         // inverse-distance weighting exponent
};

/// Scalar field on a regular grid. Cells are indexed row-major by
/// (iy, ix); a cell holds a value only when admissible.
struct SurfaceGrid {
  std::vector<double> x_edges;  // nx + 1
  std::vector<double> y_edges;  // ny + 1
  std::size_t nx = 0;
  std::size_t ny = 0;
  std::vector<double> values;             // NaN where inadmissible
  std::vector<std::uint8_t> admissible;

  std::optional<double> at(std::size_t ix, std::size_t iy) const;
  double x_center(std::size_t ix) const { return 0.5 * (x_edges[ix] + x_edges[ix + 1]); }
  double y_center(std::size_t iy) const { return 0.5 * (y_edges[iy] + y_edges[iy + 1]); }
  std::size_t admissible_count() const;
};

/// Inverse-distance-weighted surface over the bounding box of `points`.
/// An axis with zero extent collapses to a single unit-wide bin.
/// Throws InsufficientDataError when `points` is empty.
SurfaceGrid interpolate_surface(std::span<const SurfacePoint> points, const SurfaceOptions& options = {});

enum class SurfaceValue { kP0, kRho };

/// Surface over the (Delta0, l0) plane of `value`, using l0 and rho from
/// `compressor`. Only records with a valid Delta0 take part; at least ten
/// are required (InsufficientDataError otherwise).
SurfaceGrid build_surface(std::span<const RunRecord> records, SurfaceValue value, CompressorKind compressor,
                          const SurfaceOptions& options = {});

/// Writes `<stem>.csv` (ny rows of nx values, empty where inadmissible, row
/// 0 = lowest y) and the sidecars `<stem>_x_edges.csv`, `<stem>_y_edges.csv`.
void write_surface_csv(const SurfaceGrid& grid, const std::filesystem::path& stem);

}  // namespace bitscatter
