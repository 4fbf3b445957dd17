#pragma once

#include <filesystem>
#include <span>
#include <string_view>
#include <vector>

#include "bitscatter/complexity.hpp"
#include "bitscatter/harness.hpp"

namespace bitscatter {

enum class Figure {
  kLearningCurves,  // mean error over the (k, m) grid with contours
  kRhoVsK,          // mean sysRatio against learner order
  kErrorRhoM,       // error against sysRatio, one curve per training length
  kL0VsRho,         // l0 envelope against sysRatio
  kDeltaVsRho,      // Delta0 envelope against sysRatio
  kRegressions,     // quadratic fits of l0 on p0
  kL0Entropy,       // l0 against the entropy bound
  kL0Delta,         // l0 against Delta0
  kHistogramL0,
  kErrorSurface,    // p0 over the Delta-l plane
  kRhoSurface,      // rho over the Delta-l plane
  kRhoRates,        // finite differences of mean rho
};

std::span<const Figure> all_figures();
std::string_view figure_name(Figure f);
Figure parse_figure(std::string_view name);  // throws std::invalid_argument

struct FigureOptions {
  int k_star = 5;
  CompressorKind compressor = CompressorKind::kLz;
};

/// Writes `<name>.svg` and its data CSV(s) into out_dir and returns the paths.
std::vector<std::filesystem::path> render_figure(Figure figure, std::span<const RunRecord> records,
                                                 const std::filesystem::path& out_dir,
                                                 const FigureOptions& options = {});

}  // namespace bitscatter
