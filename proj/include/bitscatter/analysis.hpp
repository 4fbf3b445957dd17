#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <vector>

#include "bitscatter/harness.hpp"
#include "bitscatter/metrics.hpp"
#include "bitscatter/regression.hpp"

namespace bitscatter {

struct Summary {
  std::size_t count = 0;
  double mean = 0.0;    // NaN when count = 0
  double stddev = 0.0;  // sample standard deviation, 0 for one value
};

Summary summarize(std::span<const double> xs);

/// Per-k statistics. rho and overall_error use every run; the xi_0
/// statistics (l0, Delta0, p0_hat) use only runs with a valid Delta0.
struct KAggregate {
  int k = 0;
  std::size_t runs = 0;
  std::size_t valid_runs = 0;
  Summary rho_lz, rho_ppm, overall_error;
  Summary l0_lz, l0_ppm, delta0, p0_hat;

  const Summary& rho(CompressorKind kind) const { return kind == CompressorKind::kLz ? rho_lz : rho_ppm; }
  const Summary& l0(CompressorKind kind) const { return kind == CompressorKind::kLz ? l0_lz : l0_ppm; }
};

/// Sorted by k. Throws InsufficientDataError on an empty record list.
std::vector<KAggregate> aggregate_by_k(std::span<const RunRecord> records);

/// Whether mean rho is non-increasing in k, allowing each step to rise by at
/// most `slack`.
struct TrendReport {
  bool non_increasing = true;
  std::vector<int> violating_k;  // k whose mean exceeds the previous k's by more than slack
  double max_rise = 0.0;
  int argmin_k = 0;              // k with the smallest mean rho
};

TrendReport rho_trend(std::span<const KAggregate> by_k, CompressorKind kind, double slack, int k_from = 1);

/// Mean statistics of one (k, m) cell of the sweep grid.
struct CellMean {
  int k = 0;
  std::size_t m = 0;
  std::size_t runs = 0;
  std::size_t valid_runs = 0;
  double p0_hat = 0.0;  // over valid runs; NaN if none
  double overall_error = 0.0;
  double rho_lz = 0.0;
  double rho_ppm = 0.0;
};

std::vector<CellMean> cell_means(std::span<const RunRecord> records);

/// Cool (low-error) and hot (near-guessing) populations of xi_0.
struct ClusterSummary {
  static constexpr double kCoolBelow = 0.38;
  static constexpr double kHotAbove = 0.45;
  std::size_t cool_runs = 0;
  std::size_t hot_runs = 0;
  std::size_t gap_runs = 0;
  Summary cool_l0_lz;
  Summary hot_l0_lz;
};

struct AnalysisReport {
  int k_star = 0;
  std::size_t runs = 0;
  std::size_t valid_runs = 0;
  std::vector<KAggregate> by_k;
  std::vector<CellMean> cells;
  // Indexed by CompressorKind (0 = lz, 1 = ppm); empty when undefined.
  std::array<std::optional<double>, 2> pearson_l0_entropy;
  std::array<std::optional<double>, 2> pearson_l0_delta0;
  std::array<std::optional<Moments>, 2> l0_moments;
  std::array<double, 2> l0_mean{};
  std::vector<std::pair<int, std::optional<QuadraticFit>>> l0_vs_p0_fits;  // lz, per k
  ClusterSummary clusters;
  TrendReport rho_ppm_trend;
  TrendReport rho_lz_trend;
};

/// All headline statistics of a sweep. Throws InsufficientDataError when
/// there are no records.
AnalysisReport analyze(std::span<const RunRecord> records, int k_star);

/// Long-format CSV: metric,k,m,compressor,value (blank where not applicable).
void write_analysis_csv(const std::filesystem::path& path, const AnalysisReport& report);

inline std::size_t index_of(CompressorKind kind) { return kind == CompressorKind::kLz ? 0 : 1; }

}  // namespace bitscatter
