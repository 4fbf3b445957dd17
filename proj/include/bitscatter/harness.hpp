#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "bitscatter/complexity.hpp"
#include "bitscatter/metrics.hpp"
#include "bitscatter/rng.hpp"

namespace bitscatter {

struct RunConfig {
  int k_star = 5;         // source order
  int k = 5;              // learner order
  std::size_t m = 1000;   // training length
  std::size_t n = 1000;   // test length
  RngSeed seed{1};
  std::vector<CompressorKind> compressors{kAllCompressors.begin(), kAllCompressors.end()};
  int word_len = 4;
  WindowScheme windows = WindowScheme::kSliding;
  KlDirection kl_direction = KlDirection::kEmpiricalToModel;

  /// Throws std::invalid_argument naming the first offending field.
  void validate() const;
};

/// One experiment's measurements. Fields of a compressor that was not
/// selected stay 0.
struct RunRecord {
  int k = 0;
  std::size_t m = 0;
  int repeat = 0;
  std::uint64_t seed = 0;
  double rho_lz = 0.0;
  double rho_ppm = 0.0;
  std::size_t l0_lz_bytes = 0;
  std::size_t l0_ppm_bytes = 0;
  double delta0_bits = 0.0;  // 0 when !delta0_valid
  double p0_hat = 0.0;
  std::size_t n0 = 0;
  double overall_error = 0.0;
  std::size_t effective_n = 0;
  bool delta0_valid = false;  // false when n0 < word length

  double rho(CompressorKind kind) const noexcept { return kind == CompressorKind::kLz ? rho_lz : rho_ppm; }
  std::size_t l0_bytes(CompressorKind kind) const noexcept {
    return kind == CompressorKind::kLz ? l0_lz_bytes : l0_ppm_bytes;
  }
  std::size_t l0_bits(CompressorKind kind) const noexcept { return 8 * l0_bytes(kind); }

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

/// Generates training and test data from build_paper_source(k_star), trains
/// an order-k learner, predicts, and measures the system file and xi_0.
/// Deterministic in cfg.
RunRecord run_once(const RunConfig& cfg, int repeat = 0);

struct SweepSpec {
  int k_star = 5;
  std::vector<int> k_values;
  std::vector<std::size_t> m_values;
  int repeats = 5;
  std::size_t n = 1000;
  RngSeed base_seed{1};
  int word_len = 4;
  WindowScheme windows = WindowScheme::kSliding;
  KlDirection kl_direction = KlDirection::kEmpiricalToModel;
  std::vector<CompressorKind> compressors{kAllCompressors.begin(), kAllCompressors.end()};
  unsigned workers = 1;

  /// k in 1..10, m in {100, 500, 1000, 2000, 5000, 10000}, 5 repeats, n = 1000.
  static SweepSpec desk_scale(int k_star);
  /// k in 1..10, m in {100, 200, ..., 10000}, 10 repeats, n = 1000.
  static SweepSpec paper_scale(int k_star);

  std::size_t run_count() const noexcept;
};

/// Seed of one sweep cell, derived from the base seed and (k, m, repeat).
RngSeed run_seed(RngSeed base, int k, std::size_t m, int repeat) noexcept;

/// Runs every (k, m, repeat) combination on `spec.workers` threads.
/// `on_record` (if set) sees each record as it completes, serialized but in
/// completion order. The result is sorted by (k, m, repeat).
std::vector<RunRecord> sweep(const SweepSpec& spec,
                             const std::function<void(const RunRecord&)>& on_record = {});

}  // namespace bitscatter
