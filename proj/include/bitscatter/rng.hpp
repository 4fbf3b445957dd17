#pragma once

#include <cstdint>
#include <random>

namespace bitscatter {

/// Identifies a deterministic pseudo-random stream.
struct RngSeed {
  std::uint64_t value = 0;

  friend bool operator==(const RngSeed&, const RngSeed&) = default;
};

/// One SplitMix64 output step applied to `x`.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Derives an independent child seed for sub-stream `stream` of `parent`.
RngSeed derive_seed(RngSeed parent, std::uint64_t stream) noexcept;

// Sub-stream labels used when one run needs several independent generators.
namespace streams {
inline constexpr std::uint64_t kTraining = 1;
inline constexpr std::uint64_t kTest = 2;
inline constexpr std::uint64_t kInitialState = 3;
}  // namespace streams

/// mt19937_64 behind a small interface whose outputs are identical on every
/// conforming standard library (no std::*_distribution involved).
class Rng {
 public:
  explicit Rng(RngSeed seed) : engine_(splitmix64(seed.value)) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform double in [0, 1) built from the top 53 bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// 1 with probability p. p = 0 and p = 1 are exact.
  bool bernoulli(double p) { return uniform() < p; }

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

}  // namespace bitscatter
