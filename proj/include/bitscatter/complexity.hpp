#pragma once

#include <array>
#include <cstddef>
#include <string_view>

#include "bitscatter/markov.hpp"
#include "bitscatter/sequences.hpp"

namespace bitscatter {

enum class CompressorKind { kLz, kPpm };

inline constexpr std::array<CompressorKind, 2> kAllCompressors = {CompressorKind::kLz, CompressorKind::kPpm};

std::string_view to_string(CompressorKind kind) noexcept;

/// Parses "lz" / "gzip" / "ppm". Throws std::invalid_argument otherwise.
CompressorKind parse_compressor(std::string_view name);

/// Compressed length of a file, a computable stand-in for its Kolmogorov
/// complexity.
struct ComplexityEstimate {
  std::size_t compressed_bytes = 0;
  std::size_t compressed_bits = 0;  // 8 * compressed_bytes
  CompressorKind kind = CompressorKind::kLz;
};

Bytes compress(ByteView data, CompressorKind kind);

/// Compresses encode_ascii(seq). Container bytes are included.
ComplexityEstimate estimate_complexity(const BitSequence& seq, CompressorKind kind);

/// Compressed over uncompressed length of the system file (2^k bytes).
double sys_ratio(const DecisionVector& decisions, CompressorKind kind);

/// H(p) in bits, with 0 log 0 = 0. Throws std::domain_error outside [0, 1].
double binary_entropy(double p);

/// n H(p) + (1/2) log2 n bits, the additive constant taken as 0.
/// Throws std::domain_error if n = 0 or p is outside [0, 1].
double entropy_bound(std::size_t n, double p);

}  // namespace bitscatter
