#include "bitscatter/complexity.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "bitscatter/gzip.hpp"
#include "bitscatter/ppm.hpp"

namespace bitscatter {

std::string_view to_string(CompressorKind kind) noexcept {
  return kind == CompressorKind::kLz ? "lz" : "ppm";
}

CompressorKind parse_compressor(std::string_view name) {
  if (name == "lz" || name == "gzip") return CompressorKind::kLz;
  if (name == "ppm") return CompressorKind::kPpm;
  throw std::invalid_argument("unknown compressor '" + std::string(name) + "'");
}

Bytes compress(ByteView data, CompressorKind kind) {
  return kind == CompressorKind::kLz ? lz_compress(data) : ppm_compress(data);
}

ComplexityEstimate estimate_complexity(const BitSequence& seq, CompressorKind kind) {
  const std::size_t bytes = compress(encode_ascii(seq), kind).size();
  return {bytes, 8 * bytes, kind};
}

double sys_ratio(const DecisionVector& decisions, CompressorKind kind) {
  const std::size_t compressed = compress(encode_ascii(decisions.bits()), kind).size();
  return static_cast<double>(compressed) / static_cast<double>(decisions.num_states());
}

double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("binary_entropy: p must lie in [0, 1]");
  double h = 0.0;
  if (p > 0.0) h -= p * std::log2(p);
  if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
  return h;
}

double entropy_bound(std::size_t n, double p) {
  if (n == 0) throw std::domain_error("entropy_bound: n must be positive");
  const double nd = static_cast<double>(n);
  return nd * binary_entropy(p) + 0.5 * std::log2(nd);
}

}  // namespace bitscatter
