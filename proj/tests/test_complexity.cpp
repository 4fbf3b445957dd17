#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "bitscatter/complexity.hpp"
#include "bitscatter/gzip.hpp"
#include "bitscatter/markov.hpp"
#include "bitscatter/ppm.hpp"

using namespace bitscatter;

TEST(CompressorKind, NamesRoundTrip) {
  for (CompressorKind kind : kAllCompressors) EXPECT_EQ(parse_compressor(to_string(kind)), kind);
  EXPECT_EQ(parse_compressor("gzip"), CompressorKind::kLz);
  EXPECT_THROW(parse_compressor("bzip2"), std::invalid_argument);
}

TEST(Compress, DispatchesToEachCoder) {
  const Bytes data{'0', '1', '1'};
  EXPECT_EQ(compress(data, CompressorKind::kLz), lz_compress(data));
  EXPECT_EQ(compress(data, CompressorKind::kPpm), ppm_compress(data));
}

TEST(EstimateComplexity, EmptySequenceIsContainerMinimum) {
  const auto lz = estimate_complexity(BitSequence(), CompressorKind::kLz);
  EXPECT_EQ(lz.compressed_bytes, lz_compress(Bytes{}).size());
  EXPECT_EQ(estimate_complexity(BitSequence(), CompressorKind::kPpm).compressed_bytes, 4u);
}

TEST(EstimateComplexity, AllZeroSequenceUnderThirtyBytes) {
  const BitSequence zeros(std::vector<std::uint8_t>(500, 0));
  const auto e = estimate_complexity(zeros, CompressorKind::kLz);
  EXPECT_LT(e.compressed_bytes, 30u);
  EXPECT_EQ(e.compressed_bits, 8 * e.compressed_bytes);
}

TEST(SysRatio, SmallSystemFileAboveUnity) {
  const DecisionVector d(2, BitSequence::from_string("1100"));
  EXPECT_GT(sys_ratio(d, CompressorKind::kLz), 1.0);
}

TEST(SysRatio, ConstantLargeSystemFileBelowOneTenth) {
  for (std::uint8_t bit : {0, 1}) {
    const DecisionVector d(10, BitSequence(std::vector<std::uint8_t>(1024, bit)));
    for (CompressorKind kind : kAllCompressors) EXPECT_LT(sys_ratio(d, kind), 0.1);
  }
}

TEST(SysRatio, PpmNoLargerThanGzipOnSmallSystemFiles) {
  // Learned systems of order <= 4 from the paper source.
  int wins = 0, total = 0;
  for (int k = 1; k <= 4; ++k)
    for (std::uint64_t s = 0; s < 30; ++s) {
      const auto x = generate(build_paper_source(5), 100 + 97 * s, RngSeed{1000 * k + s}, 0);
      const auto model = train(x, k);
      wins += sys_ratio(model.decisions, CompressorKind::kPpm) <= sys_ratio(model.decisions, CompressorKind::kLz);
      ++total;
    }
  EXPECT_GE(total, 100);
  EXPECT_GE(static_cast<double>(wins) / total, 0.95);
}

TEST(Entropy, BinaryEntropyValues) {
  EXPECT_DOUBLE_EQ(binary_entropy(0.5), 1.0);
  EXPECT_DOUBLE_EQ(binary_entropy(0.0), 0.0);
  EXPECT_DOUBLE_EQ(binary_entropy(1.0), 0.0);
  EXPECT_NEAR(binary_entropy(0.3), -(0.3 * std::log2(0.3) + 0.7 * std::log2(0.7)), 1e-15);
  EXPECT_THROW(binary_entropy(1.1), std::domain_error);
}

TEST(Entropy, BoundExamples) {
  EXPECT_DOUBLE_EQ(entropy_bound(1024, 0.5), 1029.0);
  EXPECT_NEAR(entropy_bound(1000, 0.0), 0.5 * std::log2(1000.0), 1e-12);
  EXPECT_NEAR(entropy_bound(1000, 0.0), 4.983, 1e-3);
  const double h = -(0.3 * std::log2(0.3) + 0.7 * std::log2(0.7));
  EXPECT_NEAR(entropy_bound(1000, 0.3), 1000 * h + 0.5 * std::log2(1000.0), 1e-9);
  EXPECT_NEAR(entropy_bound(1000, 0.3), 886.3, 0.05);
}
