#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "bitscatter/errors.hpp"
#include "bitscatter/metrics.hpp"
#include "bitscatter/rng.hpp"

using namespace bitscatter;

namespace {

double total(const WordDistribution& d) { return std::accumulate(d.probs.begin(), d.probs.end(), 0.0); }

}  // namespace

TEST(EmpiricalWords, SingleWindow) {
  const auto d = empirical_word_dist(BitSequence::from_string("0000"), 4);
  ASSERT_EQ(d.probs.size(), 16u);
  EXPECT_DOUBLE_EQ(d.probs[0], 1.0);
  EXPECT_DOUBLE_EQ(total(d), 1.0);
}

TEST(EmpiricalWords, FiveSlidingWindows) {
  const auto d = empirical_word_dist(BitSequence::from_string("11110000"), 4);
  for (unsigned word : {0b1111u, 0b1110u, 0b1100u, 0b1000u, 0b0000u}) EXPECT_DOUBLE_EQ(d.probs[word], 0.2);
  EXPECT_NEAR(total(d), 1.0, 1e-12);
}

TEST(EmpiricalWords, PairsOfAlternatingSequence) {
  const auto d = empirical_word_dist(BitSequence::from_string("0101"), 2);
  EXPECT_DOUBLE_EQ(d.probs[0b01], 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(d.probs[0b10], 1.0 / 3.0);
}

TEST(EmpiricalWords, DisjointBlocks) {
  const auto d = empirical_word_dist(BitSequence::from_string("110000111"), 4, WindowScheme::kDisjoint);
  EXPECT_DOUBLE_EQ(d.probs[0b1100], 0.5);
  EXPECT_DOUBLE_EQ(d.probs[0b0011], 0.5);
}

TEST(EmpiricalWords, RejectsShortInputAndBadLength) {
  EXPECT_THROW(empirical_word_dist(BitSequence::from_string("010"), 4), InsufficientDataError);
  EXPECT_THROW(empirical_word_dist(BitSequence::from_string("010"), 0), std::domain_error);
}

TEST(EmpiricalWords, ComplementSymmetry) {
  Rng rng(RngSeed{1});
  for (int trial = 0; trial < 50; ++trial) {
    const int w = 1 + static_cast<int>(rng.below(6));
    const auto x = random_bernoulli(w + rng.below(200), rng.uniform(), RngSeed{rng.next()});
    BitSequence flipped;
    for (auto b : x) flipped.push_back(!b);
    const auto a = empirical_word_dist(x, w), b = empirical_word_dist(flipped, w);
    const std::size_t mask = (std::size_t{1} << w) - 1;
    for (std::size_t i = 0; i <= mask; ++i) ASSERT_DOUBLE_EQ(a.probs[i], b.probs[mask ^ i]);
  }
}

TEST(BernoulliWords, UniformAndPointMass) {
  for (double p : bernoulli_word_dist(0.5, 4).probs) EXPECT_DOUBLE_EQ(p, 1.0 / 16);
  const auto d = bernoulli_word_dist(0.0, 4);
  EXPECT_DOUBLE_EQ(d.probs[0], 1.0);
  EXPECT_DOUBLE_EQ(total(d), 1.0);
}

TEST(BernoulliWords, ClosedFormPairs) {
  const auto d = bernoulli_word_dist(0.3, 2);
  EXPECT_NEAR(d.probs[0b00], 0.7 * 0.7, 1e-15);
  EXPECT_NEAR(d.probs[0b01], 0.7 * 0.3, 1e-15);
  EXPECT_NEAR(d.probs[0b10], 0.3 * 0.7, 1e-15);
  EXPECT_NEAR(d.probs[0b11], 0.3 * 0.3, 1e-15);
}

TEST(BernoulliWords, SumsToOneOnDenseGrid) {
  for (int i = 0; i <= 1000; ++i)
    for (int w : {1, 4, 8}) ASSERT_NEAR(total(bernoulli_word_dist(i / 1000.0, w)), 1.0, 1e-12);
  EXPECT_THROW(bernoulli_word_dist(-0.01, 4), std::domain_error);
}

TEST(Kl, IdenticalIsZero) {
  const auto d = bernoulli_word_dist(0.37, 4);
  EXPECT_DOUBLE_EQ(kl_divergence(d, d), 0.0);
  EXPECT_DOUBLE_EQ(kl_divergence(empirical_word_dist(BitSequence::from_string("0000000"), 4), bernoulli_word_dist(0.0, 4)),
                   0.0);
}

TEST(Kl, HandComputedFiveWords) {
  const auto x = BitSequence::from_string("11110000");
  const double d = kl_divergence(empirical_word_dist(x, 4), bernoulli_word_dist(x.ones_fraction(), 4));
  EXPECT_NEAR(d, std::log2(16.0 / 5.0), 1e-12);
  EXPECT_NEAR(d, 1.678, 1e-3);
}

TEST(Kl, SupportViolationIsUndefined) {
  EXPECT_THROW(kl_divergence(bernoulli_word_dist(0.5, 2), bernoulli_word_dist(0.0, 2)), UndefinedStatisticError);
  EXPECT_THROW(kl_divergence(bernoulli_word_dist(0.5, 2), bernoulli_word_dist(0.5, 3)), std::invalid_argument);
}

TEST(Kl, GibbsInequalityOnRandomPairs) {
  Rng rng(RngSeed{2});
  for (int trial = 0; trial < 200; ++trial) {
    WordDistribution p{3, std::vector<double>(8)}, q{3, std::vector<double>(8)};
    double sp = 0, sq = 0;
    for (int i = 0; i < 8; ++i) {
      sp += p.probs[i] = rng.uniform() + 1e-3;
      sq += q.probs[i] = rng.uniform() + 1e-3;
    }
    for (int i = 0; i < 8; ++i) {
      p.probs[i] /= sp;
      q.probs[i] /= sq;
    }
    ASSERT_GT(kl_divergence(p, q), 0.0);
    ASSERT_EQ(kl_divergence(p, p), 0.0);
  }
}

TEST(Kl, RandomSequencesSitNearZero) {
  for (double p : {0.2, 0.3, 0.5}) {
    double sum = 0.0;
    for (std::uint64_t s = 0; s < 20; ++s) {
      const auto x = random_bernoulli(1000, p, RngSeed{s + 50});
      sum += kl_divergence(empirical_word_dist(x, 4), bernoulli_word_dist(x.ones_fraction(), 4));
    }
    EXPECT_LT(sum / 20, 0.05) << "p=" << p;
  }
}

TEST(FrequencyDeviation, Examples) {
  EXPECT_DOUBLE_EQ(frequency_deviation(BitSequence::from_string("1010"), 0.5), 0.0);
  EXPECT_DOUBLE_EQ(frequency_deviation(BitSequence::from_string("1111"), 0.5), 0.5);
  EXPECT_DOUBLE_EQ(frequency_deviation(BitSequence::from_string("1101"), 0.25), 0.5);
}

TEST(Pearson, Examples) {
  const std::vector<double> xs{1, 2, 3, 4, 5};
  std::vector<double> ys, neg;
  for (double x : xs) {
    ys.push_back(2 * x + 1);
    neg.push_back(-x);
  }
  EXPECT_NEAR(pearson(xs, ys), 1.0, 1e-12);
  EXPECT_NEAR(pearson(xs, neg), -1.0, 1e-12);
  EXPECT_NEAR(pearson(std::vector<double>{1, 2, 3}, std::vector<double>{1, 3, 2}), 0.5, 1e-12);
  EXPECT_THROW(pearson(xs, std::vector<double>(5, 1.0)), UndefinedStatisticError);
}

TEST(Pearson, AffineInvariance) {
  Rng rng(RngSeed{3});
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> x(20), y(20), xa(20), yn(20);
    const double a = 0.1 + 10 * rng.uniform(), b = 100 * (rng.uniform() - 0.5);
    for (int i = 0; i < 20; ++i) {
      x[i] = rng.uniform();
      y[i] = x[i] + rng.uniform();
      xa[i] = a * x[i] + b;
      yn[i] = -a * y[i] + b;
    }
    const double r = pearson(x, y);
    ASSERT_NEAR(pearson(xa, y), r, 1e-9);
    ASSERT_NEAR(pearson(x, yn), -r, 1e-9);
  }
}

TEST(Moments, SymmetricAndSkewed) {
  EXPECT_NEAR(skewness_kurtosis(std::vector<double>{-1, 0, 1}).skewness, 0.0, 1e-15);
  EXPECT_NEAR(skewness_kurtosis(std::vector<double>{0, 0, 0, 1}).skewness, 2.0 / std::sqrt(3.0), 1e-12);
  EXPECT_THROW(skewness_kurtosis(std::vector<double>{2, 2, 2}), UndefinedStatisticError);
}

TEST(Moments, NormalSample) {
  Rng rng(RngSeed{4});
  std::vector<double> xs;
  while (xs.size() < 100000) {
    const double u1 = 1.0 - rng.uniform(), u2 = rng.uniform();
    const double r = std::sqrt(-2 * std::log(u1));
    xs.push_back(r * std::cos(2 * std::numbers::pi * u2));
    xs.push_back(r * std::sin(2 * std::numbers::pi * u2));
  }
  const auto m = skewness_kurtosis(xs);
  EXPECT_LT(std::abs(m.skewness), 0.05);
  EXPECT_LT(std::abs(m.excess_kurtosis), 0.1);
}

TEST(Summary, MeanAndSampleStd) {
  EXPECT_DOUBLE_EQ(mean(std::vector<double>{1, 2, 3}), 2.0);
  EXPECT_DOUBLE_EQ(sample_stddev(std::vector<double>{1, 2, 3}), 1.0);
  EXPECT_DOUBLE_EQ(sample_stddev(std::vector<double>{4}), 0.0);
}
