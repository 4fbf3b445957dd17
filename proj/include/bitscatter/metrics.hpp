#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "bitscatter/sequences.hpp"

namespace bitscatter {

/// Distribution over the 2^w binary words of length w, indexed by the word
/// read as an unsigned integer (first bit most significant).
struct WordDistribution {
  int word_len = 4;
  std::vector<double> probs;
};

/// How empirical word frequencies are sampled from a sequence.
enum class WindowScheme {
  kSliding,   // every offset: len - w + 1 windows
  kDisjoint,  // consecutive non-overlapping blocks: floor(len / w) windows
};

/// Which argument of the KL divergence is the empirical distribution.
enum class KlDirection {
  kEmpiricalToModel,  // D(empirical || model)
  kModelToEmpirical,  // D(model || empirical)
};

/// Word frequencies of `seq`. Throws InsufficientDataError if no complete
/// window fits, std::domain_error unless 1 <= w <= 16.
WordDistribution empirical_word_dist(const BitSequence& seq, int w,
                                     WindowScheme scheme = WindowScheme::kSliding);

/// P(u) = p^ones(u) (1-p)^(w-ones(u)).
WordDistribution bernoulli_word_dist(double p, int w);

/// D(p || q) in bits. Throws std::invalid_argument on mismatched word lengths
/// and UndefinedStatisticError where q is 0 but p is not.
double kl_divergence(const WordDistribution& p, const WordDistribution& q);

/// |fraction of ones - p|. Throws std::domain_error on an empty sequence.
double frequency_deviation(const BitSequence& seq, double p);

double mean(std::span<const double> xs);

/// Sample standard deviation (n - 1 denominator); 0 for a single value.
double sample_stddev(std::span<const double> xs);

/// Sample Pearson correlation. Throws InsufficientDataError for fewer than
/// two pairs or unequal lengths, UndefinedStatisticError if either list is
/// constant.
double pearson(std::span<const double> xs, std::span<const double> ys);

struct Moments {
  double skewness = 0.0;         // m3 / m2^1.5
  double excess_kurtosis = 0.0;  // m4 / m2^2 - 3
};

/// Population-moment skewness and excess kurtosis. Throws
/// InsufficientDataError below three values, UndefinedStatisticError for
/// constant input.
Moments skewness_kurtosis(std::span<const double> xs);

}  // namespace bitscatter
