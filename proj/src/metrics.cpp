#include "bitscatter/metrics.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "bitscatter/errors.hpp"

namespace bitscatter {
namespace {

void check_word_len(int w) {
  if (w < 1 || w > 16) throw std::domain_error("word length must lie in [1, 16]");
}

}  // namespace

WordDistribution empirical_word_dist(const BitSequence& seq, int w, WindowScheme scheme) {
  check_word_len(w);
  const auto wl = static_cast<std::size_t>(w);
  if (seq.size() < wl)
    throw InsufficientDataError("empirical_word_dist: sequence shorter than the word length");

  const std::size_t cells = std::size_t{1} << w;
  const std::size_t mask = cells - 1;
  std::vector<std::size_t> counts(cells, 0);
  std::size_t windows = 0;
  if (scheme == WindowScheme::kSliding) {
    std::size_t word = 0;
    for (std::size_t i = 0; i < seq.size(); ++i) {
      word = ((word << 1) | seq[i]) & mask;
      if (i + 1 >= wl) {
        ++counts[word];
        ++windows;
      }
    }
  } else {
    for (std::size_t start = 0; start + wl <= seq.size(); start += wl) {
      std::size_t word = 0;
      for (std::size_t j = 0; j < wl; ++j) word = (word << 1) | seq[start + j];
      ++counts[word];
      ++windows;
    }
  }

  WordDistribution dist{w, std::vector<double>(cells)};
  for (std::size_t u = 0; u < cells; ++u)
    dist.probs[u] = static_cast<double>(counts[u]) / static_cast<double>(windows);
  return dist;
}

WordDistribution bernoulli_word_dist(double p, int w) {
  check_word_len(w);
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("bernoulli_word_dist: p must lie in [0, 1]");
  const std::size_t cells = std::size_t{1} << w;
  WordDistribution dist{w, std::vector<double>(cells)};
  for (std::size_t u = 0; u < cells; ++u) {
    const int ones = std::popcount(u);
    // std::pow(0, 0) is 1, which gives the point masses at p = 0 and p = 1.
    dist.probs[u] = std::pow(p, ones) * std::pow(1.0 - p, w - ones);
  }
  return dist;
}

double kl_divergence(const WordDistribution& p, const WordDistribution& q) {
  if (p.word_len != q.word_len || p.probs.size() != q.probs.size())
    throw std::invalid_argument("kl_divergence: word lengths differ");
  double d = 0.0;
  for (std::size_t u = 0; u < p.probs.size(); ++u) {
    if (p.probs[u] <= 0.0) continue;
    if (q.probs[u] <= 0.0)
      throw UndefinedStatisticError("kl_divergence: model assigns zero probability to an observed word");
    d += p.probs[u] * std::log2(p.probs[u] / q.probs[u]);
  }
  // Rounding can leave a tiny negative value for equal distributions.
  return d < 0.0 ? 0.0 : d;
}

double frequency_deviation(const BitSequence& seq, double p) {
  if (seq.empty()) throw std::domain_error("frequency_deviation: empty sequence");
  return std::abs(seq.ones_fraction() - p);
}

double mean(std::span<const double> xs) {
  if (xs.empty()) throw InsufficientDataError("mean: no values");
  return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

double sample_stddev(std::span<const double> xs) {
  if (xs.size() < 2) {
    if (xs.empty()) throw InsufficientDataError("sample_stddev: no values");
    return 0.0;
  }
  const double mu = mean(xs);
  double ss = 0.0;
  for (double x : xs) ss += (x - mu) * (x - mu);
  return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

double pearson(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw InsufficientDataError("pearson: lists differ in length");
  if (xs.size() < 2) throw InsufficientDataError("pearson: need at least two pairs");
  const double mx = mean(xs);
  const double my = mean(ys);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mx;
    const double dy = ys[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) throw UndefinedStatisticError("pearson: constant input");
  const double r = sxy / std::sqrt(sxx * syy);
  return std::clamp(r, -1.0, 1.0);
}

Moments skewness_kurtosis(std::span<const double> xs) {
  if (xs.size() < 3) throw InsufficientDataError("skewness_kurtosis: need at least three values");
  const double mu = mean(xs);
  double m2 = 0.0, m3 = 0.0, m4 = 0.0;
  for (double x : xs) {
    const double d = x - mu;
    const double d2 = d * d;
    m2 += d2;
    m3 += d2 * d;
    m4 += d2 * d2;
  }
  const double n = static_cast<double>(xs.size());
  m2 /= n;
  m3 /= n;
  m4 /= n;
  if (m2 == 0.0) throw UndefinedStatisticError("skewness_kurtosis: constant input");
  return {m3 / std::pow(m2, 1.5), m4 / (m2 * m2) - 3.0};
}

}  // namespace bitscatter
