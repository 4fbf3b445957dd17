#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "bitscatter/sequences.hpp"

namespace bitscatter {

/// Index of a Markov state: the last k bits read as an unsigned integer with
/// the oldest bit most significant.
using StateIndex = std::uint32_t;

/// Largest model order accepted anywhere (2^24 states).
inline constexpr int kMaxOrder = 24;

/// Order-k binary Markov model: probability of emitting 1 from each state.
class TransitionTable {
 public:
  /// Throws std::domain_error unless 1 <= order <= kMaxOrder, the table has
  /// 2^order entries, and every entry lies in [0, 1].
  TransitionTable(int order, std::vector<double> emit_one);

  int order() const noexcept { return order_; }
  std::size_t num_states() const noexcept { return emit_one_.size(); }
  double emit_one(StateIndex state) const { return emit_one_.at(state); }
  std::span<const double> probabilities() const noexcept { return emit_one_; }

 private:
  int order_;
  std::vector<double> emit_one_;
};

/// The learner's "system": one MAP bit decision per state.
class DecisionVector {
 public:
  DecisionVector(int order, BitSequence decisions);

  int order() const noexcept { return order_; }
  std::size_t num_states() const noexcept { return decisions_.size(); }
  std::uint8_t operator[](StateIndex state) const { return decisions_[state]; }
  const BitSequence& bits() const noexcept { return decisions_; }

  friend bool operator==(const DecisionVector&, const DecisionVector&) = default;

 private:
  int order_;
  BitSequence decisions_;
};

struct TrainedModel {
  TransitionTable estimates;          // p-hat(1|i); 1/2 for unvisited states
  DecisionVector decisions;           // 1 iff estimate > 1/2
  std::vector<std::size_t> visits;    // occurrences of each state in training
};

struct PredictionOutcome {
  BitSequence predictions;       // y, one per predicted position
  BitSequence mistakes;          // xi: 1 where y != x
  BitSequence mistakes_on_zero;  // xi_0: xi restricted to 0-predictions
  std::size_t n0 = 0;            // |xi_0|
  double p0_hat = 0.0;           // fraction of ones in xi_0 (0 when n0 = 0)
  double overall_error = 0.0;    // fraction of ones in xi
  std::size_t effective_length = 0;
};

/// Source with emit_one = 0.7 on the first half of the states and 0.3 on the
/// second half, so the Bayes error rate is 0.3 and every order below k_star
/// sees conditional probabilities of exactly 1/2.
TransitionTable build_paper_source(int k_star);

/// Emits n bits from `table`, starting in state `init`. After each bit b the
/// state becomes ((state << 1) | b) mod 2^k.
BitSequence generate(const TransitionTable& table, std::size_t n, RngSeed seed, StateIndex init);

/// Frequency estimates of p(1|i) from every position t >= k of `x`, with MAP
/// decisions (strict > 1/2, ties and unvisited states decide 0).
TrainedModel train(const BitSequence& x, int k);

/// Runs the decision rule over `x`. The first k bits only seed the state;
/// every later bit receives a prediction. Throws std::domain_error if
/// x.size() <= order.
PredictionOutcome predict(const DecisionVector& model, const BitSequence& x);

/// MAP rule applied to the true probabilities.
DecisionVector bayes_predictor(const TransitionTable& table);

/// The system file: the decision vector as one ASCII byte per state.
void write_system_file(const std::filesystem::path& path, const DecisionVector& decisions);

/// Debug sidecar: state,visits,estimate,decision.
void write_model_sidecar_csv(const std::filesystem::path& path, const TrainedModel& model);

}  // namespace bitscatter
