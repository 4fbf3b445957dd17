#include "bitscatter/markov.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>
#include <string>

namespace bitscatter {
namespace {

void check_order(int order, const char* who) {
  if (order < 1 || order > kMaxOrder)
    throw std::domain_error(std::string(who) + ": order must lie in [1, " +
                            std::to_string(kMaxOrder) + "], got " + std::to_string(order));
}

}  // namespace

TransitionTable::TransitionTable(int order, std::vector<double> emit_one)
    : order_(order), emit_one_(std::move(emit_one)) {
  check_order(order, "TransitionTable");
  if (emit_one_.size() != (std::size_t{1} << order))
    throw std::domain_error("TransitionTable: expected 2^order entries");
  for (double p : emit_one_)
    if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("TransitionTable: entries must lie in [0, 1]");
}

DecisionVector::DecisionVector(int order, BitSequence decisions)
    : order_(order), decisions_(std::move(decisions)) {
  check_order(order, "DecisionVector");
  if (decisions_.size() != (std::size_t{1} << order))
    throw std::domain_error("DecisionVector: expected 2^order decisions");
}

TransitionTable build_paper_source(int k_star) {
  check_order(k_star, "build_paper_source");
  const std::size_t states = std::size_t{1} << k_star;
  std::vector<double> emit(states);
  for (std::size_t i = 0; i < states; ++i) emit[i] = i < states / 2 ? 0.7 : 0.3;
  return TransitionTable(k_star, std::move(emit));
}

BitSequence generate(const TransitionTable& table, std::size_t n, RngSeed seed, StateIndex init) {
  if (init >= table.num_states()) throw std::domain_error("generate: initial state out of range");
  const StateIndex mask = static_cast<StateIndex>(table.num_states() - 1);
  Rng rng(seed);
  BitSequence out;
  out.reserve(n);
  StateIndex state = init;
  const auto probs = table.probabilities();
  for (std::size_t t = 0; t < n; ++t) {
    const bool bit = rng.bernoulli(probs[state]);
    out.push_back(bit);
    state = ((state << 1) | (bit ? 1u : 0u)) & mask;
  }
  return out;
}

TrainedModel train(const BitSequence& x, int k) {
  check_order(k, "train");
  const std::size_t states = std::size_t{1} << k;
  const StateIndex mask = static_cast<StateIndex>(states - 1);
  std::vector<std::size_t> visits(states, 0);
  std::vector<std::size_t> ones(states, 0);

  StateIndex state = 0;
  for (std::size_t t = 0; t < x.size(); ++t) {
    if (t >= static_cast<std::size_t>(k)) {
      ++visits[state];
      ones[state] += x[t];
    }
    state = ((state << 1) | x[t]) & mask;
  }

  std::vector<double> estimates(states, 0.5);
  BitSequence decisions;
  decisions.reserve(states);
  for (std::size_t i = 0; i < states; ++i) {
    if (visits[i] > 0) estimates[i] = static_cast<double>(ones[i]) / static_cast<double>(visits[i]);
    // 2*ones > visits is the exact form of estimate > 1/2.
    decisions.push_back(2 * ones[i] > visits[i]);
  }
  return TrainedModel{TransitionTable(k, std::move(estimates)), DecisionVector(k, std::move(decisions)),
                      std::move(visits)};
}

PredictionOutcome predict(const DecisionVector& model, const BitSequence& x) {
  const std::size_t k = static_cast<std::size_t>(model.order());
  if (x.size() <= k)
    throw std::domain_error("predict: test sequence must be longer than the model order");
  const StateIndex mask = static_cast<StateIndex>(model.num_states() - 1);

  PredictionOutcome out;
  out.effective_length = x.size() - k;
  out.predictions.reserve(out.effective_length);
  out.mistakes.reserve(out.effective_length);

  StateIndex state = 0;
  for (std::size_t t = 0; t < k; ++t) state = ((state << 1) | x[t]) & mask;

  std::size_t mistakes = 0;
  for (std::size_t t = k; t < x.size(); ++t) {
    const std::uint8_t y = model[state];
    const bool wrong = y != x[t];
    out.predictions.push_back(y);
    out.mistakes.push_back(wrong);
    mistakes += wrong;
    // On a 0-prediction the mistake bit equals the test bit itself.
    if (y == 0) out.mistakes_on_zero.push_back(x[t]);
    state = ((state << 1) | x[t]) & mask;
  }

  out.n0 = out.mistakes_on_zero.size();
  out.p0_hat = out.mistakes_on_zero.ones_fraction();
  out.overall_error = static_cast<double>(mistakes) / static_cast<double>(out.effective_length);
  return out;
}

DecisionVector bayes_predictor(const TransitionTable& table) {
  BitSequence decisions;
  decisions.reserve(table.num_states());
  for (double p : table.probabilities()) decisions.push_back(p > 0.5);
  return DecisionVector(table.order(), std::move(decisions));
}

void write_system_file(const std::filesystem::path& path, const DecisionVector& decisions) {
  write_bit_file(path, decisions.bits());
}

void write_model_sidecar_csv(const std::filesystem::path& path, const TrainedModel& model) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << "state,visits,estimate,decision\n";
  const auto est = model.estimates.probabilities();
  for (std::size_t i = 0; i < model.visits.size(); ++i) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, est[i], std::chars_format::general, 17);
    out << i << ',' << model.visits[i] << ',' << std::string(buf, res.ptr) << ','
        << static_cast<int>(model.decisions[static_cast<StateIndex>(i)]) << '\n';
  }
}

}  // namespace bitscatter
