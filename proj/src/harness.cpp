#include "bitscatter/harness.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>

#include "bitscatter/markov.hpp"

namespace bitscatter {

void RunConfig::validate() const {
  auto fail = [](const std::string& what) { throw std::invalid_argument(what); };
  if (k_star < 1 || k_star > kMaxOrder) fail("k_star must lie in [1, " + std::to_string(kMaxOrder) + "]");
  if (k < 1 || k > kMaxOrder) fail("k must lie in [1, " + std::to_string(kMaxOrder) + "]");
  if (m < 1) fail("m must be at least 1");
  if (n < 1) fail("n must be at least 1");
  if (n <= static_cast<std::size_t>(k)) fail("n must exceed k");
  if (word_len < 1 || word_len > 16) fail("word_len must lie in [1, 16]");
}

RunRecord run_once(const RunConfig& cfg, int repeat) {
  cfg.validate();
  const TransitionTable source = build_paper_source(cfg.k_star);
  Rng init_rng(derive_seed(cfg.seed, streams::kInitialState));
  const auto train_init = static_cast<StateIndex>(init_rng.below(source.num_states()));
  const auto test_init = static_cast<StateIndex>(init_rng.below(source.num_states()));

  const BitSequence training = generate(source, cfg.m, derive_seed(cfg.seed, streams::kTraining), train_init);
  const BitSequence test = generate(source, cfg.n, derive_seed(cfg.seed, streams::kTest), test_init);

  const TrainedModel model = train(training, cfg.k);
  const PredictionOutcome outcome = predict(model.decisions, test);

  RunRecord rec;
  rec.k = cfg.k;
  rec.m = cfg.m;
  rec.repeat = repeat;
  rec.seed = cfg.seed.value;
  for (CompressorKind kind : cfg.compressors) {
    const double rho = sys_ratio(model.decisions, kind);
    const std::size_t l0 = estimate_complexity(outcome.mistakes_on_zero, kind).compressed_bytes;
    if (kind == CompressorKind::kLz) {
      rec.rho_lz = rho;
      rec.l0_lz_bytes = l0;
    } else {
      rec.rho_ppm = rho;
      rec.l0_ppm_bytes = l0;
    }
  }
  rec.p0_hat = outcome.p0_hat;
  rec.n0 = outcome.n0;
  rec.overall_error = outcome.overall_error;
  rec.effective_n = outcome.effective_length;

  if (outcome.n0 >= static_cast<std::size_t>(cfg.word_len)) {
    const WordDistribution empirical = empirical_word_dist(outcome.mistakes_on_zero, cfg.word_len, cfg.windows);
    const WordDistribution model_dist = bernoulli_word_dist(outcome.p0_hat, cfg.word_len);
    rec.delta0_bits = cfg.kl_direction == KlDirection::kEmpiricalToModel ? kl_divergence(empirical, model_dist)
                                                                         : kl_divergence(model_dist, empirical);
    rec.delta0_valid = true;
  }
  return rec;
}

SweepSpec SweepSpec::desk_scale(int k_star) {
  SweepSpec spec;
  spec.k_star = k_star;
  for (int k = 1; k <= 10; ++k) spec.k_values.push_back(k);
  spec.m_values = {100, 500, 1000, 2000, 5000, 10000};
  spec.repeats = 5;
  spec.n = 1000;
  return spec;
}

SweepSpec SweepSpec::paper_scale(int k_star) {
  SweepSpec spec;
  spec.k_star = k_star;
  for (int k = 1; k <= 10; ++k) spec.k_values.push_back(k);
  for (std::size_t m = 100; m <= 10000; m += 100) spec.m_values.push_back(m);
  spec.repeats = 10;
  spec.n = 1000;
  return spec;
}

std::size_t SweepSpec::run_count() const noexcept {
  return repeats <= 0 ? 0 : k_values.size() * m_values.size() * static_cast<std::size_t>(repeats);
}

RngSeed run_seed(RngSeed base, int k, std::size_t m, int repeat) noexcept {
  RngSeed s = derive_seed(base, static_cast<std::uint64_t>(k));
  s = derive_seed(s, static_cast<std::uint64_t>(m));
  return derive_seed(s, static_cast<std::uint64_t>(repeat));
}

std::vector<RunRecord> sweep(const SweepSpec& spec, const std::function<void(const RunRecord&)>& on_record) {
  struct Task {
    int k;
    std::size_t m;
    int repeat;
  };
  std::vector<Task> tasks;
  tasks.reserve(spec.run_count());
  for (int k : spec.k_values)
    for (std::size_t m : spec.m_values)
      for (int r = 0; r < spec.repeats; ++r) tasks.push_back({k, m, r});

  // Validate every configuration before spawning workers.
  std::vector<RunConfig> configs;
  configs.reserve(tasks.size());
  for (const Task& t : tasks) {
    RunConfig cfg;
    cfg.k_star = spec.k_star;
    cfg.k = t.k;
    cfg.m = t.m;
    cfg.n = spec.n;
    cfg.seed = run_seed(spec.base_seed, t.k, t.m, t.repeat);
    cfg.compressors = spec.compressors;
    cfg.word_len = spec.word_len;
    cfg.windows = spec.windows;
    cfg.kl_direction = spec.kl_direction;
    cfg.validate();
    configs.push_back(std::move(cfg));
  }

  std::vector<RunRecord> records(tasks.size());
  std::atomic<std::size_t> next{0};
  std::mutex sink_mutex;
  std::exception_ptr failure;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      try {
        records[i] = run_once(configs[i], tasks[i].repeat);
        if (on_record) {
          std::lock_guard lock(sink_mutex);
          on_record(records[i]);
        }
      } catch (...) {
        std::lock_guard lock(sink_mutex);
        if (!failure) failure = std::current_exception();
        next.store(tasks.size());
        return;
      }
    }
  };

  const unsigned threads = std::max(1u, std::min<unsigned>(spec.workers, static_cast<unsigned>(tasks.size())));
  if (threads <= 1 || tasks.size() <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  std::sort(records.begin(), records.end(), [](const RunRecord& a, const RunRecord& b) {
    return std::tie(a.k, a.m, a.repeat) < std::tie(b.k, b.m, b.repeat);
  });
  return records;
}

}  // namespace bitscatter
