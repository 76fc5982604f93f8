#include "chronoloop/monte_carlo.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

namespace chronoloop {

namespace {

// Unit of work claimed by a worker. Partial sums are accumulated per chunk
// in trial order and later folded in chunk order, which keeps the ensemble
// report bit-identical across thread counts.
constexpr std::uint64_t kChunkTrials = 4096;

struct ChunkTotals {
  std::uint64_t left = 0;  // triggered trials; trigger means a Left collapse
  double paradox_sum = 0.0;
};

ChunkTotals run_chunk(const CircuitConfig& cfg, const State& psi,
                      const InjectionMode& mode, std::uint64_t seed,
                      std::uint64_t first_trial, std::uint64_t end_trial) {
  ChunkTotals totals;
  for (std::uint64_t i = first_trial; i < end_trial; ++i) {
    const TwoPassReport report =
        run_two_pass_protocol(cfg, psi, mode, trial_seed(seed, i));
    if (report.triggered) {
      ++totals.left;
      totals.paradox_sum += *report.paradox;
    }
  }
  return totals;
}

}  // namespace

EnsembleReport monte_carlo(const CircuitConfig& cfg, const State& psi,
                           const InjectionMode& mode, std::uint64_t trials,
                           std::uint64_t seed, unsigned max_threads) {
  if (trials == 0) {
    throw std::invalid_argument("monte_carlo requires at least one trial");
  }

  const std::uint64_t num_chunks = (trials + kChunkTrials - 1) / kChunkTrials;
  unsigned threads = max_threads == 0
                         ? std::max(1u, std::thread::hardware_concurrency())
                         : max_threads;
  threads = static_cast<unsigned>(
      std::min<std::uint64_t>(threads, num_chunks));

  std::vector<ChunkTotals> chunk_totals(num_chunks);
  if (threads <= 1) {
    for (std::uint64_t c = 0; c < num_chunks; ++c) {
      const std::uint64_t begin = c * kChunkTrials;
      const std::uint64_t end = std::min(begin + kChunkTrials, trials);
      chunk_totals[c] = run_chunk(cfg, psi, mode, seed, begin, end);
    }
  } else {
    std::atomic<std::uint64_t> next_chunk{0};
    std::mutex error_mutex;
    std::exception_ptr first_error;
    auto worker = [&] {
      try {
        while (true) {
          const std::uint64_t c = next_chunk.fetch_add(1);
          if (c >= num_chunks) {
            return;
          }
          const std::uint64_t begin = c * kChunkTrials;
          const std::uint64_t end = std::min(begin + kChunkTrials, trials);
          chunk_totals[c] = run_chunk(cfg, psi, mode, seed, begin, end);
        }
      } catch (...) {
        const std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) {
          first_error = std::current_exception();
        }
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back(worker);
    }
    for (auto& t : pool) {
      t.join();
    }
    if (first_error) {
      std::rethrow_exception(first_error);
    }
  }

  EnsembleReport report;
  report.trials = trials;
  report.seed = seed;
  double paradox_sum = 0.0;
  for (const ChunkTotals& totals : chunk_totals) {
    report.left_count += totals.left;
    paradox_sum += totals.paradox_sum;
  }
  report.right_count = trials - report.left_count;
  report.trigger_frequency =
      static_cast<double>(report.left_count) / static_cast<double>(trials);
  if (report.left_count > 0) {
    report.mean_paradox = paradox_sum / static_cast<double>(report.left_count);
  }
  return report;
}

}  // namespace chronoloop
