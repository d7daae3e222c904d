#include "coincidence/simulator.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "coincidence/rng.hpp"

namespace coincidence {

void SimConfig::validate() const {
  if (reps < 1) throw std::invalid_argument("reps must be at least 1");
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (d < 1) throw std::invalid_argument("d must be at least 1");
}

namespace {

struct Tally {
  std::vector<std::uint64_t> triples;
  std::vector<std::uint64_t> doubles;
  std::vector<std::uint64_t> doubles_given_t0;
  std::uint64_t doubles_sum = 0;

  explicit Tally(std::uint32_t n)
      : triples(n / 3 + 1, 0), doubles(n / 2 + 1, 0), doubles_given_t0(n / 2 + 1, 0) {}

  void merge(const Tally& other) {
    for (std::size_t i = 0; i < triples.size(); ++i) triples[i] += other.triples[i];
    for (std::size_t i = 0; i < doubles.size(); ++i) {
      doubles[i] += other.doubles[i];
      doubles_given_t0[i] += other.doubles_given_t0[i];
    }
    doubles_sum += other.doubles_sum;
  }
};

class ReplicateRunner {
 public:
  explicit ReplicateRunner(const SimConfig& cfg)
      : cfg_(cfg), occupancy_(cfg.d, 0) {
    touched_.reserve(cfg.n);
  }

  void run(std::uint64_t replicate, Tally& tally) {
    Xoshiro256 rng = Xoshiro256::for_stream(cfg_.seed, replicate);
    for (std::uint32_t i = 0; i < cfg_.n; ++i) {
      const std::uint32_t day = rng.below(cfg_.d);
      if (occupancy_[day]++ == 0) touched_.push_back(day);
    }
    std::uint32_t doubles = 0;
    std::uint32_t triples = 0;
    for (const std::uint32_t day : touched_) {
      doubles += occupancy_[day] == 2;
      triples += occupancy_[day] == 3;
      occupancy_[day] = 0;
    }
    touched_.clear();

    ++tally.triples[triples];
    ++tally.doubles[doubles];
    if (triples == 0) ++tally.doubles_given_t0[doubles];
    tally.doubles_sum += doubles;
  }

 private:
  const SimConfig& cfg_;
  std::vector<std::uint32_t> occupancy_;
  std::vector<std::uint32_t> touched_;
};

DistributionTable empirical_law(const std::vector<std::uint64_t>& counts) {
  DistributionTable law(Provenance::simulated);
  std::uint64_t m = 0;
  for (const auto c : counts) m += c;
  if (m == 0) return law;
  const double md = static_cast<double>(m);
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (counts[k] == 0) continue;
    const double p = static_cast<double>(counts[k]) / md;
    const double three_sigma = 3.0 * std::sqrt(p * (1.0 - p) / md);
    law.set(static_cast<std::uint32_t>(k),
            ratio(BigInt(static_cast<unsigned long>(counts[k])),
                  BigInt(static_cast<unsigned long>(m))),
            from_double(three_sigma));
  }
  return law;
}

std::vector<std::uint64_t> trim_zeros(std::vector<std::uint64_t> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

}  // namespace

SimSummary simulate(const SimConfig& cfg) {
  cfg.validate();
  unsigned threads = cfg.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

  // Replicates are grouped into fixed chunks; chunk tallies are integer
  // counts, so the merged result is independent of scheduling.
  constexpr std::uint64_t kChunk = 1 << 14;
  const std::uint64_t chunks = (cfg.reps + kChunk - 1) / kChunk;
  const unsigned workers =
      static_cast<unsigned>(std::min<std::uint64_t>(threads, chunks));

  std::vector<Tally> tallies(workers, Tally(cfg.n));
  std::atomic<std::uint64_t> next{0};
  auto work = [&](unsigned w) {
    ReplicateRunner runner(cfg);
    for (std::uint64_t c = next++; c < chunks; c = next++) {
      const std::uint64_t end = std::min(cfg.reps, (c + 1) * kChunk);
      for (std::uint64_t r = c * kChunk; r < end; ++r) runner.run(r, tallies[w]);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work, w);
  work(0);
  for (auto& t : pool) t.join();

  Tally total(cfg.n);
  for (const auto& t : tallies) total.merge(t);

  SimSummary s;
  s.t_counts = trim_zeros(total.triples);
  s.d_counts = trim_zeros(total.doubles);
  s.d_counts_given_t0 = trim_zeros(total.doubles_given_t0);
  s.t_law = empirical_law(s.t_counts);
  s.d_law = empirical_law(s.d_counts);
  s.d_law_given_t0 = empirical_law(s.d_counts_given_t0);
  s.mean_doubles =
      static_cast<double>(total.doubles_sum) / static_cast<double>(cfg.reps);
  s.reps = cfg.reps;
  s.seed = cfg.seed;
  s.instance = Params{cfg.n, cfg.d};
  return s;
}

namespace {

std::vector<std::pair<std::uint32_t, double>> as_rows(const DistributionTable& t) {
  std::vector<std::pair<std::uint32_t, double>> rows;
  for (const auto& [k, e] : t.entries()) rows.emplace_back(k, e.probability.get_d());
  return rows;
}

}  // namespace

Figure1Simulated figure1_simulated(const SimSummary& sim) {
  return Figure1Simulated{as_rows(sim.d_law), as_rows(sim.d_law_given_t0)};
}

Figure1Simulated figure1_simulated(const SimConfig& cfg) {
  return figure1_simulated(simulate(cfg));
}

}  // namespace coincidence
