#pragma once

#include <cstdint>
#include <vector>

#include "coincidence/distribution.hpp"
#include "coincidence/exact.hpp"

namespace coincidence {

inline constexpr std::uint64_t kDefaultSeed = 20230501;
inline constexpr std::uint64_t kDefaultReps = 1'000'000;

struct SimConfig {
  std::uint32_t n = 100;
  std::uint32_t d = 365;
  std::uint64_t reps = kDefaultReps;
  std::uint64_t seed = kDefaultSeed;
  /// 0 = hardware concurrency. Results do not depend on this.
  unsigned threads = 0;

  void validate() const;
};

/// Empirical laws from `reps` independent replicates. Each entry carries
/// 3 sigma = 3 sqrt(p(1-p)/m) as its error, m being the replicates behind it.
struct SimSummary {
  DistributionTable t_law{Provenance::simulated};
  DistributionTable d_law{Provenance::simulated};
  DistributionTable d_law_given_t0{Provenance::simulated};
  /// Raw replicate counts behind the laws.
  std::vector<std::uint64_t> t_counts;
  std::vector<std::uint64_t> d_counts;
  std::vector<std::uint64_t> d_counts_given_t0;
  double mean_doubles = 0;
  std::uint64_t reps = 0;
  std::uint64_t seed = 0;
  Params instance;

  friend bool operator==(const SimSummary& a, const SimSummary& b) {
    return a.t_counts == b.t_counts && a.d_counts == b.d_counts &&
           a.d_counts_given_t0 == b.d_counts_given_t0 &&
           a.mean_doubles == b.mean_doubles && a.reps == b.reps &&
           a.seed == b.seed && a.instance == b.instance;
  }
};

SimSummary simulate(const SimConfig& cfg);

struct Figure1Simulated {
  std::vector<std::pair<std::uint32_t, double>> unconditioned;
  std::vector<std::pair<std::uint32_t, double>> given_no_triple;
};

Figure1Simulated figure1_simulated(const SimSummary& sim);
Figure1Simulated figure1_simulated(const SimConfig& cfg);

}  // namespace coincidence
