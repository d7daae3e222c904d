#pragma once

#include <cstdint>

#include "coincidence/exact.hpp"

namespace coincidence {

/// Poisson approximation to the per-day occupancy: each day receives
/// Poisson(n/d) people, days treated as independent.
struct PoissonSummary {
  double mean_per_day = 0;
  double pm2 = 0;
  double pm3 = 0;
  double expected_doubles = 0;
  double expected_triples = 0;
  double prob_at_least_one_triple_day = 0;
};

/// e^-mean mean^k / k!, evaluated in log space. Requires mean > 0.
double poisson_pmf(double mean, std::uint32_t k);

PoissonSummary poisson_summary(const Params& p);

}  // namespace coincidence
