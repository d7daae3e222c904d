#pragma once

// Occupancy profiles and the probability that no day is hit r or more times.

#include <cstdint>
#include <functional>
#include <vector>

#include "coincidence/exact.hpp"

namespace coincidence {

/// counts[i-1] = number of days hit exactly i times, for i = 1..r-1.
struct OccupancyProfile {
  std::vector<std::uint32_t> counts;
  std::uint32_t n = 0;
  std::uint32_t days = 0;
  std::uint32_t r = 2;

  /// Throws std::invalid_argument unless sum i*n_i = n, sum n_i <= days,
  /// r >= 2 and counts has r-1 entries.
  void validate() const;
  std::uint32_t occupied_days() const;
};

/// n! / prod_i (n_i! (i!)^{n_i}) * P_{M, sum n_i} / M^n.
ExactProb profile_probability(const OccupancyProfile& prof);

/// Visits every valid profile once, in lexicographic order of
/// (n_{r-1}, ..., n_2) with n_1 implied.
void for_each_profile(std::uint32_t n, std::uint32_t days, std::uint32_t r,
                      const std::function<void(const OccupancyProfile&)>& visit);

std::vector<OccupancyProfile> enumerate_profiles(std::uint32_t n,
                                                 std::uint32_t days,
                                                 std::uint32_t r);

/// P(no day is hit r or more times).
ExactProb prob_no_r_repeat(std::uint32_t n, std::uint32_t days, std::uint32_t r);

struct Threshold {
  std::uint32_t n_star = 0;
  double below = 0;  // P(some day hit >= r times) at n_star - 1
  double at = 0;     // same at n_star
};

/// Smallest n with P(some day hit >= r times) >= 1/2, found by scanning up.
Threshold threshold_n(std::uint32_t days, std::uint32_t r);

}  // namespace coincidence
