#pragma once

// Independent exact references: brute-force enumeration of all d^n
// assignments for tiny instances, and a day-by-day dynamic program over
// (people left, statistic so far) with big-integer weights for full-size
// instances.

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string_view>

#include "coincidence/distribution.hpp"
#include "coincidence/exact.hpp"

namespace coincidence {

enum class Statistic { doubles_count, triples_count, max_multiplicity };

std::string_view to_string(Statistic s);

/// Raised when an instance exceeds an oracle's size guard.
class InstanceTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleResult {
  Statistic statistic;
  DistributionTable law;
  Params instance;
};

inline constexpr std::uint64_t kExhaustiveLimit = 10'000'000;
inline constexpr std::uint32_t kDpMaxPeople = 150;
inline constexpr std::uint32_t kDpMaxDays = 400;

/// Key: (days with exactly 2, days with exactly 3, largest multiplicity).
using JointKey = std::array<std::uint32_t, 3>;

/// Number of assignments per joint key; counts sum to d^n.
/// threads = 0 picks the hardware concurrency.
std::map<JointKey, BigInt> exhaustive_tally(const Params& p,
                                            unsigned threads = 0);

/// Throws InstanceTooLarge when d^n > kExhaustiveLimit.
OracleResult exhaustive_law(const Params& p, Statistic statistic,
                            unsigned threads = 0);

/// Throws InstanceTooLarge when n > kDpMaxPeople or d > kDpMaxDays.
OracleResult dp_law(const Params& p, Statistic statistic);

}  // namespace coincidence
