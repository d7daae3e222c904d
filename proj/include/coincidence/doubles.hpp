#pragma once

// The number D of days holding exactly two people.

#include <cstdint>
#include <optional>
#include <vector>

#include "coincidence/distribution.hpp"
#include "coincidence/exact.hpp"

namespace coincidence {

/// E[D] = C(n,2) (1/d) ((d-1)/d)^(n-2).
Rational expected_doubles(const Params& p);

struct FactorialMoment {
  Rational second;  // E[D(D-1)]
  /// E[D(D-1)] / E[D]; absent when E[D] = 0.
  std::optional<Rational> ratio;
};

/// E[D(D-1)] = C(n,2) C(n-2,2) (d-1) (d-2)^(n-4) / d^(n-1), summed over
/// ordered pairs of disjoint pairs.
FactorialMoment doubles_factorial_moment(const Params& p);

/// Hocking-Schwertman p_k: exactly k doubles and no day with three or more.
///   p_k = (1/k!) prod_{j<k} C(n-2j, 2) * P_{d,n-k} / d^n
/// Zero outside the support 2k <= n, n-k <= d.
ExactProb hs_pk(const Params& p, std::uint32_t k);

/// All p_k for k = 0..floor(n/2) via the ratio recursion
///   p_k = p_{k-1} C(n-2(k-1), 2) / (k (d-n+k)),
/// seeded at the first supported k. Empty when no k is supported.
DistributionTable hs_distribution(const Params& p);

struct ConditionalDoubles {
  DistributionTable table;  // p_k / sum p
  Rational mean;
};

/// Law of D given that no day holds three or more people. Throws
/// std::domain_error when that event has probability zero.
ConditionalDoubles conditional_doubles(const Params& p);

struct Figure1Row {
  std::uint32_t k = 0;
  double conditional = 0;
  double poisson = 0;  // Poisson pmf at the conditional mean
};

std::vector<Figure1Row> figure1_rows(const Params& p);

}  // namespace coincidence
