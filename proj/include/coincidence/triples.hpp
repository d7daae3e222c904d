#pragma once

// Law of T, the number of days holding exactly three people.
//
// Fixing k disjoint triples alone on k distinct days leaves n-3k people
// uniform on the other d-k days, hence
//   tau_k(n, d) = q_k(n, d) * tau_0(n-3k, d-k),
// with tau_0 = 1 - P(some day holds exactly three), bracketed by Bonferroni.

#include <cstdint>
#include <vector>

#include "coincidence/bonferroni.hpp"
#include "coincidence/distribution.hpp"

namespace coincidence {

/// P(T = 0) bracket; a point when the underlying ladder is exhausted.
Bracket tau0(const Params& p, const Rational& tol);

struct TauEntry {
  std::uint32_t k = 0;
  Rational q_factor;     // q_k(n, d), 1 for k = 0
  Bracket tau0_bracket;  // tau_0(n-3k, d-k)
  Bracket value_bracket; // tau_k(n, d)
};

TauEntry tau_k(const Params& p, std::uint32_t k, const Rational& tol);

std::vector<TauEntry> tau_entries(const Params& p, std::uint32_t k_max,
                                  const Rational& tol);

/// Midpoints with half-widths as per-entry errors, k = 0..k_max.
DistributionTable tau_table(const Params& p, std::uint32_t k_max,
                            const Rational& tol);

}  // namespace coincidence
