#pragma once

// Formulas that treat dependent coincidence events as independent. They are
// wrong by construction and kept so their output can be compared against the
// exact answers.

#include <cstdint>

#include "coincidence/exact.hpp"

namespace coincidence {

/// 1 - b^C(n,3) - b^n + b^C(n,2) with b = (d-1)/d, evaluated literally.
double chatgpt_estimate(std::uint32_t n, std::uint32_t d);

/// ((d-1)/d)^C(n,2): the "independent pairs" no-match probability.
double naive_pair(std::uint32_t n, std::uint32_t d);

struct RegmiTriple {
  double no_triple = 0;
  double at_least_one = 0;
};

/// (1 - 1/d^2)^C(n,3) and its complement.
RegmiTriple regmi_triple(std::uint32_t n, std::uint32_t d);

/// Coincidence events A_ij = {person i and person j share a day}.
struct IndependenceReport {
  ExactProb pair_joint;            // P(A_12 and A_34)
  ExactProb pair_product;          // P(A_12) P(A_34)
  ExactProb triple_cycle_joint;    // P(A_12 and A_23 and A_31)
  ExactProb triple_cycle_product;  // P(A_12) P(A_23) P(A_31)
};

/// Counts favourable assignments of four (or three) people to d days.
IndependenceReport independence_report(std::uint32_t d);

struct SuccessiveDayValues {
  Rational first;               // C(n,r) / d^r
  Rational second_given_first;  // C(n-r,r) / d^r
  /// Either value exceeds 1, so it cannot be read as a probability.
  bool exceeds_one = false;
};

/// The expected-count style ratios that reproduce the published B^2/B^3
/// dependence display. Not clamped. Requires r in {2, 3} and n >= 2r.
SuccessiveDayValues successive_day_values(std::uint32_t n, std::uint32_t d,
                                          std::uint32_t r);

}  // namespace coincidence
