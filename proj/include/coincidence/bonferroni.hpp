#pragma once

// Inclusion-exclusion for "some day holds exactly three people".
//
// Event A_i: the people of triple i share a day that nobody else has. Two
// such events can only co-occur for disjoint triples on distinct days, so
// the k-th inclusion-exclusion sum is
//
//   q_k(n, d) = (1/k!) prod_{j<k} C(n-3j, 3) * P_{d,k} (d-k)^{n-3k} / d^n
//
// and truncating after an odd (even) number of terms gives an upper
// (lower) bound.

#include <cstdint>
#include <optional>
#include <vector>

#include "coincidence/exact.hpp"

namespace coincidence {

/// A closed interval [lower, upper] of probabilities.
struct Bracket {
  ExactProb lower;
  ExactProb upper;

  static Bracket point(const ExactProb& p) { return Bracket{p, p}; }

  Rational width() const { return upper.value() - lower.value(); }
  Rational midpoint() const { return (lower.value() + upper.value()) / 2; }
  Rational half_width() const { return width() / 2; }
  bool contains(const Rational& x) const {
    return lower.value() <= x && x <= upper.value();
  }
  bool is_point() const { return lower == upper; }
  /// [1 - upper, 1 - lower].
  Bracket complement() const {
    return Bracket{upper.complement(), lower.complement()};
  }
};

/// k-th inclusion-exclusion term. q_0 = 1; zero when 3k > n or k > d.
/// This is an expected count, so it may exceed one.
Rational q_term(const Params& p, std::uint32_t k);

struct BoundLadder {
  std::vector<Rational> terms;         // q_1 .. q_m
  std::vector<Rational> partial_sums;  // S_m = sum_{k<=m} (-1)^{k+1} q_k
  Bracket bracket;                     // tightest bracket over all S_m
  /// Every nonzero term has been included, so the bracket is a point.
  bool exhausted = false;
  bool converged = false;
};

/// Number of nonzero terms: min(floor(n/3), d).
std::uint32_t max_nonzero_term(const Params& p);

/// Terms q_1..q_min(k_max, max_nonzero_term). converged is width < tol when a
/// tolerance is given, otherwise whether the ladder is exhausted.
BoundLadder bound_ladder(const Params& p, std::uint32_t k_max,
                         const std::optional<Rational>& tol = std::nullopt);

/// P(some day holds exactly three people), bracketed to width < tol or
/// computed exactly when the ladder runs out of terms first.
Bracket prob_some_triple_day(const Params& p, const Rational& tol);

}  // namespace coincidence
