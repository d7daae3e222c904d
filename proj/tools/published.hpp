#pragma once

// Printed reference values for the n = 100, d = 365 instance, shown beside
// the computed values wherever the two are compared.

namespace coincidence::cli::published {

inline constexpr double kChatgptClaim = 0.527;
inline constexpr double kNaivePair = 1.265e-6;
inline constexpr double kNoPair = 3.072e-7;
inline constexpr double kRegmiNoTriple = 0.29708;
inline constexpr double kRegmiAtLeastOne = 0.70292;
inline constexpr double kPoissonSomeTriple = 0.6137;
inline constexpr double kAtLeastThreeShare = 0.6459;
inline constexpr double kSomeTripleSixTerms = 0.6140;

// Inclusion-exclusion text and ladder table.
inline constexpr double kQ1Text = 0.9301;
inline constexpr double kLadder[] = {0.931045, 0.530545, 0.635962,
                                     0.616809, 0.614261, 0.614004};

inline constexpr double kExpectedDoubles = 10.3645;
inline constexpr double kPoissonDoubles = 10.415;
inline constexpr double kFactorialRatio = 10.027;
inline constexpr double kSumPk = 0.354135;
inline constexpr double kSumKPk = 3.87454;
inline constexpr double kConditionalMean = 10.941;
// Quoted as "1 - 0.6549"; 0.6459 is the at-least-three value.
inline constexpr double kQuotedNoTriple = 1.0 - 0.6549;

struct ThresholdRow {
  unsigned r;
  unsigned n_below;
  double below;
  unsigned n_at;
  double at;
};
inline constexpr ThresholdRow kThresholds[] = {
    {2, 22, 0.4758, 23, 0.5074},
    {3, 87, 0.4998, 88, 0.5114},
    {4, 186, 0.4758, 187, 0.5033},
};

// Triple-day table, k = 0..5.
inline constexpr double kTauQ[] = {1.0, 0.93014, 0.39960, 0.10542, 0.019153, 2.548e-4};
inline constexpr double kTauOneMinusTau0[] = {0.0, 0.58796, 0.55777, 0.52719, 0.49585, 0.46415};
inline constexpr double kTauCalculation[] = {0.386, 0.38325, 0.17672, 0.049843, 0.009656, 0.001365};
inline constexpr double kTauSimulation[] = {0.380921, 0.381977, 0.176321, 0.049634, 0.009604, 0.001375};

}  // namespace coincidence::cli::published
