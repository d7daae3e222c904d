#include "coincidence/oracle.hpp"

#include <gtest/gtest.h>

#include "support/oracles.hpp"

namespace coincidence {
namespace {

using testing::days_with;
using testing::largest;

std::uint32_t statistic_of(Statistic s, const std::vector<std::uint32_t>& c) {
  switch (s) {
    case Statistic::doubles_count: return days_with(c, 2);
    case Statistic::triples_count: return days_with(c, 3);
    case Statistic::max_multiplicity: return largest(c);
  }
  return 0;
}

constexpr Statistic kAll[] = {Statistic::doubles_count, Statistic::triples_count,
                              Statistic::max_multiplicity};

void expect_law(const DistributionTable& table,
                const std::map<std::uint32_t, Rational>& truth) {
  for (const auto& [k, p] : truth) EXPECT_EQ(table.probability(k), p) << k;
  for (const auto& [k, e] : table.entries()) {
    EXPECT_EQ(e.probability, truth.count(k) ? truth.at(k) : Rational(0)) << k;
    EXPECT_EQ(e.error, 0);
  }
  EXPECT_EQ(table.total(), 1);
}

TEST(Oracle, HandWorkedInstance) {
  // (3,2): 2 of 8 assignments put everyone on one day.
  const OracleResult t = exhaustive_law(Params{3, 2}, Statistic::triples_count);
  EXPECT_EQ(t.law.probability(1), Rational(1, 4));
  EXPECT_EQ(t.law.probability(0), Rational(3, 4));
  const OracleResult d = dp_law(Params{3, 2}, Statistic::doubles_count);
  EXPECT_EQ(d.law.probability(1), Rational(3, 4));
  EXPECT_EQ(d.instance, (Params{3, 2}));
  EXPECT_EQ(d.statistic, Statistic::doubles_count);
  EXPECT_EQ(d.law.provenance(), Provenance::exact);
}

TEST(Oracle, BothMethodsMatchRecursion) {
  for (const Params& p : testing::small_instances(200'000, 6, 9)) {
    for (const Statistic s : kAll) {
      SCOPED_TRACE(std::to_string(p.n) + "," + std::to_string(p.d) + " " +
                   std::string(to_string(s)));
      const auto truth = testing::brute_law(
          p.n, p.d, [s](const auto& c) { return statistic_of(s, c); });
      expect_law(exhaustive_law(p, s, 1).law, truth);
      expect_law(dp_law(p, s).law, truth);
    }
  }
}

TEST(Oracle, TallyIsIndependentOfThreads) {
  const Params p{8, 7};
  const auto one = exhaustive_tally(p, 1);
  BigInt total = 0;
  for (const auto& [key, count] : one) total += count;
  EXPECT_EQ(total, power(BigInt(7), 8));
  EXPECT_EQ(exhaustive_tally(p, 3), one);
  EXPECT_EQ(exhaustive_tally(p, 8), one);
}

TEST(Oracle, DpAgreesWithExhaustiveAtTheGuard) {
  const Params p{8, 7};
  for (const Statistic s : kAll) {
    const OracleResult dp = dp_law(p, s);
    const OracleResult full = exhaustive_law(p, s);
    EXPECT_EQ(dp.law.entries().size(), full.law.entries().size());
    for (const auto& [k, e] : full.law.entries()) {
      EXPECT_EQ(dp.law.probability(k), e.probability);
    }
  }
}

TEST(Oracle, MaxMultiplicityTwoOrLessIsClassicBirthday) {
  const OracleResult law = dp_law(Params{23, 365}, Statistic::max_multiplicity);
  EXPECT_EQ(law.law.probability(1), ratio(falling_factorial(365, 23), power(BigInt(365), 23)));
  EXPECT_EQ(law.law.probability(0), 0);
}

TEST(Oracle, Guards) {
  EXPECT_THROW(exhaustive_law(Params{24, 2}, Statistic::triples_count), InstanceTooLarge);
  EXPECT_NO_THROW(exhaustive_law(Params{23, 2}, Statistic::triples_count));
  EXPECT_THROW(dp_law(Params{kDpMaxPeople + 1, 365}, Statistic::doubles_count),
               InstanceTooLarge);
  EXPECT_THROW(dp_law(Params{10, kDpMaxDays + 1}, Statistic::doubles_count),
               InstanceTooLarge);
}

TEST(Oracle, StatisticNames) {
  EXPECT_EQ(to_string(Statistic::doubles_count), "doubles_count");
  EXPECT_EQ(to_string(Statistic::triples_count), "triples_count");
  EXPECT_EQ(to_string(Statistic::max_multiplicity), "max_multiplicity");
}

}  // namespace
}  // namespace coincidence
