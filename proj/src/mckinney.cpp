#include "coincidence/mckinney.hpp"

#include <numeric>
#include <stdexcept>

namespace coincidence {

void OccupancyProfile::validate() const {
  if (r < 2) throw std::invalid_argument("r must be at least 2");
  if (counts.size() != r - 1) {
    throw std::invalid_argument("profile needs exactly r-1 counts");
  }
  std::uint64_t people = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    people += static_cast<std::uint64_t>(i + 1) * counts[i];
  }
  if (people != n) throw std::invalid_argument("profile does not place n people");
  if (occupied_days() > days) {
    throw std::invalid_argument("profile needs more days than available");
  }
}

std::uint32_t OccupancyProfile::occupied_days() const {
  return std::accumulate(counts.begin(), counts.end(), std::uint32_t{0});
}

namespace {

// Sums integer profile counts over a common denominator M^n. Factorials and
// falling factorials are cached for repeated evaluation.
class ProfileCounter {
 public:
  explicit ProfileCounter(std::uint32_t days) : days_(days) {
    falling_.push_back(1);
  }

  // Number of assignments realising the profile.
  BigInt count(const OccupancyProfile& prof) {
    const std::uint32_t s = prof.occupied_days();
    BigInt shape = 1;
    for (std::size_t i = 0; i < prof.counts.size(); ++i) {
      const std::uint32_t ni = prof.counts[i];
      if (ni == 0) continue;
      shape *= fact(ni);
      shape *= power(fact(static_cast<std::uint32_t>(i + 1)), ni);
    }
    BigInt out = fact(prof.n);
    mpz_divexact(out.get_mpz_t(), out.get_mpz_t(), shape.get_mpz_t());
    return out * falling(s);
  }

 private:
  const BigInt& fact(std::uint32_t m) {
    while (fact_.size() <= m) {
      fact_.push_back(fact_.empty() ? BigInt(1)
                                    : BigInt(fact_.back() * BigInt(fact_.size())));
    }
    return fact_[m];
  }

  const BigInt& falling(std::uint32_t s) {
    while (falling_.size() <= s) {
      const auto j = static_cast<std::uint32_t>(falling_.size() - 1);
      falling_.push_back(j < days_ ? BigInt(falling_.back() * BigInt(days_ - j))
                                   : BigInt(0));
    }
    return falling_[s];
  }

  std::uint32_t days_;
  std::vector<BigInt> fact_;
  std::vector<BigInt> falling_;
};

void enumerate_from(OccupancyProfile& prof, std::size_t index,
                    std::uint32_t remaining_people, std::uint32_t used_days,
                    const std::function<void(const OccupancyProfile&)>& visit) {
  if (index == 0) {
    // n_1 takes everyone left.
    if (used_days + remaining_people > prof.days) return;
    prof.counts[0] = remaining_people;
    visit(prof);
    return;
  }
  const auto size = static_cast<std::uint32_t>(index + 1);
  for (std::uint32_t c = 0; c * size <= remaining_people && used_days + c <= prof.days;
       ++c) {
    prof.counts[index] = c;
    enumerate_from(prof, index - 1, remaining_people - c * size, used_days + c,
                   visit);
  }
  prof.counts[index] = 0;
}

ExactProb no_repeat_with(ProfileCounter& counter, std::uint32_t n,
                         std::uint32_t days, std::uint32_t r) {
  BigInt favourable = 0;
  for_each_profile(n, days, r, [&](const OccupancyProfile& prof) {
    favourable += counter.count(prof);
  });
  return ExactProb(ratio(favourable, power(BigInt(days), n)));
}

}  // namespace

ExactProb profile_probability(const OccupancyProfile& prof) {
  prof.validate();
  if (prof.days == 0) return prof.n == 0 ? ExactProb::one() : ExactProb::zero();
  ProfileCounter counter(prof.days);
  return ExactProb(ratio(counter.count(prof), power(BigInt(prof.days), prof.n)));
}

void for_each_profile(std::uint32_t n, std::uint32_t days, std::uint32_t r,
                      const std::function<void(const OccupancyProfile&)>& visit) {
  if (r < 2) throw std::invalid_argument("r must be at least 2");
  OccupancyProfile prof{std::vector<std::uint32_t>(r - 1, 0), n, days, r};
  enumerate_from(prof, r - 2, n, 0, visit);
}

std::vector<OccupancyProfile> enumerate_profiles(std::uint32_t n,
                                                 std::uint32_t days,
                                                 std::uint32_t r) {
  std::vector<OccupancyProfile> out;
  for_each_profile(n, days, r,
                   [&](const OccupancyProfile& prof) { out.push_back(prof); });
  return out;
}

ExactProb prob_no_r_repeat(std::uint32_t n, std::uint32_t days, std::uint32_t r) {
  if (r < 2) throw std::invalid_argument("r must be at least 2");
  if (days == 0) return n == 0 ? ExactProb::one() : ExactProb::zero();
  ProfileCounter counter(days);
  return no_repeat_with(counter, n, days, r);
}

Threshold threshold_n(std::uint32_t days, std::uint32_t r) {
  if (r < 2) throw std::invalid_argument("r must be at least 2");
  if (days == 0) throw std::invalid_argument("days must be at least 1");
  ProfileCounter counter(days);
  const Rational half(1, 2);
  // Below n = r nobody can be hit r times.
  Rational previous = 0;
  for (std::uint32_t n = r;; ++n) {
    const Rational hit = no_repeat_with(counter, n, days, r).complement().value();
    if (hit >= half) return Threshold{n, previous.get_d(), hit.get_d()};
    previous = hit;
  }
}

}  // namespace coincidence
