#include "coincidence/bonferroni.hpp"

#include <algorithm>
#include <stdexcept>

namespace coincidence {

Rational q_term(const Params& p, std::uint32_t k) {
  if (k == 0) return 1;
  if (3ull * k > p.n || k > p.d) return 0;
  BigInt num = 1;
  for (std::uint32_t j = 0; j < k; ++j) num *= binomial(p.n - 3 * j, 3);
  num *= falling_factorial(p.d, k);
  num *= power(BigInt(p.d - k), p.n - 3 * k);
  return ratio(num, factorial(k) * power(BigInt(p.d), p.n));
}

std::uint32_t max_nonzero_term(const Params& p) {
  return std::min(p.n / 3, p.d);
}

namespace {

// Accumulates partial sums and keeps the tightest bounds seen so far. All
// truncation orders give valid bounds, so no term-monotonicity gate is
// needed; bounds are clamped to [0, 1].
class LadderBuilder {
 public:
  explicit LadderBuilder(const Params& p) : params_(p) {}

  void add_next() {
    const auto k = static_cast<std::uint32_t>(ladder_.terms.size() + 1);
    Rational q = q_term(params_, k);
    sum_ += (k % 2 == 1) ? q : Rational(-q);
    ladder_.terms.push_back(std::move(q));
    ladder_.partial_sums.push_back(sum_);
    if (k % 2 == 1) {
      if (sum_ < upper_) upper_ = sum_;
    } else if (sum_ > lower_) {
      lower_ = sum_;
    }
  }

  std::uint32_t size() const {
    return static_cast<std::uint32_t>(ladder_.terms.size());
  }

  Rational width() const { return upper_ - lower_; }

  BoundLadder finish() {
    ladder_.exhausted = size() >= max_nonzero_term(params_);
    if (ladder_.exhausted) {
      ladder_.bracket = Bracket::point(ExactProb::clamped(sum_));
    } else {
      ladder_.bracket = Bracket{ExactProb::clamped(lower_),
                                ExactProb::clamped(upper_)};
    }
    return std::move(ladder_);
  }

 private:
  Params params_;
  BoundLadder ladder_;
  Rational sum_ = 0;
  Rational lower_ = 0;
  Rational upper_ = 1;
};

}  // namespace

BoundLadder bound_ladder(const Params& p, std::uint32_t k_max,
                         const std::optional<Rational>& tol) {
  if (k_max < 1) throw std::invalid_argument("k_max must be at least 1");
  LadderBuilder builder(p);
  const std::uint32_t m = std::min(k_max, max_nonzero_term(p));
  while (builder.size() < m) builder.add_next();
  BoundLadder ladder = builder.finish();
  ladder.converged =
      tol ? ladder.bracket.width() < *tol : ladder.exhausted;
  return ladder;
}

Bracket prob_some_triple_day(const Params& p, const Rational& tol) {
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
  LadderBuilder builder(p);
  const std::uint32_t m = max_nonzero_term(p);
  while (builder.size() < m && !(builder.size() > 0 && builder.width() < tol)) {
    builder.add_next();
  }
  return builder.finish().bracket;
}

}  // namespace coincidence
