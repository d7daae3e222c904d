#include "coincidence/doubles.hpp"

#include <stdexcept>

#include "coincidence/poisson.hpp"

namespace coincidence {

Rational expected_doubles(const Params& p) {
  if (p.n < 2 || p.d < 1) return 0;
  return ratio(binomial(p.n, 2) * power(BigInt(p.d - 1), p.n - 2),
               power(BigInt(p.d), p.n - 1));
}

FactorialMoment doubles_factorial_moment(const Params& p) {
  FactorialMoment out;
  out.second = 0;
  if (p.n >= 4 && p.d >= 2) {
    out.second = ratio(binomial(p.n, 2) * binomial(p.n - 2, 2) *
                           BigInt(p.d - 1) * power(BigInt(p.d - 2), p.n - 4),
                       power(BigInt(p.d), p.n - 1));
  }
  const Rational mean = expected_doubles(p);
  if (mean != 0) out.ratio = Rational(out.second / mean);
  return out;
}

namespace {

bool hs_supported(const Params& p, std::uint32_t k) {
  return 2ull * k <= p.n && p.n - k <= p.d;
}

}  // namespace

ExactProb hs_pk(const Params& p, std::uint32_t k) {
  if (p.d == 0 || !hs_supported(p, k)) return ExactProb::zero();
  BigInt num = 1;
  for (std::uint32_t j = 0; j < k; ++j) num *= binomial(p.n - 2 * j, 2);
  num *= falling_factorial(p.d, p.n - k);
  return ExactProb(ratio(num, factorial(k) * power(BigInt(p.d), p.n)));
}

DistributionTable hs_distribution(const Params& p) {
  DistributionTable table(Provenance::exact);
  const std::uint32_t k_last = p.n / 2;
  const std::uint32_t k_first = p.n > p.d ? p.n - p.d : 0;
  if (p.d == 0 || k_first > k_last) return table;

  for (std::uint32_t k = 0; k < k_first; ++k) table.set(k, 0);
  Rational pk = hs_pk(p, k_first).value();
  table.set(k_first, pk);
  for (std::uint32_t k = k_first + 1; k <= k_last; ++k) {
    pk *= ratio(binomial(p.n - 2 * (k - 1), 2),
                BigInt(k) * BigInt(p.d - p.n + k));
    table.set(k, pk);
  }
  return table;
}

ConditionalDoubles conditional_doubles(const Params& p) {
  const DistributionTable raw = hs_distribution(p);
  if (raw.total() == 0) {
    throw std::domain_error("no outcome avoids a day with three or more people");
  }
  ConditionalDoubles out{raw.normalized(), 0};
  out.mean = out.table.first_moment();
  return out;
}

std::vector<Figure1Row> figure1_rows(const Params& p) {
  const ConditionalDoubles cond = conditional_doubles(p);
  const double mean = cond.mean.get_d();
  std::vector<Figure1Row> rows;
  rows.reserve(cond.table.entries().size());
  for (const auto& [k, e] : cond.table.entries()) {
    rows.push_back({k, e.probability.get_d(),
                    mean > 0 ? poisson_pmf(mean, k) : (k == 0 ? 1.0 : 0.0)});
  }
  return rows;
}

}  // namespace coincidence
