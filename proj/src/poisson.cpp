#include "coincidence/poisson.hpp"

#include <cmath>
#include <stdexcept>

namespace coincidence {

double poisson_pmf(double mean, std::uint32_t k) {
  if (!(mean > 0)) throw std::invalid_argument("poisson mean must be positive");
  const double kd = static_cast<double>(k);
  return std::exp(-mean + kd * std::log(mean) - std::lgamma(kd + 1.0));
}

PoissonSummary poisson_summary(const Params& p) {
  p.validate();
  PoissonSummary s;
  s.mean_per_day = static_cast<double>(p.n) / static_cast<double>(p.d);
  s.pm2 = poisson_pmf(s.mean_per_day, 2);
  s.pm3 = poisson_pmf(s.mean_per_day, 3);
  s.expected_doubles = static_cast<double>(p.d) * s.pm2;
  s.expected_triples = static_cast<double>(p.d) * s.pm3;
  s.prob_at_least_one_triple_day = -std::expm1(-s.expected_triples);
  return s;
}

}  // namespace coincidence
