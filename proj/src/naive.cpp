#include "coincidence/naive.hpp"

#include <cmath>
#include <stdexcept>

namespace coincidence {

namespace {

double choose(std::uint32_t n, std::uint32_t k) {
  return binomial(n, k).get_d();
}

// base^exponent for base in (0, 1], without underflow surprises.
double log_space_pow(double log_base, double exponent) {
  return std::exp(exponent * log_base);
}

}  // namespace

double chatgpt_estimate(std::uint32_t n, std::uint32_t d) {
  if (n < 3) throw std::invalid_argument("chatgpt_estimate needs n >= 3");
  if (d < 1) throw std::invalid_argument("d must be at least 1");
  const double log_b = std::log1p(-1.0 / static_cast<double>(d));
  return 1.0 - log_space_pow(log_b, choose(n, 3)) -
         log_space_pow(log_b, static_cast<double>(n)) +
         log_space_pow(log_b, choose(n, 2));
}

double naive_pair(std::uint32_t n, std::uint32_t d) {
  if (n < 2) throw std::invalid_argument("naive_pair needs n >= 2");
  if (d < 1) throw std::invalid_argument("d must be at least 1");
  return log_space_pow(std::log1p(-1.0 / static_cast<double>(d)), choose(n, 2));
}

RegmiTriple regmi_triple(std::uint32_t n, std::uint32_t d) {
  if (n < 3) throw std::invalid_argument("regmi_triple needs n >= 3");
  if (d < 1) throw std::invalid_argument("d must be at least 1");
  const double dd = static_cast<double>(d);
  RegmiTriple out;
  out.no_triple = log_space_pow(std::log1p(-1.0 / (dd * dd)), choose(n, 3));
  out.at_least_one = 1.0 - out.no_triple;
  return out;
}

IndependenceReport independence_report(std::uint32_t d) {
  if (d < 2) throw std::invalid_argument("independence_report needs d >= 2");
  const BigInt days = d;
  const Rational single = ratio(days, power(days, 2));  // P(A_12)

  IndependenceReport r;
  // X1 = X2 and X3 = X4: d choices for each pair.
  r.pair_joint = ExactProb(ratio(days * days, power(days, 4)));
  r.pair_product = ExactProb(Rational(single * single));
  // X1 = X2 = X3: d of the d^3 assignments.
  r.triple_cycle_joint = ExactProb(ratio(days, power(days, 3)));
  r.triple_cycle_product = ExactProb(Rational(single * single * single));
  return r;
}

SuccessiveDayValues successive_day_values(std::uint32_t n, std::uint32_t d,
                                          std::uint32_t r) {
  if (r != 2 && r != 3) throw std::invalid_argument("r must be 2 or 3");
  if (n < 2 * r) throw std::invalid_argument("successive_day_values needs n >= 2r");
  if (d < 1) throw std::invalid_argument("d must be at least 1");
  const BigInt denom = power(BigInt(d), r);
  SuccessiveDayValues out;
  out.first = ratio(binomial(n, r), denom);
  out.second_given_first = ratio(binomial(n - r, r), denom);
  out.exceeds_one = out.first > 1 || out.second_given_first > 1;
  return out;
}

}  // namespace coincidence
