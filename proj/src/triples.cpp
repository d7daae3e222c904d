#include "coincidence/triples.hpp"

namespace coincidence {

Bracket tau0(const Params& p, const Rational& tol) {
  return prob_some_triple_day(p, tol).complement();
}

TauEntry tau_k(const Params& p, std::uint32_t k, const Rational& tol) {
  TauEntry e;
  e.k = k;
  if (3ull * k > p.n || k > p.d) {
    e.q_factor = 0;
    e.tau0_bracket = Bracket::point(ExactProb::zero());
    e.value_bracket = Bracket::point(ExactProb::zero());
    return e;
  }
  e.q_factor = q_term(p, k);
  e.tau0_bracket = tau0(Params{p.n - 3 * k, p.d - k}, tol);
  e.value_bracket = Bracket{
      ExactProb::clamped(e.q_factor * e.tau0_bracket.lower.value()),
      ExactProb::clamped(e.q_factor * e.tau0_bracket.upper.value())};
  return e;
}

std::vector<TauEntry> tau_entries(const Params& p, std::uint32_t k_max,
                                  const Rational& tol) {
  std::vector<TauEntry> out;
  out.reserve(k_max + 1);
  for (std::uint32_t k = 0; k <= k_max; ++k) out.push_back(tau_k(p, k, tol));
  return out;
}

DistributionTable tau_table(const Params& p, std::uint32_t k_max,
                            const Rational& tol) {
  DistributionTable table(Provenance::bracketed);
  for (const TauEntry& e : tau_entries(p, k_max, tol)) {
    table.set(e.k, e.value_bracket.midpoint(), e.value_bracket.half_width());
  }
  return table;
}

}  // namespace coincidence
