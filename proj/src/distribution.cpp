#include "coincidence/distribution.hpp"

#include <stdexcept>

namespace coincidence {

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::exact: return "exact";
    case Provenance::bracketed: return "bracketed";
    case Provenance::simulated: return "simulated";
  }
  return "unknown";
}

void DistributionTable::set(std::uint32_t k, Rational probability,
                            Rational error) {
  if (probability < 0) throw std::domain_error("negative probability");
  if (error < 0) throw std::domain_error("negative error bound");
  if (provenance_ == Provenance::exact && error != 0) {
    throw std::domain_error("exact entries carry no error");
  }
  probability.canonicalize();
  error.canonicalize();
  entries_[k] = LawEntry{std::move(probability), std::move(error)};
}

Rational DistributionTable::probability(std::uint32_t k) const {
  const auto it = entries_.find(k);
  return it == entries_.end() ? Rational(0) : it->second.probability;
}

Rational DistributionTable::error(std::uint32_t k) const {
  const auto it = entries_.find(k);
  return it == entries_.end() ? Rational(0) : it->second.error;
}

Rational DistributionTable::total() const {
  Rational sum = 0;
  for (const auto& [k, e] : entries_) sum += e.probability;
  return sum;
}

Rational DistributionTable::error_bound() const {
  Rational worst = 0;
  for (const auto& [k, e] : entries_) {
    if (e.error > worst) worst = e.error;
  }
  return worst;
}

Rational DistributionTable::first_moment() const {
  Rational sum = 0;
  for (const auto& [k, e] : entries_) sum += e.probability * k;
  return sum;
}

DistributionTable DistributionTable::normalized() const {
  const Rational mass = total();
  if (mass == 0) throw std::domain_error("cannot normalize a zero-mass table");
  DistributionTable out(provenance_);
  for (const auto& [k, e] : entries_) {
    out.set(k, Rational(e.probability / mass), Rational(e.error / mass));
  }
  return out;
}

}  // namespace coincidence
