#pragma once

#include <cstdint>
#include <map>
#include <string_view>

#include "coincidence/exact.hpp"

namespace coincidence {

enum class Provenance { exact, bracketed, simulated };

std::string_view to_string(Provenance p);

struct LawEntry {
  Rational probability;
  /// Half-width for bracketed entries, 3 sigma for simulated ones, 0 if exact.
  Rational error;
};

/// The law of a nonnegative integer count, k -> P(count = k).
///
/// Totals are always recomputed from the entries. Tables holding partial
/// mass (the Hocking-Schwertman p_k) legitimately total less than one.
class DistributionTable {
 public:
  explicit DistributionTable(Provenance provenance = Provenance::exact)
      : provenance_(provenance) {}

  /// Throws std::domain_error for negative probability or error.
  void set(std::uint32_t k, Rational probability, Rational error = 0);

  Provenance provenance() const { return provenance_; }
  const std::map<std::uint32_t, LawEntry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  /// 0 for k outside the table.
  Rational probability(std::uint32_t k) const;
  Rational error(std::uint32_t k) const;

  Rational total() const;
  /// Largest per-entry error.
  Rational error_bound() const;
  /// Sum of k * P(k).
  Rational first_moment() const;

  /// Entries divided by total(); throws std::domain_error when total is 0.
  DistributionTable normalized() const;

 private:
  Provenance provenance_;
  std::map<std::uint32_t, LawEntry> entries_;
};

}  // namespace coincidence
