#pragma once

// Test-only reference computations. None of these share code with the
// library routines they are used to check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "coincidence/exact.hpp"

namespace coincidence::testing {

/// Calls visit(day_counts) once for each of the d^n assignments, by plain
/// recursion over people.
inline void for_each_assignment(
    std::uint32_t n, std::uint32_t d,
    const std::function<void(const std::vector<std::uint32_t>&)>& visit) {
  std::vector<std::uint32_t> counts(d, 0);
  std::function<void(std::uint32_t)> place = [&](std::uint32_t person) {
    if (person == n) {
      visit(counts);
      return;
    }
    for (std::uint32_t day = 0; day < d; ++day) {
      ++counts[day];
      place(person + 1);
      --counts[day];
    }
  };
  place(0);
}

inline std::uint32_t days_with(const std::vector<std::uint32_t>& counts,
                               std::uint32_t multiplicity) {
  std::uint32_t out = 0;
  for (const auto c : counts) out += c == multiplicity;
  return out;
}

inline std::uint32_t largest(const std::vector<std::uint32_t>& counts) {
  std::uint32_t out = 0;
  for (const auto c : counts) out = c > out ? c : out;
  return out;
}

/// P(pred(day_counts)) by enumeration.
inline Rational brute_probability(
    std::uint32_t n, std::uint32_t d,
    const std::function<bool(const std::vector<std::uint32_t>&)>& pred) {
  BigInt hits = 0;
  BigInt total = 0;
  for_each_assignment(n, d, [&](const std::vector<std::uint32_t>& counts) {
    total += 1;
    if (pred(counts)) hits += 1;
  });
  Rational out(hits, total);
  out.canonicalize();
  return out;
}

/// E[f(day_counts)] by enumeration.
inline Rational brute_expectation(
    std::uint32_t n, std::uint32_t d,
    const std::function<std::int64_t(const std::vector<std::uint32_t>&)>& f) {
  BigInt sum = 0;
  BigInt total = 0;
  for_each_assignment(n, d, [&](const std::vector<std::uint32_t>& counts) {
    total += 1;
    sum += static_cast<long>(f(counts));
  });
  Rational out(sum, total);
  out.canonicalize();
  return out;
}

/// Law of f(day_counts) by enumeration.
inline std::map<std::uint32_t, Rational> brute_law(
    std::uint32_t n, std::uint32_t d,
    const std::function<std::uint32_t(const std::vector<std::uint32_t>&)>& f) {
  std::map<std::uint32_t, BigInt> counts;
  BigInt total = 0;
  for_each_assignment(n, d, [&](const std::vector<std::uint32_t>& c) {
    total += 1;
    counts[f(c)] += 1;
  });
  std::map<std::uint32_t, Rational> law;
  for (const auto& [k, c] : counts) {
    Rational p(c, total);
    p.canonicalize();
    law[k] = p;
  }
  return law;
}

/// P(no day holds r or more) = n! [x^n] (sum_{c<r} x^c / c!)^d / d^n,
/// by repeated polynomial multiplication. Coefficients are scaled by
/// (r-1)! so everything stays integral.
inline Rational no_r_repeat_by_generating_function(std::uint32_t n,
                                                   std::uint32_t d,
                                                   std::uint32_t r) {
  BigInt scale = 1;
  for (std::uint32_t c = 2; c < r; ++c) scale *= c;
  std::vector<BigInt> base;
  BigInt fact = 1;
  for (std::uint32_t c = 0; c < r; ++c) {
    if (c > 0) fact *= c;
    base.push_back(BigInt(scale / fact));
  }
  std::vector<BigInt> poly{BigInt(1)};
  for (std::uint32_t day = 0; day < d; ++day) {
    std::vector<BigInt> next(std::min<std::size_t>(poly.size() + base.size() - 1, n + 1),
                             BigInt(0));
    for (std::size_t i = 0; i < poly.size(); ++i) {
      for (std::size_t j = 0; j < base.size() && i + j <= n; ++j) {
        next[i + j] += poly[i] * base[j];
      }
    }
    poly = std::move(next);
  }
  if (poly.size() <= n) return 0;
  BigInt num = poly[n];
  for (std::uint32_t i = 2; i <= n; ++i) num *= i;
  BigInt den = 1;
  for (std::uint32_t i = 0; i < d; ++i) den *= scale;
  for (std::uint32_t i = 0; i < n; ++i) den *= d;
  Rational out(num, den);
  out.canonicalize();
  return out;
}

/// Instances with d^n <= limit, d in [1, max_days], n in [1, max_people].
inline std::vector<Params> small_instances(std::uint64_t limit,
                                           std::uint32_t max_days = 12,
                                           std::uint32_t max_people = 24) {
  std::vector<Params> out;
  for (std::uint32_t d = 1; d <= max_days; ++d) {
    std::uint64_t size = 1;
    for (std::uint32_t n = 1; n <= max_people; ++n) {
      size *= d;
      if (size > limit) break;
      out.push_back(Params{n, d});
    }
  }
  return out;
}

}  // namespace coincidence::testing
