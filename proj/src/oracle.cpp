#include "coincidence/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace coincidence {

std::string_view to_string(Statistic s) {
  switch (s) {
    case Statistic::doubles_count: return "doubles_count";
    case Statistic::triples_count: return "triples_count";
    case Statistic::max_multiplicity: return "max_multiplicity";
  }
  return "unknown";
}

namespace {

std::uint64_t assignment_count(const Params& p) {
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < p.n; ++i) {
    if (p.d == 0) return 0;
    if (total > kExhaustiveLimit / p.d) return kExhaustiveLimit + 1;
    total *= p.d;
  }
  return total;
}

// Flat tally over (doubles, triples, max) with fixed strides.
struct TallyShape {
  std::uint32_t max_doubles, max_triples, max_mult;

  explicit TallyShape(std::uint32_t n)
      : max_doubles(n / 2), max_triples(n / 3), max_mult(n) {}

  std::size_t size() const {
    return static_cast<std::size_t>(max_doubles + 1) * (max_triples + 1) *
           (max_mult + 1);
  }
  std::size_t index(std::uint32_t dbl, std::uint32_t tpl, std::uint32_t mx) const {
    return (static_cast<std::size_t>(dbl) * (max_triples + 1) + tpl) *
               (max_mult + 1) + mx;
  }
};

// Walks assignments [begin, end) in odometer order, keeping day counts and
// the histogram of day multiplicities up to date incrementally.
void tally_range(const Params& p, const TallyShape& shape, std::uint64_t begin,
                 std::uint64_t end, std::vector<std::uint64_t>& tally) {
  const std::uint32_t n = p.n;
  std::vector<std::uint32_t> digit(n, 0);
  std::vector<std::uint32_t> count(p.d, 0);
  std::vector<std::uint32_t> mult(n + 1, 0);

  std::uint64_t rest = begin;
  for (std::uint32_t i = 0; i < n; ++i) {
    digit[i] = static_cast<std::uint32_t>(rest % p.d);
    rest /= p.d;
    ++count[digit[i]];
  }
  mult[0] = p.d;
  for (std::uint32_t day = 0; day < p.d; ++day) {
    if (count[day] > 0) {
      --mult[0];
      ++mult[count[day]];
    }
  }
  auto move = [&](std::uint32_t from, std::uint32_t to) {
    --mult[count[from]];
    ++mult[--count[from]];
    --mult[count[to]];
    ++mult[++count[to]];
  };

  for (std::uint64_t a = begin; a < end; ++a) {
    std::uint32_t mx = n;
    while (mx > 0 && mult[mx] == 0) --mx;
    const std::uint32_t dbl = n >= 2 ? mult[2] : 0;
    const std::uint32_t tpl = n >= 3 ? mult[3] : 0;
    ++tally[shape.index(dbl, tpl, mx)];

    for (std::uint32_t i = 0; i < n; ++i) {
      const std::uint32_t from = digit[i];
      const std::uint32_t to = from + 1 == p.d ? 0 : from + 1;
      digit[i] = to;
      move(from, to);
      if (to != 0) break;
    }
  }
}

}  // namespace

std::map<JointKey, BigInt> exhaustive_tally(const Params& p, unsigned threads) {
  const std::uint64_t total = assignment_count(p);
  if (total > kExhaustiveLimit || p.d == 0) {
    throw InstanceTooLarge("exhaustive enumeration needs d^n <= 10^7 and d >= 1");
  }
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

  const TallyShape shape(p.n);
  constexpr std::uint64_t kChunk = 1 << 16;
  const std::uint64_t chunks = (total + kChunk - 1) / kChunk;
  const unsigned workers =
      static_cast<unsigned>(std::min<std::uint64_t>(threads, chunks));

  std::vector<std::vector<std::uint64_t>> tallies(
      workers, std::vector<std::uint64_t>(shape.size(), 0));
  std::atomic<std::uint64_t> next{0};
  auto work = [&](unsigned w) {
    for (std::uint64_t c = next++; c < chunks; c = next++) {
      tally_range(p, shape, c * kChunk, std::min(total, (c + 1) * kChunk),
                  tallies[w]);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work, w);
  work(0);
  for (auto& t : pool) t.join();

  std::map<JointKey, BigInt> out;
  for (std::uint32_t dbl = 0; dbl <= shape.max_doubles; ++dbl) {
    for (std::uint32_t tpl = 0; tpl <= shape.max_triples; ++tpl) {
      for (std::uint32_t mx = 0; mx <= shape.max_mult; ++mx) {
        std::uint64_t sum = 0;
        for (const auto& t : tallies) sum += t[shape.index(dbl, tpl, mx)];
        if (sum > 0) out[{dbl, tpl, mx}] = BigInt(static_cast<unsigned long>(sum));
      }
    }
  }
  return out;
}

OracleResult exhaustive_law(const Params& p, Statistic statistic,
                            unsigned threads) {
  const auto tally = exhaustive_tally(p, threads);
  const std::size_t slot = static_cast<std::size_t>(statistic);
  std::map<std::uint32_t, BigInt> counts;
  for (const auto& [key, count] : tally) counts[key[slot]] += count;

  const BigInt denom = power(BigInt(p.d), p.n);
  OracleResult out{statistic, DistributionTable(Provenance::exact), p};
  for (const auto& [k, count] : counts) out.law.set(k, ratio(count, denom));
  return out;
}

OracleResult dp_law(const Params& p, Statistic statistic) {
  if (p.n > kDpMaxPeople || p.d > kDpMaxDays) {
    throw InstanceTooLarge("dynamic program needs n <= 150 and d <= 400");
  }
  if (p.d == 0 && p.n > 0) throw std::invalid_argument("no days to place people on");
  const std::uint32_t n = p.n;
  const std::uint32_t cap = statistic == Statistic::doubles_count   ? n / 2
                            : statistic == Statistic::triples_count ? n / 3
                                                                    : n;
  const std::size_t width = cap + 1;
  auto next_stat = [statistic](std::uint32_t s, std::uint32_t c) {
    switch (statistic) {
      case Statistic::doubles_count: return s + (c == 2 ? 1u : 0u);
      case Statistic::triples_count: return s + (c == 3 ? 1u : 0u);
      case Statistic::max_multiplicity: return std::max(s, c);
    }
    return s;
  };

  std::vector<std::vector<BigInt>> choose(n + 1);
  for (std::uint32_t r = 0; r <= n; ++r) {
    for (std::uint32_t c = 0; c <= r; ++c) choose[r].push_back(binomial(r, c));
  }

  // weight[r * width + s]: ways to have placed n - r people on the days seen
  // so far with statistic value s.
  std::vector<BigInt> weight((n + 1) * width, 0);
  std::vector<BigInt> next((n + 1) * width, 0);
  weight[n * width] = 1;
  for (std::uint32_t day = 0; day < p.d; ++day) {
    for (auto& w : next) w = 0;
    // The last day must take everybody who is left.
    const bool last = day + 1 == p.d;
    for (std::uint32_t r = 0; r <= n; ++r) {
      for (std::uint32_t s = 0; s <= cap; ++s) {
        const BigInt& w = weight[r * width + s];
        if (sgn(w) == 0) continue;
        for (std::uint32_t c = last ? r : 0; c <= r; ++c) {
          BigInt& dst = next[(r - c) * width + next_stat(s, c)];
          mpz_addmul(dst.get_mpz_t(), w.get_mpz_t(), choose[r][c].get_mpz_t());
        }
      }
    }
    weight.swap(next);
  }

  const BigInt denom = power(BigInt(p.d), n);
  OracleResult out{statistic, DistributionTable(Provenance::exact), p};
  for (std::uint32_t s = 0; s <= cap; ++s) {
    if (sgn(weight[s]) != 0) out.law.set(s, ratio(weight[s], denom));
  }
  return out;
}

}  // namespace coincidence
