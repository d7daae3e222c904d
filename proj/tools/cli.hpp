#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "coincidence/exact.hpp"
#include "coincidence/simulator.hpp"
#include "report.hpp"

namespace coincidence::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitGuard = 3;
inline constexpr int kExitIo = 4;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string command = "summary";
  Params params{100, 365};
  std::optional<std::uint32_t> kmax;
  std::optional<std::string> tol;
  int digits = 6;
  Format format = Format::table;
  bool format_given = false;
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t reps = kDefaultReps;
  bool reps_given = false;
  unsigned threads = 0;
  std::optional<std::string> out;
  std::string statistic = "triples";
  std::string method = "dp";
};

/// Builds the output of one subcommand. Runs simulations when needed.
Report build_report(const Options& opts);

/// CSV with header k,conditional_exact,poisson,simulated over the union of
/// the exact and simulated supports, ascending k.
void emit_figure1(const Params& p, const SimSummary& sim, std::ostream& out,
                  int digits = 6);
/// Throws IoError when the file cannot be written.
void emit_figure1(const Params& p, const SimSummary& sim, const std::string& path,
                  int digits = 6);

/// Parses argv and runs one subcommand; no arguments means `summary`.
/// Returns 0, 2 (usage), 3 (guard or degenerate input) or 4 (I/O).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace coincidence::cli
