#include "cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "coincidence/bonferroni.hpp"
#include "coincidence/doubles.hpp"
#include "coincidence/mckinney.hpp"
#include "coincidence/naive.hpp"
#include "coincidence/oracle.hpp"
#include "coincidence/poisson.hpp"
#include "coincidence/triples.hpp"
#include "published.hpp"

namespace coincidence::cli {

namespace {

const Rational kExactTol(1, BigInt("1000000000000000000000000000000"));

bool is_reference_instance(const Params& p) { return p.n == 100 && p.d == 365; }

Rational tolerance(const Options& o, const char* fallback) {
  const Rational tol = parse_decimal(o.tol.value_or(fallback));
  if (tol <= 0) throw std::invalid_argument("--tol must be positive");
  return tol;
}

// Records a published value when it differs from the computed one by more
// than `slack`.
void compare(Report& r, const std::string& quantity, double paper,
             const Cell& computed, double slack) {
  double value = 0;
  if (const auto* q = std::get_if<Rational>(&computed)) value = q->get_d();
  if (const auto* d = std::get_if<double>(&computed)) value = *d;
  if (std::fabs(paper - value) > slack) r.notes.push_back({quantity, Verbatim{paper}, computed});
}

SimSummary run_simulation(const Options& o) {
  SimConfig cfg;
  cfg.n = o.params.n;
  cfg.d = o.params.d;
  cfg.reps = o.reps;
  cfg.seed = o.seed;
  cfg.threads = o.threads;
  return simulate(cfg);
}

void add_sim_meta(Report& r, const Options& o) {
  r.meta.emplace_back("seed", static_cast<std::int64_t>(o.seed));
  r.meta.emplace_back("reps", static_cast<std::int64_t>(o.reps));
}

Report poisson_report(const Options& o) {
  Report r{"poisson", o.params, {}, {}, {}};
  const PoissonSummary s = poisson_summary(o.params);
  r.sections.push_back({"poisson approximation", {"quantity", "value"},
                        {{std::string("mean_per_day"), s.mean_per_day},
                         {std::string("pm2"), s.pm2},
                         {std::string("pm3"), s.pm3},
                         {std::string("expected_doubles"), s.expected_doubles},
                         {std::string("expected_triples"), s.expected_triples},
                         {std::string("prob_at_least_one_triple_day"),
                          s.prob_at_least_one_triple_day}}});
  return r;
}

Report naive_report(const Options& o) {
  const Params& p = o.params;
  Report r{"naive", p, {}, {}, {}};
  Section formulas{"naive formulas vs exact", {"quantity", "value"}, {}};
  const Rational no_pair = ratio(falling_factorial(p.d, p.n), power(BigInt(p.d), p.n));
  formulas.rows.push_back({std::string("exact_no_pair"), no_pair});
  if (p.n >= 2) {
    formulas.rows.push_back({std::string("naive_pair"), naive_pair(p.n, p.d)});
  }
  if (p.n >= 3) {
    const RegmiTriple regmi = regmi_triple(p.n, p.d);
    const double chatgpt = chatgpt_estimate(p.n, p.d);
    formulas.rows.push_back({std::string("chatgpt_formula"), chatgpt});
    formulas.rows.push_back({std::string("regmi_no_triple"), regmi.no_triple});
    formulas.rows.push_back({std::string("regmi_at_least_one"), regmi.at_least_one});
    formulas.rows.push_back({std::string("exact_at_least_three_share"),
                             prob_no_r_repeat(p.n, p.d, 3).complement().value()});
    if (is_reference_instance(p)) {
      compare(r, "chatgpt claimed value vs its own formula", published::kChatgptClaim,
              chatgpt, 1e-3);
    }
  }
  r.sections.push_back(std::move(formulas));

  if (p.d >= 2) {
    const IndependenceReport ind = independence_report(p.d);
    r.sections.push_back({"pairwise vs full independence", {"quantity", "value"},
                          {{std::string("pair_joint"), ind.pair_joint.value()},
                           {std::string("pair_product"), ind.pair_product.value()},
                           {std::string("triple_cycle_joint"), ind.triple_cycle_joint.value()},
                           {std::string("triple_cycle_product"),
                            ind.triple_cycle_product.value()}}});
  }

  Section successive{"successive day values",
                     {"r", "first", "second_given_first", "exceeds_one"}, {}};
  for (std::uint32_t rr : {2u, 3u}) {
    if (p.n < 2 * rr) continue;
    const SuccessiveDayValues v = successive_day_values(p.n, p.d, rr);
    successive.rows.push_back({static_cast<std::int64_t>(rr), v.first,
                               v.second_given_first,
                               std::string(v.exceeds_one ? "yes" : "no")});
  }
  if (!successive.rows.empty()) r.sections.push_back(std::move(successive));
  return r;
}

Report bounds_report(const Options& o) {
  const Params& p = o.params;
  Report r{"bounds", p, {}, {}, {}};
  const std::uint32_t kmax = o.kmax.value_or(6);
  std::optional<Rational> tol;
  if (o.tol) tol = tolerance(o, "0");
  const BoundLadder ladder = bound_ladder(p, kmax, tol);

  Section terms{"inclusion-exclusion ladder", {"k", "q_k", "partial_sum", "bound"}, {}};
  for (std::size_t i = 0; i < ladder.terms.size(); ++i) {
    terms.rows.push_back({static_cast<std::int64_t>(i + 1), ladder.terms[i],
                          ladder.partial_sums[i],
                          std::string(i % 2 == 0 ? "upper" : "lower")});
  }
  r.sections.push_back(std::move(terms));
  r.sections.push_back(
      {"bracket for P(some day holds exactly three)",
       {"lower", "upper", "width", "exhausted", "converged"},
       {{ladder.bracket.lower.value(), ladder.bracket.upper.value(),
         ladder.bracket.width(), std::string(ladder.exhausted ? "yes" : "no"),
         std::string(ladder.converged ? "yes" : "no")}}});

  if (is_reference_instance(p) && !ladder.terms.empty()) {
    compare(r, "q_1 (text)", published::kQ1Text, ladder.terms[0], 5e-5);
    static const char* kNames[] = {"u_1", "v_1", "u_2", "v_2", "u_3", "v_3"};
    for (std::size_t i = 0; i < ladder.partial_sums.size() && i < 6; ++i) {
      compare(r, kNames[i], published::kLadder[i], ladder.partial_sums[i], 2e-6);
    }
    const Bracket exact = prob_some_triple_day(p, kExactTol);
    compare(r, "P(some day holds exactly three), six terms",
            published::kSomeTripleSixTerms, exact.midpoint(), 5e-5);
  }
  return r;
}

Report doubles_report(const Options& o) {
  const Params& p = o.params;
  Report r{"doubles", p, {}, {}, {}};
  const Rational mean = expected_doubles(p);
  const FactorialMoment fm = doubles_factorial_moment(p);
  const DistributionTable raw = hs_distribution(p);
  const Rational no_crowding = raw.total();

  Section moments{"moments of D", {"quantity", "value"}, {}};
  moments.rows.push_back({std::string("E[D]"), mean});
  moments.rows.push_back({std::string("E[D(D-1)]"), fm.second});
  if (fm.ratio) moments.rows.push_back({std::string("E[D(D-1)]/E[D]"), *fm.ratio});
  moments.rows.push_back({std::string("E[D]^2"), Rational(mean * mean)});
  moments.rows.push_back({std::string("sum_k p_k (no day with 3+)"), no_crowding});
  moments.rows.push_back({std::string("sum_k k p_k"), raw.first_moment()});
  const Bracket t0 = tau0(p, kExactTol);
  moments.rows.push_back({std::string("P(T=0) (no day with exactly 3)"), t0.midpoint()});

  Section law{"Hocking-Schwertman p_k", {"k", "p_k", "conditional"}, {}};
  std::optional<ConditionalDoubles> cond;
  if (no_crowding > 0) {
    cond = conditional_doubles(p);
    moments.rows.push_back({std::string("E[D | no day with 3+]"), cond->mean});
  }
  for (const auto& [k, e] : raw.entries()) {
    law.rows.push_back({static_cast<std::int64_t>(k), e.probability,
                        cond ? Cell(cond->table.probability(k)) : Cell(std::string())});
  }
  r.sections.push_back(std::move(moments));
  r.sections.push_back(std::move(law));

  if (is_reference_instance(p)) {
    compare(r, "sum p_k labeled P(T=0) vs exact P(T=0)", published::kSumPk,
            t0.midpoint(), 5e-7);
    compare(r, "quoted 1-0.6549 vs sum p_k", published::kQuotedNoTriple, no_crowding,
            5e-5);
  }
  return r;
}

Report mckinney_report(const Options& o) {
  const Params& p = o.params;
  Report r{"mckinney", p, {}, {}, {}};
  Section table{"P(some day hit r or more times) around one half",
                {"r", "n_below", "p_below", "n_star", "p_at"}, {}};
  for (std::uint32_t rr = 2; rr <= 4; ++rr) {
    const Threshold t = threshold_n(p.d, rr);
    table.rows.push_back({static_cast<std::int64_t>(rr),
                          static_cast<std::int64_t>(t.n_star) - 1, t.below,
                          static_cast<std::int64_t>(t.n_star), t.at});
    if (p.d == 365) {
      const auto& pub = published::kThresholds[rr - 2];
      const std::string tag = "r=" + std::to_string(rr) + " ";
      if (pub.n_at != t.n_star) {
        r.notes.push_back({tag + "threshold n", static_cast<std::int64_t>(pub.n_at),
                           static_cast<std::int64_t>(t.n_star)});
      }
      compare(r, tag + "n=" + std::to_string(pub.n_below), pub.below, t.below, 2e-4);
      compare(r, tag + "n=" + std::to_string(pub.n_at), pub.at, t.at, 2e-4);
    }
  }
  r.sections.push_back(std::move(table));
  return r;
}

Report taus_report(const Options& o) {
  const Params& p = o.params;
  Report r{"taus", p, {}, {}, {}};
  const std::uint32_t kmax = o.kmax.value_or(5);
  const Rational tol = tolerance(o, "1e-12");
  const auto entries = tau_entries(p, kmax, tol);

  std::optional<SimSummary> sim;
  if (o.reps_given) {
    sim = run_simulation(o);
    add_sim_meta(r, o);
  }
  Section table{"law of T (days with exactly three)",
                {"k", "q_k", "one_minus_tau0_reduced", "calculation", "half_width",
                 "simulation"},
                {}};
  for (const TauEntry& e : entries) {
    table.rows.push_back(
        {static_cast<std::int64_t>(e.k), e.q_factor,
         e.k == 0 ? Cell(std::string()) : Cell(e.tau0_bracket.complement().midpoint()),
         e.value_bracket.midpoint(), e.value_bracket.half_width(),
         sim ? Cell(sim->t_law.probability(e.k)) : Cell(std::string())});
  }
  r.sections.push_back(std::move(table));

  if (is_reference_instance(p)) {
    for (const TauEntry& e : entries) {
      if (e.k > 5) break;
      const std::string tag = "tau_" + std::to_string(e.k);
      compare(r, tag + " calculation", published::kTauCalculation[e.k],
              e.value_bracket.midpoint(), 5e-6);
      if (e.k > 0) {
        compare(r, "1-tau_0 reduced for k=" + std::to_string(e.k),
                published::kTauOneMinusTau0[e.k], e.tau0_bracket.complement().midpoint(),
                5e-6);
      }
    }
    r.notes.push_back({"tau_0 published simulation", Verbatim{published::kTauSimulation[0]},
                       entries.front().value_bracket.midpoint()});
  }
  return r;
}

Report simulate_report(const Options& o) {
  Report r{"simulate", o.params, {}, {}, {}};
  const SimSummary s = run_simulation(o);
  add_sim_meta(r, o);
  r.meta.emplace_back("mean_doubles", s.mean_doubles);
  auto law_section = [](const std::string& title, const DistributionTable& law,
                        const std::vector<std::uint64_t>& counts) {
    Section sec{title, {"k", "count", "probability", "three_sigma"}, {}};
    for (const auto& [k, e] : law.entries()) {
      sec.rows.push_back({static_cast<std::int64_t>(k),
                          static_cast<std::int64_t>(counts[k]), e.probability,
                          e.error});
    }
    return sec;
  };
  r.sections.push_back(law_section("t_law", s.t_law, s.t_counts));
  r.sections.push_back(law_section("d_law", s.d_law, s.d_counts));
  r.sections.push_back(
      law_section("d_law_given_t0", s.d_law_given_t0, s.d_counts_given_t0));
  return r;
}

Report oracle_report(const Options& o) {
  static const std::map<std::string, Statistic> kStatistics = {
      {"doubles", Statistic::doubles_count},
      {"triples", Statistic::triples_count},
      {"max", Statistic::max_multiplicity}};
  const auto it = kStatistics.find(o.statistic);
  if (it == kStatistics.end()) {
    throw std::invalid_argument("--statistic must be doubles, triples or max");
  }
  OracleResult result = o.method == "exhaustive"
                            ? exhaustive_law(o.params, it->second, o.threads)
                            : dp_law(o.params, it->second);
  Report r{"oracle", o.params, {}, {}, {}};
  r.meta.emplace_back("statistic", std::string(to_string(result.statistic)));
  r.meta.emplace_back("method", o.method);
  Section law{"exact law", {"k", "probability"}, {}};
  for (const auto& [k, e] : result.law.entries()) {
    law.rows.push_back({static_cast<std::int64_t>(k), e.probability});
  }
  r.sections.push_back(std::move(law));
  return r;
}

std::vector<std::vector<Cell>> figure1_table(const Params& p, const SimSummary& sim) {
  // The conditional table spans k = 0..n/2, which covers any simulated D.
  std::vector<std::vector<Cell>> out;
  for (const Figure1Row& row : figure1_rows(p)) {
    out.push_back({static_cast<std::int64_t>(row.k), row.conditional, row.poisson,
                   sim.d_law.probability(row.k)});
  }
  return out;
}

Report figure1_report(const Options& o) {
  Report r{"figure1", o.params, {}, {}, {}};
  const SimSummary sim = run_simulation(o);
  add_sim_meta(r, o);
  r.sections.push_back({"figure1",
                        {"k", "conditional_exact", "poisson", "simulated"},
                        figure1_table(o.params, sim)});
  return r;
}

Report summary_report(const Options& o) {
  const Params& p = o.params;
  Report r{"summary", p, {}, {}, {}};
  const bool ref = is_reference_instance(p);
  Section rows{"at least one coincidence", {"quantity", "computed", "paper"}, {}};
  auto add = [&](const std::string& name, const Cell& value, double paper) {
    rows.rows.push_back({name, value, ref ? Cell(Verbatim{paper}) : Cell(std::string())});
  };

  const PoissonSummary ps = poisson_summary(p);
  add("poisson P(some day holds exactly three)", ps.prob_at_least_one_triple_day,
      published::kPoissonSomeTriple);
  const Bracket some_triple = prob_some_triple_day(p, kExactTol);
  add("exact P(some day holds exactly three)", some_triple.midpoint(),
      published::kSomeTripleSixTerms);
  const Rational three_share = prob_no_r_repeat(p.n, p.d, 3).complement().value();
  add("exact P(at least three share a day)", three_share, published::kAtLeastThreeShare);
  const Rational no_pair = ratio(falling_factorial(p.d, p.n), power(BigInt(p.d), p.n));
  add("exact P(no two share a day)", no_pair, published::kNoPair);
  add("exact P(at least two share a day)", Rational(1 - no_pair), 1.0 - published::kNoPair);
  if (p.n >= 2) add("naive pair formula", naive_pair(p.n, p.d), published::kNaivePair);
  if (p.n >= 3) {
    add("regmi P(at least one triple)", regmi_triple(p.n, p.d).at_least_one,
        published::kRegmiAtLeastOne);
    add("chatgpt formula", chatgpt_estimate(p.n, p.d), published::kChatgptClaim);
  }
  add("exact E[D]", expected_doubles(p), published::kExpectedDoubles);
  add("poisson E[D]", ps.expected_doubles, published::kPoissonDoubles);
  r.sections.push_back(std::move(rows));

  if (ref) {
    compare(r, "P(some day holds exactly three), six terms",
            published::kSomeTripleSixTerms, some_triple.midpoint(), 5e-5);
    compare(r, "chatgpt claimed value vs its own formula", published::kChatgptClaim,
            chatgpt_estimate(p.n, p.d), 1e-3);
  }
  return r;
}

unsigned threads_from_env() {
  if (const char* env = std::getenv("COINCIDENCE_THREADS")) {
    try {
      return static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      throw std::invalid_argument("COINCIDENCE_THREADS must be a nonnegative integer");
    }
  }
  return 0;
}

}  // namespace

Report build_report(const Options& o) {
  o.params.validate();
  if (o.digits < 1) throw std::invalid_argument("--digits must be at least 1");
  if (o.command == "poisson") return poisson_report(o);
  if (o.command == "naive") return naive_report(o);
  if (o.command == "bounds") return bounds_report(o);
  if (o.command == "doubles") return doubles_report(o);
  if (o.command == "mckinney") return mckinney_report(o);
  if (o.command == "taus") return taus_report(o);
  if (o.command == "simulate") return simulate_report(o);
  if (o.command == "oracle") return oracle_report(o);
  if (o.command == "figure1") return figure1_report(o);
  if (o.command == "summary") return summary_report(o);
  throw std::invalid_argument("unknown command: " + o.command);
}

void emit_figure1(const Params& p, const SimSummary& sim, std::ostream& out,
                  int digits) {
  Report r{"figure1", p, {}, {}, {}};
  r.sections.push_back({"figure1",
                        {"k", "conditional_exact", "poisson", "simulated"},
                        figure1_table(p, sim)});
  render(r, Format::csv, digits, out);
}

void emit_figure1(const Params& p, const SimSummary& sim, const std::string& path,
                  int digits) {
  std::ofstream file(path);
  if (!file) throw IoError("cannot open " + path + " for writing");
  emit_figure1(p, sim, file, digits);
  file.flush();
  if (!file) throw IoError("failed writing " + path);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact and simulated birthday coincidence probabilities", "coincidence"};
  app.fallthrough();
  app.require_subcommand(0, 1);

  std::string format = "table";
  std::optional<unsigned> threads;
  app.add_option("--n", o.params.n, "number of people")->capture_default_str();
  app.add_option("--days", o.params.d, "number of days")->capture_default_str();
  app.add_option("--kmax", o.kmax, "largest inclusion-exclusion term or T value");
  app.add_option("--tol", o.tol, "bracket width tolerance (decimal)");
  app.add_option("--digits", o.digits, "significant digits")->capture_default_str();
  auto* format_opt = app.add_option("--format", format, "table, json or csv")
                         ->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_option("--seed", o.seed, "simulation seed")->capture_default_str();
  auto* reps_opt = app.add_option("--reps", o.reps, "simulation replicates")
                       ->capture_default_str();
  app.add_option("--threads", threads, "worker threads (0 = auto)");
  app.add_option("--out", o.out, "write output to PATH");
  app.add_option("--statistic", o.statistic, "oracle statistic: doubles, triples, max")
      ->capture_default_str();
  app.add_option("--method", o.method, "oracle method: dp or exhaustive")
      ->check(CLI::IsMember({"dp", "exhaustive"}))
      ->capture_default_str();

  const std::vector<std::pair<const char*, const char*>> commands = {
      {"summary", "headline comparison of approximations and exact values"},
      {"poisson", "per-day Poisson approximation"},
      {"naive", "independence-based formulas and their exact counterparts"},
      {"bounds", "inclusion-exclusion bound ladder for a triple day"},
      {"doubles", "moments and no-crowding law of the number of double days"},
      {"mckinney", "half-probability thresholds for r = 2, 3, 4"},
      {"taus", "law of the number of triple days"},
      {"simulate", "Monte Carlo laws of doubles and triples"},
      {"oracle", "exact law by dynamic program or exhaustive enumeration"},
      {"figure1", "conditional doubles law vs Poisson vs simulation, as CSV"}};
  for (const auto& [name, help] : commands) app.add_subcommand(name, help);

  std::vector<std::string> args;
  for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  if (!app.get_subcommands().empty()) o.command = app.get_subcommands().front()->get_name();
  o.format_given = format_opt->count() > 0;
  o.reps_given = reps_opt->count() > 0;
  o.format = parse_format(format);
  if (o.command == "figure1" && !o.format_given) o.format = Format::csv;

  try {
    o.threads = threads ? *threads : threads_from_env();
    const Report report = build_report(o);
    if (o.out) {
      std::ofstream file(*o.out);
      if (!file) throw IoError("cannot open " + *o.out + " for writing");
      render(report, o.format, o.digits, file);
      file.flush();
      if (!file) throw IoError("failed writing " + *o.out);
    } else {
      render(report, o.format, o.digits, out);
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const InstanceTooLarge& e) {
    err << "error: " << e.what() << "\n";
    return kExitGuard;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitGuard;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace coincidence::cli
