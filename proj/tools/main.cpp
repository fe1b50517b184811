#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "pricedq/analysis.hpp"
#include "pricedq/boolfn.hpp"
#include "pricedq/corpus.hpp"
#include "pricedq/errors.hpp"
#include "pricedq/influence.hpp"
#include "pricedq/oracle.hpp"
#include "pricedq/rational.hpp"
#include "pricedq/report.hpp"
#include "pricedq/rng.hpp"
#include "pricedq/strategy.hpp"
#include "pricedq/suites.hpp"

namespace {

using namespace pricedq;

// --f accepts inline function-spec JSON, a path to a JSON file, or a
// generator string such as "tribes:2:2" (seeded from --seed).
BoolFn load_function(const std::string& spec, uint64_t seed) {
  std::string text = spec;
  if (text.empty()) throw InputError("--f is required");
  if (text.front() != '{') {
    std::ifstream in(text, std::ios::binary);
    if (in) {
      std::stringstream ss;
      ss << in.rdbuf();
      text = ss.str();
    } else {
      return generate_function(spec, seed);
    }
  }
  return BoolFn::parse_spec(text);
}

Rational parse_eps(const std::string& text) {
  Rational eps = Rational::parse(text);
  if (!(Rational(0) < eps && eps < Rational(1, 2)))
    throw InputError("--eps must lie strictly between 0 and 1/2");
  return eps;
}

Cell cell_of(const Rational& r) {
  if (r.den() == 1) return Cell(r.num());
  return Cell(r);
}

const std::vector<std::string> kRunColumns = {
    "n",     "kind",          "sum_c",        "inf_total", "eps",         "B",
    "error", "expected_cost", "opt_expected", "opt_worst", "bound_ratio", "seed"};

// Shared by `run` and `bench`: executes one strategy on one instance and
// fills the run-format row.  budget empty selects the bias-threshold
// strategy; budget_auto runs the doubling search first.
std::vector<Cell> run_row(const std::string& kind_label, const BoolFn& f, const CostVector& c,
                          const Rational& eps, std::optional<Rational> budget, bool budget_auto,
                          long long samples, uint64_t seed) {
  int free = f.free_count();
  bool estimated = free > 20;
  InfluenceMode mode;
  mode.estimated = estimated;
  mode.seed = seed;

  double inf_total = estimated
                         ? influence_profile_estimated(f, mode.tau, mode.delta, seed).total.to_double()
                         : total_influence_exact(f).to_double();

  Rational b;
  if (budget_auto) b = find_budget(f, c, eps, samples, 0.05, seed, mode).budget;
  else if (budget) b = *budget;

  std::unique_ptr<Strategy> strat;
  bool star = budget_auto || budget.has_value();
  if (star) strat = std::make_unique<SStarStrategy>(f, c, b, mode);
  else strat = std::make_unique<SDiamondStrategy>(f, c, eps, mode);

  double error = 0, expected_cost = 0;
  if (!estimated && free <= 14) {
    ExactStats st = strategy_stats_exact(*strat, f, c);
    error = st.error.to_double();
    expected_cost = st.expected_cost.to_double();
  } else {
    long long m = samples > 0 ? samples : 4000;
    RunStats st = estimate_strategy_stats(*strat, f, c, m, derive_seed(seed, {kStreamInput}));
    error = st.error;
    expected_cost = st.expected_cost;
  }

  Cell opt_e_cell(std::string{}), opt_w_cell(std::string{}), ratio_cell(std::string{});
  if (!estimated) {
    long long k = error_budget_for(eps, free);
    bool computable = k == 0 ? free <= 12 : free <= 10;
    if (computable) {
      double opt_e = opt_expected(f, c, k).value.to_double();
      double opt_w = opt_worst(f, c, k).value.to_double();
      opt_e_cell = Cell(opt_e);
      opt_w_cell = Cell(opt_w);
      double eps_d = eps.to_double();
      double denom = opt_e * inf_total / (eps_d * eps_d);
      if (denom > 0) ratio_cell = Cell(expected_cost / denom);
    }
  }

  Cell b_cell(std::string{});
  if (star) b_cell = cell_of(b);
  return {static_cast<long long>(f.arity()),
          kind_label,
          c.total(),
          inf_total,
          eps.to_double(),
          b_cell,
          error,
          expected_cost,
          opt_e_cell,
          opt_w_cell,
          ratio_cell,
          std::to_string(seed)};
}

struct CommonOpts {
  std::string f_spec;
  std::string costs = "unit";
  std::string eps = "0.1";
  std::string budget;  // empty, integer/rational text, or "auto"
  uint64_t seed = 0;
  long long samples = 0;
  std::string out;
  std::string format = "csv";
};

void add_io_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--seed", o.seed, "RNG seed (all randomness derives from it)");
  cmd->add_option("--out", o.out, "output path (default stdout)");
  cmd->add_option("--format", o.format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
}

CostVector load_costs(const CommonOpts& o, const BoolFn& f) {
  return generate_costs(o.costs, f.arity(), derive_seed(o.seed, {kStreamCosts}));
}

int cmd_influence(const CommonOpts& o) {
  BoolFn f = load_function(o.f_spec, o.seed);
  Report rep("influence", {"n", "kind", "i", "inf_i", "inf_total", "bias", "mode", "seed"});
  bool exact = f.free_count() <= 20;
  InfluenceProfile prof = exact ? influence_profile_exact(f)
                                : influence_profile_estimated(f, 0.05, 0.05, o.seed);
  Cell bias = exact ? Cell(bias_exact(f).to_double()) : Cell(std::string{});
  for (int i = 0; i < f.arity(); ++i)
    rep.add_row({static_cast<long long>(f.arity()), f.kind(), static_cast<long long>(i + 1),
                 prof.per_coordinate[i].to_double(), prof.total.to_double(), bias,
                 std::string(exact ? "exact" : "estimated"), std::to_string(o.seed)});
  rep.sort_rows();
  write_report_text(o.out, rep.render(o.format));
  return 0;
}

int cmd_run(const CommonOpts& o) {
  BoolFn f = load_function(o.f_spec, o.seed);
  CostVector c = load_costs(o, f);
  Rational eps = parse_eps(o.eps);
  std::optional<Rational> budget;
  bool budget_auto = o.budget == "auto";
  if (!o.budget.empty() && !budget_auto) {
    budget = Rational::parse(o.budget);
    if (*budget < Rational(0)) throw InputError("--budget must be >= 0");
  }
  Report rep("run", kRunColumns);
  rep.add_row(run_row(f.kind(), f, c, eps, budget, budget_auto, o.samples, o.seed));
  rep.sort_rows();
  write_report_text(o.out, rep.render(o.format));
  return 0;
}

int cmd_opt(const CommonOpts& o, const std::string& tree_out) {
  BoolFn f = load_function(o.f_spec, o.seed);
  CostVector c = load_costs(o, f);
  Rational eps = parse_eps(o.eps);
  long long k = error_budget_for(eps, f.free_count());
  OptResult e = opt_expected(f, c, k);
  OptResult w = opt_worst(f, c, k);
  Report rep("opt",
             {"n", "kind", "sum_c", "eps", "k", "objective", "value", "nodes", "depth", "seed"});
  for (const OptResult* r : {&e, &w})
    rep.add_row({static_cast<long long>(f.arity()), f.kind(), c.total(), eps.to_double(), k,
                 std::string(r->worst_objective ? "worst" : "expected"), cell_of(r->value),
                 r->witness.node_count(), static_cast<long long>(r->witness.depth()),
                 std::to_string(o.seed)});
  rep.sort_rows();
  if (!tree_out.empty()) write_report_text(tree_out, e.witness.to_json() + "\n");
  write_report_text(o.out, rep.render(o.format));
  return 0;
}

int cmd_budget(const CommonOpts& o) {
  BoolFn f = load_function(o.f_spec, o.seed);
  CostVector c = load_costs(o, f);
  Rational eps = parse_eps(o.eps);
  InfluenceMode mode;
  mode.estimated = f.free_count() > 20;
  mode.seed = o.seed;
  BudgetSearchResult r = find_budget(f, c, eps, o.samples, 0.05, o.seed, mode);
  Report rep("budget",
             {"n", "kind", "eps", "B", "measured_error", "doublings", "samples", "seed"});
  rep.add_row({static_cast<long long>(f.arity()), f.kind(), eps.to_double(), cell_of(r.budget),
               r.measured_error.to_double(), static_cast<long long>(r.doublings), r.samples,
               std::to_string(o.seed)});
  write_report_text(o.out, rep.render(o.format));
  return 0;
}

int cmd_verify(const CommonOpts& o, const std::string& suite, int max_n) {
  std::vector<SuiteResult> results =
      run_suites(suite, max_n, static_cast<int>(o.samples), o.seed);
  Report rep = suites_report(results);
  write_report_text(o.out, rep.render(o.format));
  long long failures = 0;
  for (const SuiteResult& r : results) {
    std::fprintf(stderr, "suite %-11s %5zu checks, %lld failed\n", r.suite.c_str(),
                 r.checks.size(), r.failures());
    failures += r.failures();
  }
  return failures == 0 ? 0 : 2;
}

int cmd_bench(const CommonOpts& o) {
  Rational eps = parse_eps(o.eps);
  Report rep("bench", kRunColumns);
  for (const CorpusInstance& inst : acceptance_corpus(o.seed)) {
    auto t0 = std::chrono::steady_clock::now();
    rep.add_row(run_row(inst.name, inst.f, inst.costs, eps, std::nullopt, false, o.samples,
                        o.seed));
    rep.add_row(run_row(inst.name + " B=auto", inst.f, inst.costs, eps, std::nullopt, true,
                        o.samples, o.seed));
    auto t1 = std::chrono::steady_clock::now();
    std::fprintf(stderr, "bench %-22s %8.1f ms\n", inst.name.c_str(),
                 std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  rep.sort_rows();
  write_report_text(o.out, rep.render(o.format));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"priced-query greedy strategies, exact oracles, and verification suites"};
  app.require_subcommand(1);

  CommonOpts o;
  std::string tree_out, suite = "all";
  int max_n = 0;

  CLI::App* influence = app.add_subcommand("influence", "per-coordinate influences and bias");
  influence->add_option("--f", o.f_spec, "function spec JSON, file path, or generator string")
      ->required();
  add_io_flags(influence, o);

  CLI::App* run = app.add_subcommand("run", "execute a strategy and report error/cost");
  run->add_option("--f", o.f_spec, "function spec JSON, file path, or generator string")
      ->required();
  run->add_option("--costs", o.costs, "unit | uniform:M | power_law:M | spike:J:F | c1,c2,...");
  run->add_option("--eps", o.eps, "target error (exact decimal or p/q)");
  run->add_option("--budget", o.budget, "budget strategy: integer budget or 'auto' (doubling "
                                        "search); omit for the bias-threshold strategy");
  run->add_option("--samples", o.samples, "Monte Carlo sample count (0 = automatic)");
  add_io_flags(run, o);

  CLI::App* opt = app.add_subcommand("opt", "exact optimal strategies via subcube DP");
  opt->add_option("--f", o.f_spec, "function spec JSON, file path, or generator string")
      ->required();
  opt->add_option("--costs", o.costs, "cost spec");
  opt->add_option("--eps", o.eps, "error budget eps; k = floor(eps * 2^free)");
  opt->add_option("--tree-out", tree_out, "write the expected-objective witness tree JSON here");
  add_io_flags(opt, o);

  CLI::App* budget = app.add_subcommand("budget", "budget-doubling search");
  budget->add_option("--f", o.f_spec, "function spec JSON, file path, or generator string")
      ->required();
  budget->add_option("--costs", o.costs, "cost spec");
  budget->add_option("--eps", o.eps, "target error");
  budget->add_option("--samples", o.samples, "trials per candidate budget (0 = automatic)");
  add_io_flags(budget, o);

  CLI::App* verify = app.add_subcommand("verify", "run theorem-checking suites");
  verify->add_option("--suite", suite, "osss|identities|cost_lemma|accuracy|warmup|all");
  verify->add_option("--max-n", max_n, "size bound for randomized suites (0 = default)");
  verify->add_option("--samples", o.samples, "case count for randomized suites (0 = default)");
  add_io_flags(verify, o);

  CLI::App* bench = app.add_subcommand("bench", "corpus sweep in run-report format");
  bench->add_option("--eps", o.eps, "target error");
  bench->add_option("--samples", o.samples, "Monte Carlo sample count (0 = automatic)");
  add_io_flags(bench, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(influence)) return cmd_influence(o);
    if (app.got_subcommand(run)) return cmd_run(o);
    if (app.got_subcommand(opt)) return cmd_opt(o, tree_out);
    if (app.got_subcommand(budget)) return cmd_budget(o);
    if (app.got_subcommand(verify)) return cmd_verify(o, suite, max_n);
    if (app.got_subcommand(bench)) return cmd_bench(o);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 1;
}
