#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pricedq/boolfn.hpp"
#include "pricedq/rational.hpp"
#include "pricedq/report.hpp"
#include "pricedq/rng.hpp"
#include "pricedq/strategy_tree.hpp"

namespace pricedq {

// One named (function, costs) pair for the experiment corpus.
struct CorpusInstance {
  std::string name;
  BoolFn f;
  CostVector costs;
};

// Fixed benchmark corpus: tribes(2,2) at unit costs, majority3 with uniform
// costs, a dictator whose own coordinate carries a spiked price, ten random
// 3-term DNFs at n=6 and five random halfspaces at n=5 with uniform costs.
std::vector<CorpusInstance> acceptance_corpus(uint64_t seed);

// Uniformly random truth table on n <= 6 coordinates.
BoolFn random_table_fn(int n, Rng& rng);

// Random query tree: distinct coordinates along every path, random +-1
// leaves, depth <= max_depth.  Never empty (at worst a single leaf).
StrategyTree random_tree(int n, int max_depth, Rng& rng);

// Same shape, leaf outputs replaced by a majority sign of f on the leaf's
// subcube (ties resolved +1).
StrategyTree relabel_f_consistent(const BoolFn& f, const StrategyTree& t);

struct CheckOutcome {
  std::string instance;
  std::string check;
  Rational lhs;
  Rational rhs;
  bool holds = false;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckOutcome> checks;

  long long failures() const;
  bool all_hold() const { return failures() == 0; }
};

// Theorem checks over randomized instances; every outcome must hold (these
// are theorems, so a failure signals an implementation bug, never bad luck).
//
// osss: bias - error <= sum of delta_i * Inf_i on random (table, tree) pairs,
// plus the cost-weighted witness corollary under random costs in 1..8.
SuiteResult run_suite_osss(int max_n, int cases, uint64_t seed);

// identities: influence split, average-influence identity, and the
// delta-cost identity; exhaustive over all tables for n <= 3, then
// random_cases random (f, tree, costs) triples at n in {4..max_n}.
SuiteResult run_suite_identities(int max_n, int random_cases, uint64_t seed);

// cost_lemma: exact expected spend of the budget strategy equals
// min(B, sum of costs), at B in {floor(sum/2), sum, 2 sum} per pair.
SuiteResult run_suite_cost_lemma(int pairs, uint64_t seed);

// accuracy: with B chosen past opt_worst(f,c,k) * Inf(f) / eps from the
// oracle, the budget strategy's exact error stays below 2 eps.
SuiteResult run_suite_accuracy(uint64_t seed);

// warmup: the bias-threshold strategy's exact expected cost is at most
// opt_worst(f,c,0) * Inf(f) / eps, and its exact error is at most eps.
SuiteResult run_suite_warmup(uint64_t seed);

// Dispatcher for the CLI: name is one of osss | identities | cost_lemma |
// accuracy | warmup | all.  max_n/cases <= 0 pick each suite's default
// (osss: n<=5, 500 cases; identities: n<=6, 200 random cases; cost_lemma:
// 34 pairs).  InputError on unknown names.
std::vector<SuiteResult> run_suites(const std::string& name, int max_n, int cases, uint64_t seed);

// One row per check: suite, instance, check, lhs, rhs, holds (1/0).
Report suites_report(const std::vector<SuiteResult>& results);

}  // namespace pricedq
