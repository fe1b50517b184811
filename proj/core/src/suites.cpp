#include "pricedq/suites.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "pricedq/analysis.hpp"
#include "pricedq/corpus.hpp"
#include "pricedq/errors.hpp"
#include "pricedq/influence.hpp"
#include "pricedq/oracle.hpp"
#include "pricedq/strategy.hpp"

namespace pricedq {

namespace {

const Rational kEpsGrid[2] = {Rational(1, 20), Rational(1, 10)};

std::string eps_label(const Rational& eps) { return " eps=" + eps.to_string(); }

void push(SuiteResult& out, std::string instance, std::string check, Rational lhs, Rational rhs,
          bool holds) {
  out.checks.push_back({std::move(instance), std::move(check), lhs, rhs, holds});
}

void push_report(SuiteResult& out, std::string instance, std::string check,
                 const InequalityReport& r) {
  push(out, std::move(instance), std::move(check), r.lhs, r.rhs, r.holds);
}

StrategyTree random_subtree(int n, int depth, int max_depth, uint64_t used, Rng& rng) {
  int free = n - __builtin_popcountll(used);
  bool leaf = depth >= max_depth || free == 0 || rng.below(4) == 0;
  if (leaf) return StrategyTree::leaf(rng.below(2) ? +1 : -1);
  int pick = static_cast<int>(rng.below(static_cast<uint64_t>(free)));
  int coordinate = -1;
  for (int i = 0; i < n; ++i) {
    if ((used >> i) & 1) continue;
    if (pick-- == 0) {
      coordinate = i;
      break;
    }
  }
  uint64_t used2 = used | (1ull << coordinate);
  StrategyTree on0 = random_subtree(n, depth + 1, max_depth, used2, rng);
  StrategyTree on1 = random_subtree(n, depth + 1, max_depth, used2, rng);
  return StrategyTree::internal(coordinate, std::move(on0), std::move(on1));
}

StrategyTree::NodePtr relabel_node(const BoolFn& f, const StrategyTree::NodePtr& node) {
  if (node->is_leaf()) return StrategyTree::leaf(sign_of_expectation(f)).root();
  return StrategyTree::internal(node->coordinate,
                                StrategyTree(relabel_node(f.restrict(node->coordinate, 0), node->child0)),
                                StrategyTree(relabel_node(f.restrict(node->coordinate, 1), node->child1)))
      .root();
}

bool tree_queries(const StrategyTree& t) { return !t.empty() && !t.root()->is_leaf(); }

}  // namespace

BoolFn random_table_fn(int n, Rng& rng) {
  if (n < 1 || n > 6) throw InputError("random_table_fn: n must be in 1..6");
  uint64_t size = 1ull << n;
  uint64_t bits = rng.next_u64();
  if (size < 64) bits &= (1ull << size) - 1;
  return BoolFn::from_table(
      TruthTable::from_eval(n, [&](uint64_t x) { return (bits >> x) & 1 ? +1 : -1; }));
}

StrategyTree random_tree(int n, int max_depth, Rng& rng) {
  return random_subtree(n, 0, std::min(max_depth, n), 0, rng);
}

StrategyTree relabel_f_consistent(const BoolFn& f, const StrategyTree& t) {
  if (t.empty()) return t;
  return StrategyTree(relabel_node(f, t.root()));
}

std::vector<CorpusInstance> acceptance_corpus(uint64_t seed) {
  std::vector<CorpusInstance> out;
  auto add = [&](const std::string& fn_spec, const std::string& cost_spec, uint64_t tag) {
    GeneratorSpec gs = GeneratorSpec::parse(fn_spec);
    gs.seed = derive_seed(seed, {kStreamCorpus, tag});
    BoolFn f = generate_function(gs);
    CostVector c = generate_costs(cost_spec, f.arity(), derive_seed(seed, {kStreamCosts, tag}));
    out.push_back({fn_spec, std::move(f), std::move(c)});
  };
  add("tribes:2:2", "unit", 0);
  add("majority:3", "uniform:8", 1);
  add("dictator:4:2", "spike:2:10", 2);
  for (uint64_t j = 0; j < 10; ++j) {
    GeneratorSpec gs = GeneratorSpec::parse("random_dnf:6:3:3");
    gs.seed = derive_seed(seed, {kStreamCorpus, 10 + j});
    BoolFn f = generate_function(gs);
    CostVector c =
        generate_costs("uniform:8", f.arity(), derive_seed(seed, {kStreamCosts, 10 + j}));
    out.push_back({"random_dnf:6:3:3#" + std::to_string(j), std::move(f), std::move(c)});
  }
  for (uint64_t j = 0; j < 5; ++j) {
    GeneratorSpec gs = GeneratorSpec::parse("halfspace:5:3");
    gs.seed = derive_seed(seed, {kStreamCorpus, 30 + j});
    BoolFn f = generate_function(gs);
    CostVector c =
        generate_costs("uniform:8", f.arity(), derive_seed(seed, {kStreamCosts, 30 + j}));
    out.push_back({"halfspace:5:3#" + std::to_string(j), std::move(f), std::move(c)});
  }
  return out;
}

long long SuiteResult::failures() const {
  long long bad = 0;
  for (const auto& c : checks)
    if (!c.holds) ++bad;
  return bad;
}

SuiteResult run_suite_osss(int max_n, int cases, uint64_t seed) {
  if (max_n < 1 || max_n > 6) throw InputError("osss suite: max_n must be in 1..6");
  if (cases < 1) throw InputError("osss suite: cases must be positive");
  SuiteResult out{"osss", {}};
  for (int t = 0; t < cases; ++t) {
    Rng rng(derive_seed(seed, {kStreamTree, static_cast<uint64_t>(t)}));
    int n = static_cast<int>(rng.range(1, max_n));
    BoolFn f = random_table_fn(n, rng);
    StrategyTree tree = random_tree(n, n, rng);
    if (rng.below(2)) tree = relabel_f_consistent(f, tree);
    std::string label = "case=" + std::to_string(t) + " n=" + std::to_string(n);
    push_report(out, label, "osss", osss_check(f, tree));
    if (tree_queries(tree)) {
      CostVector c = generate_costs("uniform:8", n,
                                    derive_seed(seed, {kStreamCosts, static_cast<uint64_t>(t)}));
      push_report(out, label, "cost_osss", cost_osss_witness(f, c, tree));
    }
  }
  return out;
}

SuiteResult run_suite_identities(int max_n, int random_cases, uint64_t seed) {
  if (max_n < 3 || max_n > 6) throw InputError("identities suite: max_n must be in 3..6");
  if (random_cases < 0) throw InputError("identities suite: negative case count");
  SuiteResult out{"identities", {}};
  // Exhaustive sweep: every table on n <= 3 coordinates, every single split.
  for (int n = 1; n <= 3; ++n) {
    uint64_t size = 1ull << n;
    for (uint64_t bits = 0; bits < (1ull << size); ++bits) {
      BoolFn f = BoolFn::from_table(
          TruthTable::from_eval(n, [&](uint64_t x) { return (bits >> x) & 1 ? +1 : -1; }));
      for (int i = 0; i < n; ++i) {
        std::string label =
            "n=" + std::to_string(n) + " table=" + std::to_string(bits) + " i=" + std::to_string(i);
        push_report(out, label, "split", influence_split_check(f, i));
        StrategyTree probe =
            StrategyTree::internal(i, StrategyTree::leaf(sign_of_expectation(f.restrict(i, 0))),
                                   StrategyTree::leaf(sign_of_expectation(f.restrict(i, 1))));
        push_report(out, label, "avg_influence", avg_influence_identity_check(f, probe));
        push_report(out, label, "delta_cost",
                    delta_cost_identity_check(f, CostVector::unit(n), probe));
      }
    }
  }
  for (int t = 0; t < random_cases; ++t) {
    Rng rng(derive_seed(seed, {kStreamTree, 1000 + static_cast<uint64_t>(t)}));
    int n = static_cast<int>(rng.range(4, max_n));
    BoolFn f = random_table_fn(n, rng);
    StrategyTree tree = random_tree(n, n, rng);
    if (rng.below(2)) tree = relabel_f_consistent(f, tree);
    CostVector c = generate_costs(
        "uniform:8", n, derive_seed(seed, {kStreamCosts, 1000 + static_cast<uint64_t>(t)}));
    int i = static_cast<int>(rng.below(static_cast<uint64_t>(n)));
    std::string label = "case=" + std::to_string(t) + " n=" + std::to_string(n);
    push_report(out, label, "split", influence_split_check(f, i));
    push_report(out, label, "avg_influence", avg_influence_identity_check(f, tree));
    push_report(out, label, "delta_cost", delta_cost_identity_check(f, c, tree));
  }
  return out;
}

SuiteResult run_suite_cost_lemma(int pairs, uint64_t seed) {
  if (pairs < 1) throw InputError("cost_lemma suite: pairs must be positive");
  SuiteResult out{"cost_lemma", {}};
  for (int t = 0; t < pairs; ++t) {
    Rng rng(derive_seed(seed, {kStreamTree, static_cast<uint64_t>(t)}));
    int n = static_cast<int>(rng.range(1, 6));
    BoolFn f = random_table_fn(n, rng);
    CostVector c = generate_costs("uniform:8", n,
                                  derive_seed(seed, {kStreamCosts, static_cast<uint64_t>(t)}));
    long long sum = c.total();
    const Rational budgets[3] = {Rational(sum / 2), Rational(sum), Rational(2 * sum)};
    for (const Rational& b : budgets) {
      SStarStrategy s(f, c, b, {}, /*early_stop_on_constant=*/false);
      ExactStats stats = strategy_stats_exact(s, f, c);
      Rational want = min(b, Rational(sum));
      std::string label = "case=" + std::to_string(t) + " n=" + std::to_string(n) +
                          " B=" + b.to_string() + " sum=" + std::to_string(sum);
      push(out, label, "expected_cost", stats.expected_cost, want,
           stats.expected_cost == want);
    }
  }
  return out;
}

SuiteResult run_suite_accuracy(uint64_t seed) {
  SuiteResult out{"accuracy", {}};
  for (const CorpusInstance& inst : acceptance_corpus(seed)) {
    Rational inf = total_influence_exact(inst.f);
    for (const Rational& eps : kEpsGrid) {
      long long k = error_budget_for(eps, inst.f.free_count());
      OptResult opt = opt_worst(inst.f, inst.costs, k);
      Rational budget = opt.value * inf / eps + Rational(1);
      SStarStrategy s(inst.f, inst.costs, budget);
      ExactStats stats = strategy_stats_exact(s, inst.f, inst.costs);
      Rational two_eps = eps * Rational(2);
      push(out, inst.name + eps_label(eps), "error_lt_2eps", stats.error, two_eps,
           stats.error < two_eps);
    }
  }
  return out;
}

SuiteResult run_suite_warmup(uint64_t seed) {
  SuiteResult out{"warmup", {}};
  for (const CorpusInstance& inst : acceptance_corpus(seed)) {
    Rational inf = total_influence_exact(inst.f);
    OptResult opt0 = opt_worst(inst.f, inst.costs, 0);
    for (const Rational& eps : kEpsGrid) {
      SDiamondStrategy s(inst.f, inst.costs, eps);
      ExactStats stats = strategy_stats_exact(s, inst.f, inst.costs);
      std::string label = inst.name + eps_label(eps);
      Rational cost_bound = opt0.value * inf / eps;
      push(out, label, "expected_cost", stats.expected_cost, cost_bound,
           stats.expected_cost <= cost_bound);
      push(out, label, "error", stats.error, eps, stats.error <= eps);
    }
  }
  return out;
}

std::vector<SuiteResult> run_suites(const std::string& name, int max_n, int cases,
                                    uint64_t seed) {
  std::vector<SuiteResult> out;
  bool all = name == "all";
  bool known = all;
  if (all || name == "osss") {
    out.push_back(run_suite_osss(max_n > 0 ? std::min(max_n, 6) : 5, cases > 0 ? cases : 500,
                                 seed));
    known = true;
  }
  if (all || name == "identities") {
    out.push_back(run_suite_identities(max_n > 0 ? std::max(3, std::min(max_n, 6)) : 6,
                                       cases > 0 ? cases : 200, seed));
    known = true;
  }
  if (all || name == "cost_lemma") {
    out.push_back(run_suite_cost_lemma(cases > 0 ? cases : 34, seed));
    known = true;
  }
  if (all || name == "accuracy") {
    out.push_back(run_suite_accuracy(seed));
    known = true;
  }
  if (all || name == "warmup") {
    out.push_back(run_suite_warmup(seed));
    known = true;
  }
  if (!known)
    throw InputError("unknown suite '" + name +
                     "' (expected osss|identities|cost_lemma|accuracy|warmup|all)");
  return out;
}

Report suites_report(const std::vector<SuiteResult>& results) {
  Report report("verify", {"suite", "instance", "check", "lhs", "rhs", "holds"});
  for (const SuiteResult& suite : results)
    for (const CheckOutcome& c : suite.checks)
      report.add_row({suite.suite, c.instance, c.check, c.lhs, c.rhs,
                      static_cast<long long>(c.holds ? 1 : 0)});
  report.sort_rows();
  return report;
}

}  // namespace pricedq
