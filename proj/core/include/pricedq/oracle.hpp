#pragma once

#include <vector>

#include "pricedq/boolfn.hpp"
#include "pricedq/rational.hpp"
#include "pricedq/strategy.hpp"
#include "pricedq/strategy_tree.hpp"

namespace pricedq {

// Exact statistics of a strategy on f, by enumeration over all inputs with
// the boundary lottery handled analytically.  delta is indexed by original
// coordinate; avg_influence is E_x[Inf(f at the reached leaf)].
struct ExactStats {
  Rational error;
  Rational expected_cost;
  Rational avg_influence;
  Rational worst_cost;  // max over inputs and lottery branches
  std::vector<Rational> delta;

  // Misclassified-input count: error * 2^free, exact.
  long long misclassified(int free_count) const;
};

// Optimal-cost result for a given error budget k (misclassified inputs over
// the free cube; eps corresponds to k = floor(eps * 2^free)).
struct OptResult {
  Rational value;
  StrategyTree witness;
  bool worst_objective = false;
  long long error_budget = 0;
};

long long error_budget_for(const Rational& eps, int free_count);

// Exact DP over (subcube, error split).  Capacity: free <= 14 when k == 0,
// free <= 10 when k > 0.
OptResult opt_expected(const BoolFn& f, const CostVector& c, long long k);
OptResult opt_worst(const BoolFn& f, const CostVector& c, long long k);

ExactStats strategy_stats_exact(const Strategy& s, const BoolFn& f, const CostVector& c);
ExactStats strategy_stats_exact(const StrategyTree& tree, const BoolFn& f, const CostVector& c);

}  // namespace pricedq
