#pragma once

#include <optional>

#include "pricedq/boolfn.hpp"
#include "pricedq/oracle.hpp"
#include "pricedq/rational.hpp"
#include "pricedq/strategy_tree.hpp"

namespace pricedq {

// Outcome of one inequality/identity check, in exact arithmetic.
// For inequalities: holds <=> lhs <= rhs.  For identities: holds <=> lhs == rhs
// (and slack() is zero).
struct InequalityReport {
  Rational lhs;
  Rational rhs;
  bool holds = false;
  std::optional<int> witness_coordinate;
  Rational slack() const { return rhs - lhs; }
};

// OSSS inequality (Jain-Zhang form): bias(f) - error_f(S) <= sum_i delta_i * Inf_i(f).
InequalityReport osss_check(const BoolFn& f, const StrategyTree& s);

// Cost-weighted corollary: max_i Inf_i/c_i >= (bias(f) - error_f(S)) / Delta_c(S).
// lhs is the ratio, rhs the maximizing coordinate's score (witness_coordinate).
// InputError when S makes no query (Delta_c = 0).
InequalityReport cost_osss_witness(const BoolFn& f, const CostVector& c, const StrategyTree& s);

// Influence splitting: Inf(f) = Inf_i(f) + (Inf(f_{x_i=0}) + Inf(f_{x_i=1})) / 2.
InequalityReport influence_split_check(const BoolFn& f, int i);

// Average-influence identity: AvgInf_f(S) = Inf(f) - E_x[sum over the path of
// the queried coordinate's influence at that restriction].  Both sides are
// computed by independent routes.
InequalityReport avg_influence_identity_check(const BoolFn& f, const StrategyTree& s);

// Cost identity: sum_i delta_i(S) * c_i = E_x[cost of S on x], the right side
// evaluated by direct per-input tree walks.
InequalityReport delta_cost_identity_check(const BoolFn& f, const CostVector& c,
                                           const StrategyTree& s);

// True when every leaf outputs a majority sign of f over its subcube.
bool is_f_consistent(const BoolFn& f, const StrategyTree& s);

}  // namespace pricedq
