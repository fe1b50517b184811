#pragma once

#include <cstdint>
#include <vector>

#include "pricedq/boolfn.hpp"
#include "pricedq/rational.hpp"

namespace pricedq {

// Per-coordinate influences plus their sum.  Restricted coordinates carry
// influence exactly 0.  In estimated mode values come from Hoeffding sampling
// at additive accuracy tau with failure probability delta (per coordinate).
struct InfluenceProfile {
  std::vector<Rational> per_coordinate;
  Rational total;
  bool exact = true;
  double tau = 0;
  double delta = 0;
};

// min_b Pr[f(x) = b] over the free coordinates; CapacityError past 20.
Rational bias_exact(const BoolFn& f);

// sign(E[f]) with the global tie rule sign(0) := +1.
int sign_of_expectation(const BoolFn& f);

// Pr[f(x) != f(x ^ e_i)]; restricted coordinates give 0 by contract.
Rational influence_exact(const BoolFn& f, int i);

Rational total_influence_exact(const BoolFn& f);

InfluenceProfile influence_profile_exact(const BoolFn& f);

// m = ceil(ln(2/delta) / (2 tau^2)); InputError unless tau, delta in (0,1).
long long hoeffding_sample_count(double tau, double delta);

// Black-box estimate over m samples; deterministic given seed.
double influence_estimate(const BoolFn& f, int i, double tau, double delta, uint64_t seed);

InfluenceProfile influence_profile_estimated(const BoolFn& f, double tau, double delta,
                                             uint64_t seed);

// Free coordinate maximizing Inf_i(f)/c_i, ties broken by lowest index;
// StateError when no coordinate is free.  Exact mode.
int argmax_cost_weighted_influence(const BoolFn& f, const CostVector& c);

// Estimated mode: one influence_estimate per free coordinate (delta split
// evenly), then the same argmax and tie rule on the estimates.
int argmax_cost_weighted_influence_estimated(const BoolFn& f, const CostVector& c, double tau,
                                             double delta, uint64_t seed);

// Table-level core shared with the strategy implementations: t is a table in
// restrict_dup space, coords maps table variables to original coordinates and
// pinned marks table variables already queried.
int argmax_cwi_table(const TruthTable& t, const std::vector<int>& coords, uint64_t pinned,
                     const CostVector& c);

}  // namespace pricedq
