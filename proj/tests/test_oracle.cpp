#include "doctest.h"

#include "pricedq/boolfn.hpp"
#include "pricedq/errors.hpp"
#include "pricedq/oracle.hpp"
#include "pricedq/rng.hpp"
#include "pricedq/strategy.hpp"

using namespace pricedq;

TEST_CASE("optimal cost of AND2 under unit costs") {
  BoolFn f = BoolFn::and_of(2);
  CostVector c = CostVector::unit(2);
  OptResult e = opt_expected(f, c, 0);
  CHECK(e.value == Rational(3, 2));
  CHECK(!e.worst_objective);
  OptResult w = opt_worst(f, c, 0);
  CHECK(w.value == Rational(2));
  CHECK(w.worst_objective);
}

TEST_CASE("optimal cost of AND2 under costs (1,4)") {
  BoolFn f = BoolFn::and_of(2);
  CostVector c({1, 4});
  CHECK(opt_expected(f, c, 0).value == Rational(3));
  CHECK(opt_worst(f, c, 0).value == Rational(5));
}

TEST_CASE("error budgets buy cheaper trees") {
  BoolFn f = BoolFn::and_of(2);
  CostVector c = CostVector::unit(2);
  // One tolerated mistake lets a constant -1 leaf win outright.
  OptResult r = opt_expected(f, c, 1);
  CHECK(r.value == Rational(0));
  CHECK(r.error_budget == 1);
  CHECK(r.witness.root()->is_leaf());
  CHECK(opt_worst(f, c, 1).value == Rational(0));
}

TEST_CASE("error_budget_for floors eps over the free cube") {
  CHECK(error_budget_for(Rational(1, 10), 2) == 0);
  CHECK(error_budget_for(Rational(1, 4), 2) == 1);
  CHECK(error_budget_for(Rational(1, 2), 3) == 4);
  CHECK(error_budget_for(Rational(3, 10), 4) == 4);
  CHECK(error_budget_for(Rational(0), 5) == 0);
}

TEST_CASE("witness trees reproduce the optimal value") {
  Rng rng(301);
  for (int rep = 0; rep < 20; ++rep) {
    int n = 2 + static_cast<int>(rng.below(3));
    BoolFn f = BoolFn::from_table(TruthTable::from_eval(
        n, [&](uint64_t) { return rng.below(2) ? 1 : -1; }));
    std::vector<long long> cv;
    for (int i = 0; i < n; ++i) cv.push_back(1 + static_cast<long long>(rng.below(5)));
    CostVector c(cv);
    for (long long k : {0LL, 1LL}) {
      OptResult e = opt_expected(f, c, k);
      ExactStats se = strategy_stats_exact(e.witness, f, c);
      CHECK(se.expected_cost == e.value);
      CHECK(se.misclassified(n) <= k);
      OptResult w = opt_worst(f, c, k);
      ExactStats sw = strategy_stats_exact(w.witness, f, c);
      CHECK(sw.worst_cost == w.value);
      CHECK(sw.misclassified(n) <= k);
      // No tree can beat the optimum on either objective.
      CHECK(se.worst_cost >= w.value);
      CHECK(sw.expected_cost >= e.value);
    }
  }
}

TEST_CASE("optimal values decrease with the error budget") {
  BoolFn f = BoolFn::tribes(2, 2);
  CostVector c({2, 1, 3, 1});
  Rational prev_e, prev_w;
  for (long long k = 0; k <= 8; ++k) {
    Rational ve = opt_expected(f, c, k).value;
    Rational vw = opt_worst(f, c, k).value;
    if (k > 0) {
      CHECK(ve <= prev_e);
      CHECK(vw <= prev_w);
    }
    CHECK(ve <= vw);
    prev_e = ve;
    prev_w = vw;
  }
  // Half the inputs misclassified means a constant leaf suffices.
  CHECK(opt_expected(f, c, 8).value == Rational(0));
}

TEST_CASE("restrictions shrink the DP to the free cube") {
  BoolFn f = BoolFn::tribes(2, 2);
  BoolFn g = f.restrict(0, 1);  // x1=1: f = x2 or (x3 and x4)
  CostVector c = CostVector::unit(4);
  OptResult r = opt_expected(g, c, 0);
  // Query x2; when it is 0 the AND pair costs 3/2 more on average.
  CHECK(r.value == Rational(7, 4));
  ExactStats st = strategy_stats_exact(r.witness, g, c);
  CHECK(st.error == Rational(0));
  CHECK(st.expected_cost == Rational(7, 4));
}

TEST_CASE("exact stats match a hand check on a fixed tree") {
  BoolFn f = BoolFn::and_of(2);
  CostVector c({1, 4});
  StrategyTree tree = StrategyTree::internal(
      1, StrategyTree::leaf(-1),
      StrategyTree::internal(0, StrategyTree::leaf(-1), StrategyTree::leaf(+1)));
  ExactStats st = strategy_stats_exact(tree, f, c);
  CHECK(st.error == Rational(0));
  CHECK(st.expected_cost == Rational(9, 2));  // 4 + half of 1
  CHECK(st.worst_cost == Rational(5));
  CHECK(st.delta[0] == Rational(1, 2));
  CHECK(st.delta[1] == Rational(1));
  CHECK(st.misclassified(2) == 0);
  // Average leaf influence is zero: every leaf pins both coordinates.
  CHECK(st.avg_influence == Rational(0));
}

TEST_CASE("single-leaf stats expose the whole influence") {
  BoolFn f = BoolFn::parity(3);
  CostVector c = CostVector::unit(3);
  ExactStats st = strategy_stats_exact(StrategyTree::leaf(+1), f, c);
  CHECK(st.error == Rational(1, 2));
  CHECK(st.expected_cost == Rational(0));
  CHECK(st.avg_influence == Rational(3));
}

TEST_CASE("capacity limits are enforced") {
  CostVector c15 = CostVector::unit(15);
  CHECK_THROWS_AS(opt_expected(BoolFn::parity(15), c15, 0), CapacityError);
  CostVector c11 = CostVector::unit(11);
  CHECK_THROWS_AS(opt_expected(BoolFn::parity(11), c11, 1), CapacityError);
  CHECK_THROWS_AS(opt_worst(BoolFn::parity(11), c11, 1), CapacityError);
  CHECK_THROWS_AS(opt_expected(BoolFn::parity(2), CostVector::unit(2), -1), InputError);
  // At the k>0 limit of ten free coordinates the DP still runs.
  BoolFn wide = BoolFn::dictator(10, 0);
  CHECK(opt_expected(wide, CostVector::unit(10), 1).value == Rational(1));
}

TEST_CASE("parity needs every coordinate") {
  BoolFn f = BoolFn::parity(4);
  CostVector c({1, 2, 3, 4});
  CHECK(opt_expected(f, c, 0).value == Rational(10));
  CHECK(opt_worst(f, c, 0).value == Rational(10));
  // Tolerating one mistake still forces nearly-full evaluation.
  CHECK(opt_worst(f, c, 1).value == Rational(10));
}
