#include "doctest.h"

#include <cmath>

#include "pricedq/boolfn.hpp"
#include "pricedq/errors.hpp"
#include "pricedq/influence.hpp"
#include "pricedq/rng.hpp"

using namespace pricedq;

TEST_CASE("bias of the standard functions") {
  CHECK(bias_exact(BoolFn::and_of(2)) == Rational(1, 4));
  CHECK(bias_exact(BoolFn::parity(3)) == Rational(1, 2));
  CHECK(bias_exact(BoolFn::tribes(2, 2)) == Rational(7, 16));
  CHECK(bias_exact(BoolFn::constant(3, +1)) == Rational(0));
  CHECK(bias_exact(BoolFn::majority(3)) == Rational(1, 2));
}

TEST_CASE("sign of expectation breaks ties positive") {
  CHECK(sign_of_expectation(BoolFn::parity(2)) == +1);
  CHECK(sign_of_expectation(BoolFn::and_of(2)) == -1);
  CHECK(sign_of_expectation(BoolFn::or_of(2)) == +1);
  CHECK(sign_of_expectation(BoolFn::tribes(2, 2)) == -1);
}

TEST_CASE("influence of the standard functions") {
  CHECK(influence_exact(BoolFn::and_of(2), 0) == Rational(1, 2));
  CHECK(influence_exact(BoolFn::dictator(3, 0), 1) == Rational(0));
  CHECK(influence_exact(BoolFn::dictator(3, 0), 0) == Rational(1));
  for (int i = 0; i < 4; ++i) CHECK(influence_exact(BoolFn::tribes(2, 2), i) == Rational(3, 8));
  for (int i = 0; i < 3; ++i) CHECK(influence_exact(BoolFn::parity(3), i) == Rational(1));
  for (int i = 0; i < 3; ++i) CHECK(influence_exact(BoolFn::majority(3), i) == Rational(1, 2));
}

TEST_CASE("total influence and profile") {
  CHECK(total_influence_exact(BoolFn::parity(5)) == Rational(5));
  CHECK(total_influence_exact(BoolFn::majority(3)) == Rational(3, 2));
  CHECK(total_influence_exact(BoolFn::tribes(2, 2)) == Rational(3, 2));
  CHECK(total_influence_exact(BoolFn::constant(4, -1)) == Rational(0));

  InfluenceProfile p = influence_profile_exact(BoolFn::tribes(2, 2));
  CHECK(p.exact);
  Rational sum;
  for (const Rational& v : p.per_coordinate) sum += v;
  CHECK(sum == p.total);
}

TEST_CASE("restricted coordinates have influence zero") {
  BoolFn f = BoolFn::tribes(2, 2).restrict(0, 1);
  CHECK(influence_exact(f, 0) == Rational(0));
  // With x1 pinned to 1 the function is x2 or (x3 and x4); flipping x2
  // matters unless the second tribe fires, so 3/4.
  CHECK(influence_exact(f, 1) == Rational(3, 4));
  InfluenceProfile p = influence_profile_exact(f);
  CHECK(p.per_coordinate[0] == Rational(0));
}

TEST_CASE("hoeffding sample count") {
  // ceil(ln(2/0.05) / (2 * 0.05^2)) = ceil(737.78) = 738.
  CHECK(hoeffding_sample_count(0.05, 0.05) == 738);
  CHECK(hoeffding_sample_count(0.0125, 0.05) == 11805);
  CHECK_THROWS_AS(hoeffding_sample_count(0, 0.05), InputError);
  CHECK_THROWS_AS(hoeffding_sample_count(0.05, 1.0), InputError);
}

TEST_CASE("influence estimates are seeded and close") {
  BoolFn f = BoolFn::and_of(2);
  double a = influence_estimate(f, 0, 0.05, 0.05, 42);
  double b = influence_estimate(f, 0, 0.05, 0.05, 42);
  CHECK(a == b);
  CHECK(std::abs(a - 0.5) <= 0.05);
  double c = influence_estimate(f, 0, 0.05, 0.05, 43);
  CHECK(std::abs(c - 0.5) <= 0.05);

  InfluenceProfile p = influence_profile_estimated(BoolFn::tribes(2, 2), 0.05, 0.05, 7);
  CHECK(!p.exact);
  CHECK(p.tau == 0.05);
  for (const Rational& v : p.per_coordinate)
    CHECK(std::abs(v.to_double() - 0.375) <= 0.05);
}

TEST_CASE("cost-weighted argmax prefers cheap influence, ties to low index") {
  BoolFn f = BoolFn::and_of(2);
  CHECK(argmax_cost_weighted_influence(f, CostVector::unit(2)) == 0);
  CHECK(argmax_cost_weighted_influence(f, CostVector({1, 4})) == 0);
  CHECK(argmax_cost_weighted_influence(f, CostVector({4, 1})) == 1);
  // Equal scores everywhere: the lowest index wins.
  CHECK(argmax_cost_weighted_influence(BoolFn::parity(3), CostVector::unit(3)) == 0);
  // The callback path compacts to a table before scoring.
  BoolFn g = BoolFn::callback(2, [](uint64_t x) { return x == 3 ? +1 : -1; });
  CHECK(argmax_cost_weighted_influence(g, CostVector({4, 4})) == 0);

  BoolFn pinned = BoolFn::and_of(2).restrict(0, 1).restrict(1, 0);
  CHECK_THROWS_AS(argmax_cost_weighted_influence(pinned, CostVector::unit(2)), StateError);

  // Restricted coordinates never win.
  BoolFn r = BoolFn::parity(3).restrict(0, 1);
  CHECK(argmax_cost_weighted_influence(r, CostVector({1, 5, 7})) == 1);

  CHECK(argmax_cost_weighted_influence_estimated(f, CostVector({1, 4}), 0.05, 0.05, 5) == 0);
}
