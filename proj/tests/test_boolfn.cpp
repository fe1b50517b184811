#include "doctest.h"

#include <cstdint>
#include <vector>

#include <nlohmann/json.hpp>

#include "pricedq/boolfn.hpp"
#include "pricedq/errors.hpp"
#include "pricedq/rng.hpp"

using namespace pricedq;

namespace {

int popcount_ll(uint64_t x) { return __builtin_popcountll(x); }

bool pointwise_equal(const BoolFn& a, const BoolFn& b) {
  if (a.arity() != b.arity()) return false;
  for (uint64_t x = 0; x < (1ull << a.arity()); ++x)
    if (a.evaluate(x) != b.evaluate(x)) return false;
  return true;
}

}  // namespace

TEST_CASE("cost vector") {
  CostVector c({1, 4, 2});
  CHECK(c.size() == 3);
  CHECK(c.at(1) == 4);
  CHECK(c.total() == 7);
  CHECK(c.min_cost() == 1);
  CHECK(CostVector::unit(4).total() == 4);
  CHECK_THROWS_AS(CostVector({1, 0}), InputError);
  CHECK_THROWS_AS(CostVector(std::vector<long long>{}), InputError);
  CHECK_THROWS_AS(CostVector(std::vector<long long>(65, 1)), InputError);
}

TEST_CASE("restriction overlay") {
  Restriction r;
  r = r.with(2, 1).with(0, 0);
  CHECK(r.count() == 2);
  CHECK(r.restricted(2));
  CHECK(!r.restricted(1));
  CHECK(r.bit(2) == 1);
  CHECK(r.compose(0b010) == 0b110);
  CHECK_THROWS_AS(r.with(2, 0), InputError);
}

TEST_CASE("builtin factories match naive predicates") {
  auto check_fn = [](const BoolFn& f, auto&& ref) {
    for (uint64_t x = 0; x < (1ull << f.arity()); ++x) {
      CAPTURE(x);
      CHECK(f.evaluate(x) == (ref(x) ? +1 : -1));
    }
  };
  check_fn(BoolFn::and_of(3), [](uint64_t x) { return (x & 7) == 7; });
  check_fn(BoolFn::or_of(3), [](uint64_t x) { return (x & 7) != 0; });
  check_fn(BoolFn::parity(4), [](uint64_t x) { return popcount_ll(x) % 2 == 0; });
  check_fn(BoolFn::dictator(3, 1), [](uint64_t x) { return (x >> 1) & 1; });
  check_fn(BoolFn::majority(5), [](uint64_t x) { return popcount_ll(x) >= 3; });
  check_fn(BoolFn::tribes(2, 2),
           [](uint64_t x) { return (x & 3) == 3 || (x & 12) == 12; });
  check_fn(BoolFn::constant(3, +1), [](uint64_t) { return true; });
  // addressing(2): coordinates 0..1 are the address, 2..5 the data bits.
  check_fn(BoolFn::addressing(2), [](uint64_t x) { return (x >> (2 + (x & 3))) & 1; });
}

TEST_CASE("halfspace and intersection") {
  Halfspace h{{1, 1, 1}, 2};
  BoolFn maj = BoolFn::halfspace(3, h);
  CHECK(pointwise_equal(maj, BoolFn::majority(3)));
  // sign(0) := +1: weight sum exactly at theta counts positive.
  BoolFn at = BoolFn::halfspace(2, Halfspace{{1, 1}, 0});
  CHECK(at.evaluate(0) == +1);
  BoolFn inter = BoolFn::intersection(3, {Halfspace{{1, 0, 0}, 1}, Halfspace{{0, 1, 1}, 2}});
  for (uint64_t x = 0; x < 8; ++x)
    CHECK(inter.evaluate(x) == ((x & 1) && (x & 6) == 6 ? +1 : -1));
  CHECK_THROWS_AS(BoolFn::halfspace(2, Halfspace{{1}, 0}), InputError);
}

TEST_CASE("dnf and cnf duals agree") {
  // AND2 as a one-term DNF and as a two-clause CNF.
  BoolFn d = BoolFn::dnf(2, {{1, 2}});
  BoolFn c = BoolFn::cnf_of_dnf_dual(2, {{1}, {2}});
  CHECK(pointwise_equal(d, c));
  CHECK(pointwise_equal(d, BoolFn::and_of(2)));
  // Negative literals.
  BoolFn g = BoolFn::dnf(3, {{1, -2}, {3}});
  for (uint64_t x = 0; x < 8; ++x) {
    bool want = ((x & 1) && !(x & 2)) || (x & 4);
    CHECK(g.evaluate(x) == (want ? +1 : -1));
  }
  CHECK_THROWS_AS(BoolFn::dnf(2, {{3}}), InputError);
  CHECK_THROWS_AS(BoolFn::dnf(2, {{0}}), InputError);
  // Empty DNF is constant -1; a DNF with an empty term is constant +1.
  CHECK(pointwise_equal(BoolFn::dnf(2, {}), BoolFn::constant(2, -1)));
  CHECK(pointwise_equal(BoolFn::dnf(2, {{}}), BoolFn::constant(2, +1)));
}

TEST_CASE("representation pairs agree on all inputs") {
  for (const BoolFn& f : {BoolFn::tribes(2, 2), BoolFn::majority(5), BoolFn::parity(3)}) {
    BoolFn t = BoolFn::from_table(f.to_truth_table());
    CHECK(pointwise_equal(f, t));
  }
}

TEST_CASE("restrict pins coordinates without changing arity") {
  BoolFn f = BoolFn::tribes(2, 2);
  BoolFn r = f.restrict(1, 1);
  CHECK(r.arity() == 4);
  CHECK(r.free_count() == 3);
  CHECK(!r.is_free(1));
  for (uint64_t x = 0; x < 16; ++x) CHECK(r.evaluate(x) == f.evaluate(x | 2));
  CHECK_THROWS_AS(r.restrict(1, 0), InputError);
}

TEST_CASE("restrict commutes exhaustively at n=4") {
  Rng rng(21);
  for (int rep = 0; rep < 10; ++rep) {
    BoolFn f = BoolFn::from_table(
        TruthTable::from_eval(4, [&](uint64_t) { return rng.below(2) ? +1 : -1; }));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        if (i == j) continue;
        for (int bi = 0; bi < 2; ++bi)
          for (int bj = 0; bj < 2; ++bj) {
            BoolFn a = f.restrict(i, bi).restrict(j, bj);
            BoolFn b = f.restrict(j, bj).restrict(i, bi);
            CHECK(pointwise_equal(a, b));
          }
      }
  }
}

TEST_CASE("compact_table selects the consistent half") {
  BoolFn f = BoolFn::tribes(2, 2);
  BoolFn r = f.restrict(0, 1).restrict(3, 0);
  FnTable ft = r.compact_table();
  CHECK(ft.table.vars() == 2);
  CHECK(ft.coords == std::vector<int>{1, 2});
  CHECK(ft.var_of(1) == 0);
  CHECK(ft.var_of(2) == 1);
  CHECK(ft.var_of(0) == -1);
  for (uint64_t y = 0; y < 4; ++y) {
    uint64_t x = 1 | ((y & 1) << 1) | ((y & 2) << 1);
    CHECK(ft.table.value(y) == f.evaluate(x));
  }
  // Unrestricted tables come back verbatim.
  TruthTable t = BoolFn::parity(3).to_truth_table();
  CHECK(t.vars() == 3);
  CHECK(t.value(0) == +1);
  CHECK(t.value(1) == -1);
}

TEST_CASE("from_tree evaluates like the tree") {
  StrategyTree tree = StrategyTree::internal(
      0, StrategyTree::leaf(-1),
      StrategyTree::internal(1, StrategyTree::leaf(-1), StrategyTree::leaf(+1)));
  BoolFn f = BoolFn::from_tree(2, tree);
  CHECK(pointwise_equal(f, BoolFn::and_of(2)));
}

TEST_CASE("spec documents parse") {
  BoolFn and2 = BoolFn::parse_spec(R"({"kind":"dnf","n":2,"terms":[[1,2]]})");
  CHECK(pointwise_equal(and2, BoolFn::and_of(2)));
  BoolFn maj3 = BoolFn::parse_spec(R"({"kind":"halfspace","n":3,"w":[1,1,1],"theta":2})");
  CHECK(pointwise_equal(maj3, BoolFn::majority(3)));
  BoolFn par4 = BoolFn::parse_spec(R"({"kind":"parity","n":4})");
  CHECK(pointwise_equal(par4, BoolFn::parity(4)));
  BoolFn tab = BoolFn::parse_spec(R"({"kind":"table","n":2,"bits":"8"})");
  CHECK(pointwise_equal(tab, BoolFn::and_of(2)));
  BoolFn trib = BoolFn::parse_spec(R"({"kind":"tribes","n":4,"width":2,"count":2})");
  CHECK(pointwise_equal(trib, BoolFn::tribes(2, 2)));
  BoolFn dict = BoolFn::parse_spec(R"({"kind":"dictator","n":3,"i":2})");
  CHECK(pointwise_equal(dict, BoolFn::dictator(3, 1)));
  BoolFn tree = BoolFn::parse_spec(
      R"({"kind":"tree","n":2,"tree":{"q":1,"0":{"out":-1},"1":{"q":2,"0":{"out":-1},"1":{"out":1}}}})");
  CHECK(pointwise_equal(tree, BoolFn::and_of(2)));
}

TEST_CASE("restriction overlay round-trips through JSON") {
  BoolFn f = BoolFn::tribes(2, 2).restrict(1, 1).restrict(2, 0);
  BoolFn back = BoolFn::parse_spec(f.serialize());
  CHECK(back.arity() == 4);
  CHECK(back.restriction() == f.restriction());
  CHECK(pointwise_equal(back, f));
}

TEST_CASE("serialize round-trips every kind") {
  std::vector<BoolFn> fns = {
      BoolFn::constant(3, +1),
      BoolFn::constant(2, -1),
      BoolFn::from_table(BoolFn::tribes(2, 2).to_truth_table()),
      BoolFn::dnf(3, {{1, -2}, {3}}),
      BoolFn::cnf_of_dnf_dual(2, {{1}, {2}}),
      BoolFn::halfspace(3, Halfspace{{2, -1, 1}, 1}),
      BoolFn::intersection(3, {Halfspace{{1, 1, 0}, 1}, Halfspace{{0, 1, 1}, 2}}),
      BoolFn::parity(5),
      BoolFn::dictator(4, 2),
      BoolFn::majority(5),
      BoolFn::tribes(3, 2),
      BoolFn::addressing(2),
      BoolFn::from_tree(2, StrategyTree::internal(0, StrategyTree::leaf(-1),
                                                  StrategyTree::leaf(+1))),
  };
  for (const BoolFn& f : fns) {
    CAPTURE(f.kind());
    BoolFn back = BoolFn::parse_spec(f.serialize());
    CHECK(pointwise_equal(back, f));
  }
}

TEST_CASE("table hex encoding is little-endian nibbles") {
  BoolFn f = BoolFn::from_table(BoolFn::and_of(2).to_truth_table());
  auto doc = nlohmann::json::parse(f.serialize());
  CHECK(doc["kind"] == "table");
  CHECK(doc["n"] == 2);
  CHECK(doc["bits"] == "8");
  BoolFn t16 = BoolFn::from_table(BoolFn::tribes(2, 2).to_truth_table());
  auto doc2 = nlohmann::json::parse(t16.serialize());
  CHECK(doc2["bits"] == "888f");
}

TEST_CASE("constants serialize as degenerate DNFs") {
  auto plus = nlohmann::json::parse(BoolFn::constant(2, +1).serialize());
  CHECK(plus["kind"] == "dnf");
  CHECK(plus["terms"] == nlohmann::json::array({nlohmann::json::array()}));
  auto minus = nlohmann::json::parse(BoolFn::constant(2, -1).serialize());
  CHECK(minus["terms"] == nlohmann::json::array());
}

TEST_CASE("parse errors carry locations") {
  CHECK_THROWS_AS(BoolFn::parse_spec("not json"), ParseError);
  CHECK_THROWS_AS(BoolFn::parse_spec(R"({"kind":"nope","n":2})"), ParseError);
  CHECK_THROWS_AS(BoolFn::parse_spec(R"({"kind":"dnf","n":2,"terms":[[3]]})"), ParseError);
  CHECK_THROWS_AS(BoolFn::parse_spec(R"({"kind":"parity"})"), ParseError);
  CHECK_THROWS_AS(BoolFn::parse_spec(R"({"kind":"table","n":2,"bits":"z"})"), ParseError);
  CHECK_THROWS_AS(BoolFn::parse_spec(R"({"kind":"table","n":2,"bits":"88"})"), ParseError);
  try {
    BoolFn::parse_spec(R"({"kind":"dnf","n":2,"terms":[[1],[7]]})");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(!e.location().empty());
  }
}

TEST_CASE("callback functions evaluate but do not serialize") {
  BoolFn f = BoolFn::callback(3, [](uint64_t x) { return popcount_ll(x) == 1 ? +1 : -1; });
  CHECK(f.evaluate(2) == +1);
  CHECK(f.evaluate(3) == -1);
  CHECK_THROWS_AS(f.serialize(), InputError);
  FnTable ft = f.compact_table();
  CHECK(ft.table.count_ones() == 3);
}
