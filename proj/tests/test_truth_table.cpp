#include "doctest.h"

#include <cstdint>
#include <vector>

#include "pricedq/errors.hpp"
#include "pricedq/rng.hpp"
#include "pricedq/truth_table.hpp"

using namespace pricedq;

namespace {

TruthTable random_table(int vars, Rng& rng) {
  return TruthTable::from_eval(vars, [&](uint64_t) { return rng.below(2) ? +1 : -1; });
}

// Reference implementations by plain loops, independent of the word tricks.
uint64_t ref_diff_count(const TruthTable& t, int v) {
  uint64_t count = 0;
  for (uint64_t x = 0; x < t.size(); ++x)
    if (t.bit(x) != t.bit(x ^ (1ull << v))) ++count;
  return count;
}

TruthTable ref_restrict_dup(const TruthTable& t, int v, int b) {
  return TruthTable::from_eval(t.vars(), [&](uint64_t x) {
    uint64_t y = (x & ~(1ull << v)) | (static_cast<uint64_t>(b) << v);
    return t.value(y);
  });
}

TruthTable ref_drop_var(const TruthTable& t, int v, int b) {
  uint64_t low = (1ull << v) - 1;
  return TruthTable::from_eval(t.vars() - 1, [&](uint64_t y) {
    uint64_t x = (y & low) | ((y & ~low) << 1) | (static_cast<uint64_t>(b) << v);
    return t.value(x);
  });
}

}  // namespace

TEST_CASE("from_eval and bit access") {
  TruthTable t = TruthTable::from_eval(2, [](uint64_t x) { return x == 3 ? +1 : -1; });
  CHECK(t.vars() == 2);
  CHECK(t.size() == 4);
  CHECK(t.count_ones() == 1);
  CHECK(t.value(3) == +1);
  CHECK(t.value(0) == -1);
  CHECK(!t.is_constant());
  t.set_bit(0, true);
  CHECK(t.count_ones() == 2);

  TruthTable c = TruthTable::from_eval(3, [](uint64_t) { return -1; });
  CHECK(c.is_constant());
  TruthTable zero(0);
  CHECK(zero.size() == 1);
  CHECK(zero.is_constant());
}

TEST_CASE("capacity limit") {
  CHECK_NOTHROW(TruthTable(20));
  CHECK_THROWS_AS(TruthTable(21), CapacityError);
  CHECK_THROWS_AS(TruthTable(-1), InputError);
}

TEST_CASE("diff_count matches the reference on random tables") {
  Rng rng(11);
  for (int vars = 1; vars <= 8; ++vars) {
    for (int rep = 0; rep < 8; ++rep) {
      TruthTable t = random_table(vars, rng);
      for (int v = 0; v < vars; ++v) CHECK(t.diff_count(v) == ref_diff_count(t, v));
    }
  }
}

TEST_CASE("restrict_dup matches the reference on random tables") {
  Rng rng(12);
  for (int vars = 1; vars <= 8; ++vars) {
    for (int rep = 0; rep < 8; ++rep) {
      TruthTable t = random_table(vars, rng);
      for (int v = 0; v < vars; ++v)
        for (int b = 0; b < 2; ++b) CHECK(t.restrict_dup(v, b) == ref_restrict_dup(t, v, b));
    }
  }
}

TEST_CASE("restrict_dup keeps the variable count and duplicates halves") {
  Rng rng(13);
  TruthTable t = random_table(7, rng);
  TruthTable r = t.restrict_dup(3, 1);
  CHECK(r.vars() == 7);
  // The restricted variable no longer matters.
  CHECK(r.diff_count(3) == 0);
  // Slot counts double-count each surviving input exactly once per duplicate.
  for (uint64_t x = 0; x < r.size(); ++x) CHECK(r.bit(x) == r.bit(x ^ (1ull << 3)));
}

TEST_CASE("drop_var matches the reference on random tables") {
  Rng rng(14);
  for (int vars = 1; vars <= 8; ++vars) {
    for (int rep = 0; rep < 8; ++rep) {
      TruthTable t = random_table(vars, rng);
      for (int v = 0; v < vars; ++v)
        for (int b = 0; b < 2; ++b) CHECK(t.drop_var(v, b) == ref_drop_var(t, v, b));
    }
  }
}

TEST_CASE("drop_var composes down to single values") {
  Rng rng(15);
  TruthTable t = random_table(6, rng);
  for (uint64_t x = 0; x < t.size(); ++x) {
    TruthTable w = t;
    for (int v = 5; v >= 0; --v) w = w.drop_var(v, static_cast<int>((x >> v) & 1));
    CHECK(w.vars() == 0);
    CHECK(w.value(0) == t.value(x));
  }
}

TEST_CASE("restrict_dup then drop_var agree") {
  Rng rng(16);
  for (int rep = 0; rep < 16; ++rep) {
    int vars = 2 + static_cast<int>(rng.below(6));
    TruthTable t = random_table(vars, rng);
    int v = static_cast<int>(rng.below(static_cast<uint64_t>(vars)));
    int b = static_cast<int>(rng.below(2));
    CHECK(t.restrict_dup(v, b).drop_var(v, 0) == t.drop_var(v, b));
    CHECK(t.restrict_dup(v, b).drop_var(v, 1) == t.drop_var(v, b));
  }
}
