#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "pricedq/errors.hpp"
#include "pricedq/strategy_tree.hpp"
#include "pricedq/truth_table.hpp"

namespace pricedq {

// Per-coordinate query prices; every entry is a positive integer.
class CostVector {
public:
  CostVector() = default;
  explicit CostVector(std::vector<long long> costs);
  static CostVector unit(int n);

  int size() const { return static_cast<int>(c_.size()); }
  long long at(int i) const;
  long long total() const;
  long long min_cost() const;
  const std::vector<long long>& values() const { return c_; }

private:
  std::vector<long long> c_;
};

// Partial assignment over up to 64 coordinates, stored as (mask, values).
class Restriction {
public:
  Restriction() = default;
  Restriction(uint64_t mask, uint64_t values);

  bool restricted(int i) const { return (mask_ >> i) & 1; }
  int bit(int i) const;
  Restriction with(int i, int b) const;  // InputError if i is already pinned
  int count() const;
  uint64_t mask() const { return mask_; }
  uint64_t values() const { return values_; }
  // Overwrites the pinned positions of x with the pinned values.
  uint64_t compose(uint64_t x) const { return (x & ~mask_) | values_; }

  friend bool operator==(const Restriction&, const Restriction&) = default;

private:
  uint64_t mask_ = 0;
  uint64_t values_ = 0;
};

// f(x) = sign(w . x - theta) with sign(0) := +1; x entries are 0/1 bits.
struct Halfspace {
  std::vector<long long> w;
  long long theta = 0;
};

// Truth table over the free coordinates of a function, together with the map
// from table variable to original coordinate (ascending).
struct FnTable {
  TruthTable table;
  std::vector<int> coords;
  int var_of(int coordinate) const;  // -1 when the coordinate is not free
};

// Boolean function {0,1}^n -> {-1,+1}.  Inputs are n-bit masks with
// coordinate i at bit i.  Restrictions are carried as an overlay: evaluation
// ignores the pinned positions of x, and arity never changes.  Instances are
// cheap to copy (shared immutable representation).
class BoolFn {
public:
  struct Repr;  // internal representation, defined in src/fn_repr.hpp

  BoolFn() = default;

  static BoolFn constant(int n, int sign);
  static BoolFn from_table(TruthTable table);
  // Terms/clauses hold signed 1-based literals: +j means x_j, -j means its negation.
  static BoolFn dnf(int n, std::vector<std::vector<int>> terms);
  static BoolFn cnf_of_dnf_dual(int n, std::vector<std::vector<int>> clauses);
  static BoolFn halfspace(int n, Halfspace h);
  static BoolFn intersection(int n, std::vector<Halfspace> hs);
  static BoolFn parity(int n);
  static BoolFn dictator(int n, int coordinate);
  static BoolFn majority(int n);  // n odd
  static BoolFn tribes(int width, int count);
  static BoolFn and_of(int n);
  static BoolFn or_of(int n);
  static BoolFn addressing(int address_bits);  // n = k + 2^k, f = data[address]
  static BoolFn from_tree(int n, const StrategyTree& tree);
  static BoolFn callback(int n, std::function<int(uint64_t)> eval,
                         std::string label = "callback");

  bool valid() const { return repr_ != nullptr; }
  int arity() const;
  const std::string& kind() const;
  const Restriction& restriction() const { return restriction_; }
  int free_count() const { return arity() - restriction_.count(); }
  bool is_free(int i) const;

  int evaluate(uint64_t x) const;  // +1 or -1
  BoolFn restrict(int i, int b) const;
  BoolFn with_restriction(const Restriction& r) const;

  // Compacted table over free coordinates; CapacityError beyond 20 free.
  FnTable compact_table() const;
  TruthTable to_truth_table() const { return compact_table().table; }

  // Function-spec JSON (see README); ParseError on malformed input.
  std::string serialize() const;
  static BoolFn parse_spec(const std::string& text);

private:
  explicit BoolFn(std::shared_ptr<const Repr> repr) : repr_(std::move(repr)) {}

  std::shared_ptr<const Repr> repr_;
  Restriction restriction_;
};

}  // namespace pricedq
