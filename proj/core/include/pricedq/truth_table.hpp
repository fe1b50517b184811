#pragma once

#include <cstdint>
#include <vector>

#include "pricedq/errors.hpp"

namespace pricedq {

// Truth table over {0,1}^vars packed 64 entries per word, bit x set <=> value +1.
// Coordinate i corresponds to bit i of the input index (coordinate 0 is the LSB).
// Supports up to 20 variables; unused high bits of the last word stay zero.
class TruthTable {
public:
  TruthTable() = default;
  explicit TruthTable(int vars);

  template <typename Eval>  // Eval: uint64_t -> int (+1/-1)
  static TruthTable from_eval(int vars, Eval&& eval) {
    TruthTable t(vars);
    for (uint64_t x = 0; x < t.size(); ++x)
      if (eval(x) > 0) t.words_[x >> 6] |= 1ull << (x & 63);
    return t;
  }

  int vars() const { return vars_; }
  uint64_t size() const { return 1ull << vars_; }
  const std::vector<uint64_t>& words() const { return words_; }

  bool bit(uint64_t x) const { return (words_[x >> 6] >> (x & 63)) & 1; }
  void set_bit(uint64_t x, bool v);
  int value(uint64_t x) const { return bit(x) ? +1 : -1; }

  uint64_t count_ones() const;
  bool is_constant() const;

  // Number of inputs x with f(x) != f(x ^ e_v); always even.
  uint64_t diff_count(int v) const;

  // Restriction x_v := b keeping the same variable count: the chosen half is
  // duplicated into both halves, so downstream diff_count(v) becomes 0 and
  // counts stay proportional across restrictions.
  TruthTable restrict_dup(int v, int b) const;

  // Compacting restriction: drops variable v, producing a table on vars-1
  // variables (variables above v shift down by one).
  TruthTable drop_var(int v, int b) const;

  friend bool operator==(const TruthTable&, const TruthTable&) = default;

private:
  void check_var(int v) const;

  int vars_ = 0;
  std::vector<uint64_t> words_{0};
};

}  // namespace pricedq
