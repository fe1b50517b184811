#include "pricedq/truth_table.hpp"

#include <bit>

namespace pricedq {

namespace {

// Bits whose index has a 0 at position v, for v < 6.
constexpr uint64_t kNegMask[6] = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
    0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull,
};

size_t word_count(int vars) { return vars <= 6 ? 1 : size_t{1} << (vars - 6); }

}  // namespace

TruthTable::TruthTable(int vars) : vars_(vars) {
  if (vars < 0) throw InputError("negative variable count");
  if (vars > 20) throw CapacityError("truth table limited to 20 variables");
  words_.assign(word_count(vars), 0);
}

void TruthTable::check_var(int v) const {
  if (v < 0 || v >= vars_) throw InputError("variable index out of range");
}

void TruthTable::set_bit(uint64_t x, bool v) {
  if (x >= size()) throw InputError("input index out of range");
  if (v)
    words_[x >> 6] |= 1ull << (x & 63);
  else
    words_[x >> 6] &= ~(1ull << (x & 63));
}

uint64_t TruthTable::count_ones() const {
  uint64_t n = 0;
  for (uint64_t w : words_) n += std::popcount(w);
  return n;
}

bool TruthTable::is_constant() const {
  uint64_t n = count_ones();
  return n == 0 || n == size();
}

uint64_t TruthTable::diff_count(int v) const {
  check_var(v);
  uint64_t acc = 0;
  if (v >= 6) {
    size_t stride = size_t{1} << (v - 6);
    for (size_t j = 0; j < words_.size(); ++j)
      if (!(j & stride)) acc += std::popcount(words_[j] ^ words_[j | stride]);
  } else {
    int s = 1 << v;
    for (uint64_t w : words_) acc += std::popcount((w ^ (w >> s)) & kNegMask[v]);
  }
  return 2 * acc;
}

TruthTable TruthTable::restrict_dup(int v, int b) const {
  check_var(v);
  if (b != 0 && b != 1) throw InputError("restriction bit must be 0 or 1");
  TruthTable out(vars_);
  if (v >= 6) {
    size_t stride = size_t{1} << (v - 6);
    for (size_t j = 0; j < words_.size(); ++j)
      out.words_[j] = words_[b ? (j | stride) : (j & ~stride)];
  } else {
    int s = 1 << v;
    for (size_t j = 0; j < words_.size(); ++j) {
      uint64_t h = b ? (words_[j] & ~kNegMask[v]) : (words_[j] & kNegMask[v]);
      out.words_[j] = b ? (h | (h >> s)) : (h | (h << s));
    }
  }
  return out;
}

TruthTable TruthTable::drop_var(int v, int b) const {
  check_var(v);
  if (b != 0 && b != 1) throw InputError("restriction bit must be 0 or 1");
  if (vars_ == 0) throw InputError("cannot drop from a 0-variable table");
  TruthTable out(vars_ - 1);
  if (v >= 6) {
    size_t stride = size_t{1} << (v - 6);
    for (size_t j = 0; j < out.words_.size(); ++j) {
      size_t low = j & (stride - 1);
      size_t high = (j & ~(stride - 1)) << 1;
      out.words_[j] = words_[high | low | (b ? stride : 0)];
    }
  } else {
    int s = 1 << v;
    auto compact = [&](uint64_t w) {
      uint64_t y = b ? ((w >> s) & kNegMask[v]) : (w & kNegMask[v]);
      for (int t = v; t < 5; ++t) y = (y | (y >> (1 << t))) & kNegMask[t + 1];
      return y;  // kept entries in the low 32 bits
    };
    if (words_.size() == 1) {
      out.words_[0] = compact(words_[0]);
    } else {
      for (size_t j = 0; j < out.words_.size(); ++j)
        out.words_[j] = compact(words_[2 * j]) | (compact(words_[2 * j + 1]) << 32);
    }
  }
  return out;
}

}  // namespace pricedq
