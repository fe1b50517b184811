#pragma once

#include <cstdint>
#include <initializer_list>

#include "pricedq/rational.hpp"

namespace pricedq {

// All randomness flows from one user seed through named sub-streams, so results
// are reproducible and independent of evaluation order.  Streams are derived by
// hashing (seed, tag...) with splitmix64.
inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Stream tags; combine with run/trial indices for finer derivation.
enum : uint64_t {
  kStreamInfluence = 1,
  kStreamInput = 2,
  kStreamLottery = 3,
  kStreamCorpus = 4,
  kStreamTree = 5,
  kStreamCosts = 6,
};

inline uint64_t derive_seed(uint64_t seed, std::initializer_list<uint64_t> tags) {
  uint64_t h = splitmix64(seed ^ 0x6a09e667f3bcc909ull);
  for (uint64_t t : tags) h = splitmix64(h ^ t);
  return h;
}

class Rng {
public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    uint64_t x = state_;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
  }

  // Uniform value in [0, bound), unbiased via rejection.
  uint64_t below(uint64_t bound) {
    if (bound <= 1) return 0;
    uint64_t threshold = -bound % bound;
    for (;;) {
      uint64_t r = next_u64();
      if (r >= threshold) return r % bound;
    }
  }

  long long range(long long lo, long long hi) {  // inclusive bounds
    return lo + static_cast<long long>(below(static_cast<uint64_t>(hi - lo + 1)));
  }

  // Uniform n-bit input mask, n <= 64.
  uint64_t input_mask(int n) {
    uint64_t r = next_u64();
    return n >= 64 ? r : r & ((1ull << n) - 1);
  }

  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Exact Bernoulli(p) for rational p in [0,1]: draws u uniform over 2^64 and
  // compares u * den < num * 2^64 without rounding.
  bool bernoulli(const Rational& p) {
    if (p.num() <= 0) return false;
    if (p.num() >= p.den()) return true;
    unsigned __int128 lhs = static_cast<unsigned __int128>(next_u64()) *
                            static_cast<unsigned __int128>(p.den());
    unsigned __int128 rhs = static_cast<unsigned __int128>(p.num()) << 64;
    return lhs < rhs;
  }

private:
  uint64_t state_;
};

}  // namespace pricedq
