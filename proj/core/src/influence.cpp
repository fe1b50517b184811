#include "pricedq/influence.hpp"

#include <cmath>

#include "pricedq/rng.hpp"

namespace pricedq {

Rational bias_exact(const BoolFn& f) {
  TruthTable t = f.to_truth_table();
  long long ones = static_cast<long long>(t.count_ones());
  long long size = static_cast<long long>(t.size());
  return Rational(std::min(ones, size - ones), size);
}

int sign_of_expectation(const BoolFn& f) {
  TruthTable t = f.to_truth_table();
  return 2 * t.count_ones() >= t.size() ? +1 : -1;
}

Rational influence_exact(const BoolFn& f, int i) {
  if (i < 0 || i >= f.arity()) throw InputError("coordinate out of range");
  if (f.restriction().restricted(i)) return Rational(0);
  FnTable ft = f.compact_table();
  int v = ft.var_of(i);
  return Rational(static_cast<long long>(ft.table.diff_count(v)),
                  static_cast<long long>(ft.table.size()));
}

Rational total_influence_exact(const BoolFn& f) {
  FnTable ft = f.compact_table();
  long long acc = 0;
  for (int v = 0; v < ft.table.vars(); ++v)
    acc += static_cast<long long>(ft.table.diff_count(v));
  return Rational(acc, static_cast<long long>(ft.table.size()));
}

InfluenceProfile influence_profile_exact(const BoolFn& f) {
  FnTable ft = f.compact_table();
  InfluenceProfile p;
  p.per_coordinate.assign(f.arity(), Rational(0));
  for (int v = 0; v < ft.table.vars(); ++v) {
    Rational inf(static_cast<long long>(ft.table.diff_count(v)),
                 static_cast<long long>(ft.table.size()));
    p.per_coordinate[ft.coords[v]] = inf;
    p.total += inf;
  }
  return p;
}

long long hoeffding_sample_count(double tau, double delta) {
  if (!(tau > 0 && tau < 1) || !(delta > 0 && delta < 1))
    throw InputError("tau and delta must lie in (0,1)");
  return static_cast<long long>(std::ceil(std::log(2.0 / delta) / (2.0 * tau * tau)));
}

double influence_estimate(const BoolFn& f, int i, double tau, double delta, uint64_t seed) {
  if (i < 0 || i >= f.arity()) throw InputError("coordinate out of range");
  long long m = hoeffding_sample_count(tau, delta);
  Rng rng(derive_seed(seed, {kStreamInfluence, static_cast<uint64_t>(i)}));
  long long flips = 0;
  int n = f.arity();
  for (long long t = 0; t < m; ++t) {
    uint64_t x = rng.input_mask(n);
    if (f.evaluate(x) != f.evaluate(x ^ (1ull << i))) ++flips;
  }
  return static_cast<double>(flips) / static_cast<double>(m);
}

InfluenceProfile influence_profile_estimated(const BoolFn& f, double tau, double delta,
                                             uint64_t seed) {
  InfluenceProfile p;
  p.exact = false;
  p.tau = tau;
  p.delta = delta;
  p.per_coordinate.assign(f.arity(), Rational(0));
  p.total = Rational(0);
  for (int i = 0; i < f.arity(); ++i) {
    if (!f.is_free(i)) continue;
    double est = influence_estimate(f, i, tau, delta, derive_seed(seed, {kStreamInfluence, 0x70f, static_cast<uint64_t>(i)}));
    p.per_coordinate[i] = Rational::from_double(est);
    p.total += p.per_coordinate[i];
  }
  return p;
}

int argmax_cwi_table(const TruthTable& t, const std::vector<int>& coords, uint64_t pinned,
                     const CostVector& c) {
  int best = -1;
  long long best_diff = 0;
  long long best_cost = 1;
  for (int v = 0; v < t.vars(); ++v) {
    if ((pinned >> v) & 1) continue;
    long long diff = static_cast<long long>(t.diff_count(v));
    long long cost = c.at(coords[v]);
    if (best < 0 || static_cast<__int128>(diff) * best_cost >
                        static_cast<__int128>(best_diff) * cost) {
      best = v;
      best_diff = diff;
      best_cost = cost;
    }
  }
  if (best < 0) throw StateError("no free coordinate for argmax");
  return best;
}

int argmax_cost_weighted_influence(const BoolFn& f, const CostVector& c) {
  if (c.size() != f.arity()) throw InputError("cost vector size must equal arity");
  FnTable ft = f.compact_table();
  if (ft.coords.empty()) throw StateError("no free coordinate for argmax");
  return ft.coords[argmax_cwi_table(ft.table, ft.coords, 0, c)];
}

int argmax_cost_weighted_influence_estimated(const BoolFn& f, const CostVector& c, double tau,
                                             double delta, uint64_t seed) {
  if (c.size() != f.arity()) throw InputError("cost vector size must equal arity");
  int free = f.free_count();
  if (free == 0) throw StateError("no free coordinate for argmax");
  int best = -1;
  double best_ratio = -1;
  for (int i = 0; i < f.arity(); ++i) {
    if (!f.is_free(i)) continue;
    double est = influence_estimate(f, i, tau, delta / free,
                                    derive_seed(seed, {kStreamInfluence, static_cast<uint64_t>(i)}));
    double ratio = est / static_cast<double>(c.at(i));
    if (ratio > best_ratio) {
      best = i;
      best_ratio = ratio;
    }
  }
  return best;
}

}  // namespace pricedq
