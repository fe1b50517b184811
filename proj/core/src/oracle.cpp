#include "pricedq/oracle.hpp"

#include <limits>

namespace pricedq {

namespace {

constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

// DP over subcubes of the free cube.  States are indexed in base 3: digit j of
// the index is 0 when table variable j is free, 1 when pinned to 0, 2 when
// pinned to 1.  Values are integers: for the worst-case objective the cost
// itself, for the expected objective the cost scaled by 2^(free vars of the
// state), which keeps the recursion integral.
struct OptDp {
  int m;
  bool worst;
  long long k;
  std::vector<long long> pow3;
  std::vector<long long> cost;  // per table variable
  std::vector<int> coords;      // table variable -> original coordinate
  std::vector<long long> value;
  std::vector<int32_t> decision;  // -1 stop, else v * (k+1) + k0
  std::vector<uint8_t> done;

  OptDp(int m_, bool worst_, long long k_) : m(m_), worst(worst_), k(k_) {
    pow3.resize(m + 1);
    pow3[0] = 1;
    for (int j = 1; j <= m; ++j) pow3[j] = pow3[j - 1] * 3;
    size_t states = static_cast<size_t>(pow3[m]) * static_cast<size_t>(k + 1);
    if (states > (size_t{1} << 26))
      throw CapacityError("oracle state space too large (3^free * (k+1) states)");
    value.assign(states, 0);
    decision.assign(states, -1);
    done.assign(states, 0);
  }

  size_t slot(long long idx, long long kp) const {
    return static_cast<size_t>(idx) * static_cast<size_t>(k + 1) + static_cast<size_t>(kp);
  }

  long long solve(const TruthTable& t, long long idx, long long kp, int pins) {
    size_t s = slot(idx, kp);
    if (done[s]) return value[s];
    long long ones = static_cast<long long>(t.count_ones());
    long long size = static_cast<long long>(t.size());
    long long minority = std::min(ones, size - ones) >> pins;
    long long best = minority <= kp ? 0 : kInf;
    int32_t choice = -1;
    long long scale = worst ? 1 : (1ll << (m - pins));
    for (int v = 0; v < m; ++v) {
      int digit = static_cast<int>((idx / pow3[v]) % 3);
      if (digit != 0) continue;
      // Build child tables lazily: skip when every needed child is memoized.
      bool need0 = false, need1 = false;
      for (long long k0 = 0; k0 <= kp; ++k0) {
        if (!done[slot(idx + pow3[v], k0)]) need0 = true;
        if (!done[slot(idx + 2 * pow3[v], kp - k0)]) need1 = true;
      }
      TruthTable t0, t1;
      if (need0) t0 = t.restrict_dup(v, 0);
      if (need1) t1 = t.restrict_dup(v, 1);
      for (long long k0 = 0; k0 <= kp; ++k0) {
        long long v0 = done[slot(idx + pow3[v], k0)] ? value[slot(idx + pow3[v], k0)]
                                                     : solve(t0, idx + pow3[v], k0, pins + 1);
        long long v1 = done[slot(idx + 2 * pow3[v], kp - k0)]
                           ? value[slot(idx + 2 * pow3[v], kp - k0)]
                           : solve(t1, idx + 2 * pow3[v], kp - k0, pins + 1);
        if (v0 >= kInf || v1 >= kInf) continue;
        long long cand = worst ? cost[v] + std::max(v0, v1) : cost[v] * scale + v0 + v1;
        if (cand < best) {
          best = cand;
          choice = static_cast<int32_t>(v * (k + 1) + k0);
        }
      }
    }
    value[s] = best;
    decision[s] = choice;
    done[s] = 1;
    return best;
  }

  StrategyTree extract(const TruthTable& t, long long idx, long long kp, int pins) const {
    int32_t choice = decision[slot(idx, kp)];
    if (choice < 0) {
      long long ones = static_cast<long long>(t.count_ones());
      long long size = static_cast<long long>(t.size());
      return StrategyTree::leaf(2 * ones >= size ? +1 : -1);
    }
    int v = static_cast<int>(choice / (k + 1));
    long long k0 = choice % (k + 1);
    return StrategyTree::internal(coords[v],
                                  extract(t.restrict_dup(v, 0), idx + pow3[v], k0, pins + 1),
                                  extract(t.restrict_dup(v, 1), idx + 2 * pow3[v], kp - k0, pins + 1));
  }
};

OptResult opt_impl(const BoolFn& f, const CostVector& c, long long k, bool worst) {
  if (c.size() != f.arity()) throw InputError("cost vector size must equal arity");
  if (k < 0) throw InputError("error budget must be >= 0");
  int free = f.free_count();
  if (k == 0 ? free > 14 : free > 10)
    throw CapacityError("opt oracle limited to 14 free coordinates (10 when k > 0)");
  FnTable ft = f.compact_table();
  OptDp dp(ft.table.vars(), worst, k);
  dp.coords = ft.coords;
  for (int c_i : ft.coords) dp.cost.push_back(c.at(c_i));
  long long raw = dp.solve(ft.table, 0, k, 0);
  OptResult res;
  res.worst_objective = worst;
  res.error_budget = k;
  res.value = worst ? Rational(raw) : Rational(raw, 1ll << dp.m);
  res.witness = dp.extract(ft.table, 0, k, 0);
  return res;
}

}  // namespace

long long error_budget_for(const Rational& eps, int free_count) {
  if (free_count < 0 || free_count > 62) throw InputError("free count out of range");
  return (eps * Rational(1ll << free_count)).floor();
}

OptResult opt_expected(const BoolFn& f, const CostVector& c, long long k) {
  return opt_impl(f, c, k, false);
}

OptResult opt_worst(const BoolFn& f, const CostVector& c, long long k) {
  return opt_impl(f, c, k, true);
}

long long ExactStats::misclassified(int free_count) const {
  Rational count = error * Rational(1ll << free_count);
  if (!count.is_integer()) throw StateError("error is not a multiple of 2^-free");
  return count.num();
}

namespace {

// Exhaustive walk over strategy histories.  The table stays in restrict_dup
// space, so at depth r every consistent input occupies 2^r duplicated slots
// and slot counts translate to subcube probabilities directly.
struct StatsWalker {
  const FnTable* ft;
  const CostVector* costs;
  int m;
  long long size;
  ExactStats acc;

  Rational table_influence(const TruthTable& t) const {
    long long diff = 0;
    for (int v = 0; v < m; ++v) diff += static_cast<long long>(t.diff_count(v));
    return Rational(diff, size);
  }

  long long mismatch_slots(const TruthTable& t, int output) const {
    long long ones = static_cast<long long>(t.count_ones());
    return output > 0 ? size - ones : ones;
  }

  void walk(StrategyCursor& cur, const TruthTable& t, int depth, long long cum) {
    Rational w(1, 1ll << depth);
    StrategyStep st = cur.step();
    if (auto* out = std::get_if<OutputStep>(&st)) {
      acc.error += w * Rational(mismatch_slots(t, out->value), size);
      acc.avg_influence += w * table_influence(t);
      acc.worst_cost = max(acc.worst_cost, Rational(cum));
      return;
    }
    if (auto* q = std::get_if<QueryStep>(&st)) {
      int i = q->coordinate;
      int v = ft->var_of(i);
      if (v < 0) throw StateError("strategy queried a restricted coordinate");
      acc.delta[i] += w;
      acc.expected_cost += w * Rational(costs->at(i));
      auto cur1 = cur.clone();
      cur.descend(i, 0);
      walk(cur, t.restrict_dup(v, 0), depth + 1, cum + costs->at(i));
      cur1->descend(i, 1);
      walk(*cur1, t.restrict_dup(v, 1), depth + 1, cum + costs->at(i));
      return;
    }
    if (auto* lot = std::get_if<LotteryStep>(&st)) {
      int i = lot->coordinate;
      int v = ft->var_of(i);
      if (v < 0) throw StateError("strategy queried a restricted coordinate");
      const Rational& p = lot->p_query;
      Rational skip = Rational(1) - p;
      acc.delta[i] += w * p;
      acc.expected_cost += w * p * Rational(costs->at(i));
      TruthTable t0 = t.restrict_dup(v, 0);
      TruthTable t1 = t.restrict_dup(v, 1);
      Rational half(1, 2);
      acc.error += w * p * half *
                   (Rational(mismatch_slots(t0, lot->out_on_bit[0]), size) +
                    Rational(mismatch_slots(t1, lot->out_on_bit[1]), size));
      acc.avg_influence += w * p * half * (table_influence(t0) + table_influence(t1));
      acc.worst_cost = max(acc.worst_cost, Rational(cum + costs->at(i)));
      if (!skip.is_zero()) {
        acc.error += w * skip * Rational(mismatch_slots(t, lot->out_skip), size);
        acc.avg_influence += w * skip * table_influence(t);
        acc.worst_cost = max(acc.worst_cost, Rational(cum));
      }
      return;
    }
    const auto& coin = std::get<CoinStep>(st);
    Rational tails = Rational(1) - coin.p;
    acc.error += w * (coin.p * Rational(mismatch_slots(t, coin.out_heads), size) +
                      tails * Rational(mismatch_slots(t, coin.out_tails), size));
    acc.avg_influence += w * table_influence(t);
    acc.worst_cost = max(acc.worst_cost, Rational(cum));
  }
};

}  // namespace

ExactStats strategy_stats_exact(const Strategy& s, const BoolFn& f, const CostVector& c) {
  if (c.size() != f.arity()) throw InputError("cost vector size must equal arity");
  if (!s.exact_stats_supported())
    throw InputError("strategy carries sampling randomness; exact stats unsupported");
  FnTable ft = f.compact_table();
  StatsWalker walker;
  walker.ft = &ft;
  walker.costs = &c;
  walker.m = ft.table.vars();
  walker.size = static_cast<long long>(ft.table.size());
  walker.acc.delta.assign(f.arity(), Rational(0));
  auto cur = s.start();
  walker.walk(*cur, ft.table, 0, 0);
  return std::move(walker.acc);
}

ExactStats strategy_stats_exact(const StrategyTree& tree, const BoolFn& f, const CostVector& c) {
  return strategy_stats_exact(TreeStrategy(tree), f, c);
}

}  // namespace pricedq
