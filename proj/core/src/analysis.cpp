#include "pricedq/analysis.hpp"

#include "pricedq/influence.hpp"

namespace pricedq {

namespace {

void check_capacity(const BoolFn& f, int limit) {
  if (f.free_count() > limit)
    throw CapacityError("analysis check limited to " + std::to_string(limit) +
                        " free coordinates");
}

void check_tree(const BoolFn& f, const StrategyTree& s) {
  if (s.empty() || !s.valid(f.arity()))
    throw InputError("tree is not a valid strategy over this arity");
}

}  // namespace

InequalityReport osss_check(const BoolFn& f, const StrategyTree& s) {
  check_capacity(f, 12);
  check_tree(f, s);
  ExactStats st = strategy_stats_exact(s, f, CostVector::unit(f.arity()));
  InequalityReport rep;
  rep.lhs = bias_exact(f) - st.error;
  rep.rhs = Rational(0);
  for (int i = 0; i < f.arity(); ++i) rep.rhs += st.delta[i] * influence_exact(f, i);
  rep.holds = rep.lhs <= rep.rhs;
  return rep;
}

InequalityReport cost_osss_witness(const BoolFn& f, const CostVector& c, const StrategyTree& s) {
  check_capacity(f, 12);
  check_tree(f, s);
  ExactStats st = strategy_stats_exact(s, f, c);
  if (st.expected_cost.is_zero()) throw InputError("strategy makes no queries (zero cost)");
  int i = argmax_cost_weighted_influence(f, c);
  InequalityReport rep;
  rep.lhs = (bias_exact(f) - st.error) / st.expected_cost;
  rep.rhs = influence_exact(f, i) / Rational(c.at(i));
  rep.holds = rep.lhs <= rep.rhs;
  rep.witness_coordinate = i;
  return rep;
}

InequalityReport influence_split_check(const BoolFn& f, int i) {
  check_capacity(f, 12);
  if (!f.is_free(i)) throw InputError("split coordinate must be free");
  InequalityReport rep;
  rep.lhs = total_influence_exact(f);
  rep.rhs = influence_exact(f, i) +
            (total_influence_exact(f.restrict(i, 0)) + total_influence_exact(f.restrict(i, 1))) /
                Rational(2);
  rep.holds = rep.lhs == rep.rhs;
  return rep;
}

namespace {

// E_x[sum over path of Inf_query(f_alpha)], by walking the tree with tables.
Rational path_influence_sum(const StrategyTree::NodePtr& node, const FnTable& ft,
                            const TruthTable& t, int depth) {
  if (node->is_leaf()) return Rational(0);
  int v = ft.var_of(node->coordinate);
  if (v < 0) throw StateError("tree queried a restricted coordinate");
  Rational here = Rational(1, 1ll << depth) *
                  Rational(static_cast<long long>(t.diff_count(v)),
                           static_cast<long long>(t.size()));
  return here + path_influence_sum(node->child0, ft, t.restrict_dup(v, 0), depth + 1) +
         path_influence_sum(node->child1, ft, t.restrict_dup(v, 1), depth + 1);
}

}  // namespace

InequalityReport avg_influence_identity_check(const BoolFn& f, const StrategyTree& s) {
  check_capacity(f, 10);
  check_tree(f, s);
  ExactStats st = strategy_stats_exact(s, f, CostVector::unit(f.arity()));
  FnTable ft = f.compact_table();
  InequalityReport rep;
  rep.lhs = st.avg_influence;
  rep.rhs = total_influence_exact(f) - path_influence_sum(s.root(), ft, ft.table, 0);
  rep.holds = rep.lhs == rep.rhs;
  return rep;
}

InequalityReport delta_cost_identity_check(const BoolFn& f, const CostVector& c,
                                           const StrategyTree& s) {
  check_capacity(f, 12);
  check_tree(f, s);
  if (c.size() != f.arity()) throw InputError("cost vector size must equal arity");
  ExactStats st = strategy_stats_exact(s, f, c);
  InequalityReport rep;
  rep.lhs = Rational(0);
  for (int i = 0; i < f.arity(); ++i) rep.lhs += st.delta[i] * Rational(c.at(i));
  // Independent route: average the per-input path cost over the free cube.
  FnTable ft = f.compact_table();
  const int m = ft.table.vars();
  long long total = 0;
  for (uint64_t y = 0; y < (uint64_t{1} << m); ++y) {
    uint64_t x = 0;
    for (int v = 0; v < m; ++v)
      if ((y >> v) & 1) x |= 1ull << ft.coords[v];
    const StrategyTree::Node* node = s.root().get();
    while (!node->is_leaf()) {
      total += c.at(node->coordinate);
      node = (((x >> node->coordinate) & 1) ? node->child1 : node->child0).get();
    }
  }
  rep.rhs = Rational(total, 1ll << m);
  rep.holds = rep.lhs == rep.rhs;
  return rep;
}

namespace {

bool consistent_rec(const StrategyTree::NodePtr& node, const FnTable& ft, const TruthTable& t) {
  long long ones = static_cast<long long>(t.count_ones());
  long long size = static_cast<long long>(t.size());
  if (node->is_leaf())
    return node->output > 0 ? 2 * ones >= size : 2 * ones <= size;
  int v = ft.var_of(node->coordinate);
  if (v < 0) throw StateError("tree queried a restricted coordinate");
  return consistent_rec(node->child0, ft, t.restrict_dup(v, 0)) &&
         consistent_rec(node->child1, ft, t.restrict_dup(v, 1));
}

}  // namespace

bool is_f_consistent(const BoolFn& f, const StrategyTree& s) {
  check_tree(f, s);
  FnTable ft = f.compact_table();
  return consistent_rec(s.root(), ft, ft.table);
}

}  // namespace pricedq
