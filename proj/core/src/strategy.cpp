#include "pricedq/strategy.hpp"

#include <bit>
#include <cmath>

#include "pricedq/influence.hpp"
#include "pricedq/rng.hpp"

namespace pricedq {

namespace {

// Greedy-strategy internals are written against a "lens": the view of the
// restricted function that supplies argmax/sign/bias and absorbs queries.
// ExactLens works on the materialized truth table; SampledLens drives a
// black-box function through Hoeffding estimates.

struct ExactLens {
  std::shared_ptr<const FnTable> base;
  const CostVector* costs;
  TruthTable cur;
  uint64_t pinned = 0;

  ExactLens(std::shared_ptr<const FnTable> b, const CostVector& c)
      : base(std::move(b)), costs(&c), cur(base->table) {}

  long long cost(int coordinate) const { return costs->at(coordinate); }
  bool all_pinned() const { return std::popcount(pinned) == cur.vars(); }
  bool is_constant() const { return cur.is_constant(); }

  int sign() const { return 2 * cur.count_ones() >= cur.size() ? +1 : -1; }

  int sign_if(int coordinate, int b) const {
    TruthTable t = cur.restrict_dup(base->var_of(coordinate), b);
    return 2 * t.count_ones() >= t.size() ? +1 : -1;
  }

  Rational bias() const {
    long long ones = static_cast<long long>(cur.count_ones());
    long long size = static_cast<long long>(cur.size());
    return Rational(std::min(ones, size - ones), size);
  }

  int argmax() const { return base->coords[argmax_cwi_table(cur, base->coords, pinned, *costs)]; }

  void restrict(int coordinate, int b) {
    int v = base->var_of(coordinate);
    cur = cur.restrict_dup(v, b);
    pinned |= 1ull << v;
  }
};

struct SampledLens {
  BoolFn f;
  const CostVector* costs;
  InfluenceMode mode;
  long long m;
  int depth = 0;

  SampledLens(BoolFn fn, const CostVector& c, const InfluenceMode& md)
      : f(std::move(fn)), costs(&c), mode(md),
        m(hoeffding_sample_count(md.tau, md.delta)) {}

  long long cost(int coordinate) const { return costs->at(coordinate); }
  bool all_pinned() const { return f.free_count() == 0; }

  long long plus_count(const BoolFn& g, uint64_t tag) const {
    Rng rng(derive_seed(mode.seed, {kStreamInput, static_cast<uint64_t>(depth), tag}));
    long long plus = 0;
    for (long long t = 0; t < m; ++t)
      if (g.evaluate(rng.input_mask(g.arity())) > 0) ++plus;
    return plus;
  }

  bool is_constant() const { return bias().is_zero(); }
  int sign() const { return 2 * plus_count(f, 0) >= m ? +1 : -1; }

  int sign_if(int coordinate, int b) const {
    BoolFn g = f.restrict(coordinate, b);
    long long plus = plus_count(g, 2 + static_cast<uint64_t>(2 * coordinate + b));
    return 2 * plus >= m ? +1 : -1;
  }

  Rational bias() const {
    long long plus = plus_count(f, 1);
    return Rational(std::min(plus, m - plus), m);
  }

  int argmax() const {
    return argmax_cost_weighted_influence_estimated(
        f, *costs, mode.tau, mode.delta,
        derive_seed(mode.seed, {kStreamInfluence, static_cast<uint64_t>(depth)}));
  }

  void restrict(int coordinate, int b) {
    f = f.restrict(coordinate, b);
    ++depth;
  }
};

template <class Lens>
class SStarCursor : public StrategyCursor {
public:
  SStarCursor(Lens lens, Rational budget, bool early_stop)
      : lens_(std::move(lens)), budget_(std::move(budget)), early_stop_(early_stop) {}

  StrategyStep step() override {
    if (early_stop_ && lens_.is_constant()) return OutputStep{lens_.sign()};
    if (lens_.all_pinned()) return OutputStep{lens_.sign()};
    if (Rational(counter_) >= budget_) return OutputStep{lens_.sign()};
    int i = lens_.argmax();
    long long ci = lens_.cost(i);
    if (Rational(counter_ + ci) >= budget_) {
      LotteryStep lot;
      lot.coordinate = i;
      lot.p_query = (budget_ - Rational(counter_)) / Rational(ci);
      lot.out_on_bit = {lens_.sign_if(i, 0), lens_.sign_if(i, 1)};
      lot.out_skip = lens_.sign();
      return lot;
    }
    return QueryStep{i};
  }

  void descend(int coordinate, int bit) override {
    counter_ += lens_.cost(coordinate);
    lens_.restrict(coordinate, bit);
  }

  std::unique_ptr<StrategyCursor> clone() const override {
    return std::make_unique<SStarCursor>(*this);
  }

private:
  Lens lens_;
  Rational budget_;
  bool early_stop_;
  long long counter_ = 0;
};

template <class Lens>
class SDiamondCursor : public StrategyCursor {
public:
  SDiamondCursor(Lens lens, Rational eps) : lens_(std::move(lens)), eps_(std::move(eps)) {}

  StrategyStep step() override {
    if (lens_.bias() <= eps_) return OutputStep{lens_.sign()};
    return QueryStep{lens_.argmax()};
  }

  void descend(int coordinate, int bit) override { lens_.restrict(coordinate, bit); }

  std::unique_ptr<StrategyCursor> clone() const override {
    return std::make_unique<SDiamondCursor>(*this);
  }

private:
  Lens lens_;
  Rational eps_;
};

class TreeCursor : public StrategyCursor {
public:
  explicit TreeCursor(StrategyTree::NodePtr root) : root_(std::move(root)), node_(root_.get()) {}

  StrategyStep step() override {
    if (node_->is_leaf()) return OutputStep{node_->output};
    return QueryStep{node_->coordinate};
  }

  void descend(int coordinate, int bit) override {
    if (node_->is_leaf() || node_->coordinate != coordinate)
      throw StateError("descend does not match the pending query");
    node_ = (bit ? node_->child1 : node_->child0).get();
  }

  std::unique_ptr<StrategyCursor> clone() const override {
    auto c = std::make_unique<TreeCursor>(root_);
    c->node_ = node_;
    return c;
  }

private:
  StrategyTree::NodePtr root_;  // keeps the nodes alive
  const StrategyTree::Node* node_;
};

class TruncatedCursor : public StrategyCursor {
public:
  TruncatedCursor(std::unique_ptr<StrategyCursor> inner, const CostVector* c, const Rational* cutoff)
      : inner_(std::move(inner)), costs_(c), cutoff_(cutoff) {}

  StrategyStep step() override {
    StrategyStep st = inner_->step();
    if (auto* q = std::get_if<QueryStep>(&st)) {
      if (Rational(cum_ + costs_->at(q->coordinate)) > *cutoff_) return OutputStep{+1};
      return st;
    }
    if (auto* lot = std::get_if<LotteryStep>(&st)) {
      if (Rational(cum_ + costs_->at(lot->coordinate)) > *cutoff_)
        return CoinStep{lot->p_query, +1, lot->out_skip};
      return st;
    }
    return st;
  }

  void descend(int coordinate, int bit) override {
    cum_ += costs_->at(coordinate);
    inner_->descend(coordinate, bit);
  }

  std::unique_ptr<StrategyCursor> clone() const override {
    auto c = std::make_unique<TruncatedCursor>(inner_->clone(), costs_, cutoff_);
    c->cum_ = cum_;
    return c;
  }

private:
  std::unique_ptr<StrategyCursor> inner_;
  const CostVector* costs_;
  const Rational* cutoff_;
  long long cum_ = 0;
};

void check_costs(const BoolFn& f, const CostVector& c) {
  if (c.size() != f.arity()) throw InputError("cost vector size must equal arity");
}

}  // namespace

SStarStrategy::SStarStrategy(BoolFn f, CostVector c, Rational budget, InfluenceMode mode,
                             bool early_stop_on_constant)
    : f_(std::move(f)), c_(std::move(c)), budget_(std::move(budget)), mode_(mode),
      early_stop_(early_stop_on_constant) {
  check_costs(f_, c_);
  if (budget_ < Rational(0)) throw InputError("budget must be >= 0");
  if (!mode_.estimated) base_ = std::make_shared<const FnTable>(f_.compact_table());
}

std::unique_ptr<StrategyCursor> SStarStrategy::start() const {
  if (mode_.estimated)
    return std::make_unique<SStarCursor<SampledLens>>(SampledLens(f_, c_, mode_), budget_,
                                                      early_stop_);
  return std::make_unique<SStarCursor<ExactLens>>(ExactLens(base_, c_), budget_, early_stop_);
}

SDiamondStrategy::SDiamondStrategy(BoolFn f, CostVector c, Rational eps, InfluenceMode mode)
    : f_(std::move(f)), c_(std::move(c)), eps_(std::move(eps)), mode_(mode) {
  check_costs(f_, c_);
  if (!(eps_ > Rational(0) && eps_ < Rational(1, 2)))
    throw InputError("eps must lie in (0, 1/2)");
  if (!mode_.estimated) base_ = std::make_shared<const FnTable>(f_.compact_table());
}

std::unique_ptr<StrategyCursor> SDiamondStrategy::start() const {
  if (mode_.estimated)
    return std::make_unique<SDiamondCursor<SampledLens>>(SampledLens(f_, c_, mode_), eps_);
  return std::make_unique<SDiamondCursor<ExactLens>>(ExactLens(base_, c_), eps_);
}

TreeStrategy::TreeStrategy(StrategyTree tree) : tree_(std::move(tree)) {
  if (tree_.empty()) throw InputError("tree strategy needs a non-empty tree");
}

std::unique_ptr<StrategyCursor> TreeStrategy::start() const {
  return std::make_unique<TreeCursor>(tree_.root());
}

TruncatedStrategy::TruncatedStrategy(std::shared_ptr<const Strategy> inner, CostVector c,
                                     Rational cutoff)
    : inner_(std::move(inner)), c_(std::move(c)), cutoff_(std::move(cutoff)) {
  if (!inner_) throw InputError("truncation needs an inner strategy");
  if (!(cutoff_ > Rational(0))) throw InputError("cutoff must be > 0");
}

std::unique_ptr<StrategyCursor> TruncatedStrategy::start() const {
  return std::make_unique<TruncatedCursor>(inner_->start(), &c_, &cutoff_);
}

std::unique_ptr<Strategy> truncate_at_cost(std::shared_ptr<const Strategy> s, CostVector c,
                                           Rational cutoff) {
  return std::make_unique<TruncatedStrategy>(std::move(s), std::move(c), std::move(cutoff));
}

Transcript run_strategy(const Strategy& s, const CostVector& c, uint64_t x, uint64_t seed) {
  Transcript tr;
  auto cur = s.start();
  Rng lottery(derive_seed(seed, {kStreamLottery}));
  for (int guard = 0; guard < 130; ++guard) {
    StrategyStep st = cur->step();
    if (auto* out = std::get_if<OutputStep>(&st)) {
      tr.output = out->value;
      return tr;
    }
    if (auto* q = std::get_if<QueryStep>(&st)) {
      int bit = static_cast<int>((x >> q->coordinate) & 1);
      tr.total_cost += c.at(q->coordinate);
      tr.steps.push_back({q->coordinate, bit, tr.total_cost});
      cur->descend(q->coordinate, bit);
      continue;
    }
    if (auto* lot = std::get_if<LotteryStep>(&st)) {
      bool queried = lottery.bernoulli(lot->p_query);
      tr.boundary_lottery = Transcript::LotteryOutcome{lot->p_query, queried};
      if (queried) {
        int bit = static_cast<int>((x >> lot->coordinate) & 1);
        tr.total_cost += c.at(lot->coordinate);
        tr.steps.push_back({lot->coordinate, bit, tr.total_cost});
        tr.output = lot->out_on_bit[bit];
      } else {
        tr.output = lot->out_skip;
      }
      return tr;
    }
    const auto& coin = std::get<CoinStep>(st);
    tr.output = lottery.bernoulli(coin.p) ? coin.out_heads : coin.out_tails;
    return tr;
  }
  throw StateError("strategy did not terminate within the query limit");
}

Transcript run_s_star_b(const BoolFn& f, const CostVector& c, const Rational& budget, uint64_t x,
                        uint64_t seed, const InfluenceMode& mode, bool early_stop_on_constant) {
  SStarStrategy s(f, c, budget, mode, early_stop_on_constant);
  return run_strategy(s, c, x, seed);
}

Transcript run_s_diamond(const BoolFn& f, const CostVector& c, const Rational& eps, uint64_t x,
                         const InfluenceMode& mode) {
  SDiamondStrategy s(f, c, eps, mode);
  return run_strategy(s, c, x, 0);
}

BudgetSearchResult find_budget(const BoolFn& f, const CostVector& c, const Rational& eps,
                               long long samples, double delta, uint64_t seed,
                               const InfluenceMode& mode) {
  check_costs(f, c);
  if (!(eps > Rational(0) && eps < Rational(1, 2))) throw InputError("eps must lie in (0, 1/2)");
  long long m = samples;
  if (m <= 0) {
    double quarter = eps.to_double() / 4.0;
    if (!(delta > 0 && delta < 1)) throw InputError("delta must lie in (0,1)");
    m = static_cast<long long>(std::ceil(std::log(2.0 / delta) / (2.0 * quarter * quarter)));
  }
  const long long total = c.total();
  const long long min_c = c.min_cost();
  const int n = f.arity();
  for (int i = 1; i <= 63; ++i) {
    long long budget = min_c << i;
    InfluenceMode trial_mode = mode;
    trial_mode.seed = derive_seed(seed, {kStreamInfluence, static_cast<uint64_t>(i)});
    SStarStrategy s(f, c, Rational(budget), trial_mode);
    Rng inputs(derive_seed(seed, {kStreamInput, static_cast<uint64_t>(i)}));
    long long wrong = 0;
    for (long long t = 0; t < m; ++t) {
      uint64_t x = inputs.input_mask(n);
      Transcript tr = run_strategy(
          s, c, x, derive_seed(seed, {kStreamLottery, static_cast<uint64_t>(i), static_cast<uint64_t>(t)}));
      if (tr.output != f.evaluate(x)) ++wrong;
    }
    Rational measured(wrong, m);
    if (measured < eps) return {Rational(budget), measured, i, m};
    if (budget >= total)
      throw StateError("budget search failed to accept a full-evaluation budget");
  }
  throw StateError("budget search exceeded 63 doublings");
}

RunStats estimate_strategy_stats(const Strategy& s, const BoolFn& f, const CostVector& c,
                                 long long m, uint64_t seed) {
  if (m < 1) throw InputError("sample count must be >= 1");
  const int n = f.arity();
  RunStats st;
  st.samples = m;
  st.delta.assign(n, 0.0);
  long long wrong = 0;
  double cost_sum = 0, cost_sumsq = 0;
  std::vector<long long> queried(n, 0);
  for (long long t = 0; t < m; ++t) {
    uint64_t x = Rng(derive_seed(seed, {kStreamInput, static_cast<uint64_t>(t)})).input_mask(n);
    Transcript tr = run_strategy(s, c, x, derive_seed(seed, {static_cast<uint64_t>(t)}));
    if (tr.output != f.evaluate(x)) ++wrong;
    cost_sum += static_cast<double>(tr.total_cost);
    cost_sumsq += static_cast<double>(tr.total_cost) * static_cast<double>(tr.total_cost);
    st.max_cost_seen = std::max(st.max_cost_seen, tr.total_cost);
    for (const auto& step : tr.steps) ++queried[step.coordinate];
  }
  double dm = static_cast<double>(m);
  st.error = static_cast<double>(wrong) / dm;
  st.error_se = std::sqrt(st.error * (1.0 - st.error) / dm);
  st.expected_cost = cost_sum / dm;
  double var = m > 1 ? std::max(0.0, (cost_sumsq - cost_sum * cost_sum / dm) / (dm - 1.0)) : 0.0;
  st.cost_se = std::sqrt(var / dm);
  for (int i = 0; i < n; ++i) st.delta[i] = static_cast<double>(queried[i]) / dm;
  return st;
}

}  // namespace pricedq
