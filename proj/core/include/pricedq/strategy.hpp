#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "pricedq/boolfn.hpp"
#include "pricedq/rational.hpp"
#include "pricedq/strategy_tree.hpp"

namespace pricedq {

// One decision point of a strategy.  Query asks for a coordinate; Output
// halts.  Lottery is the S*_B boundary step: with probability p_query the
// coordinate is queried (paying its full cost) and out_on_bit[bit] is emitted,
// otherwise out_skip is emitted free of charge; both branches halt.  Coin is a
// costless randomized output (produced when a cost cutoff truncates a lottery).
struct QueryStep {
  int coordinate;
};
struct OutputStep {
  int value;
};
struct LotteryStep {
  int coordinate;
  Rational p_query;
  std::array<int, 2> out_on_bit;
  int out_skip;
};
struct CoinStep {
  Rational p;
  int out_heads;
  int out_tails;
};
using StrategyStep = std::variant<OutputStep, QueryStep, LotteryStep, CoinStep>;

// Stateful walk through one strategy execution.  step() may be called
// repeatedly at the same position; descend() advances past the pending
// QueryStep once the queried bit is known.
class StrategyCursor {
public:
  virtual ~StrategyCursor() = default;
  virtual StrategyStep step() = 0;
  virtual void descend(int coordinate, int bit) = 0;
  virtual std::unique_ptr<StrategyCursor> clone() const = 0;
};

class Strategy {
public:
  virtual ~Strategy() = default;
  virtual std::unique_ptr<StrategyCursor> start() const = 0;
  // True when the only internal randomness is the boundary lottery / coin,
  // which exact enumeration handles analytically.
  virtual bool exact_stats_supported() const { return true; }
};

// How strategies obtain influences: exact from the truth table (default), or
// black-box Hoeffding estimates (for functions too large to materialize).
struct InfluenceMode {
  bool estimated = false;
  double tau = 0.05;
  double delta = 0.05;
  uint64_t seed = 0;
};

// Budget-greedy strategy (S*): repeatedly queries the argmax of Inf_i/c_i;
// once the next query would reach budget B, a boundary lottery with
// p = (B - counter)/c_i decides between querying once more and stopping.
class SStarStrategy : public Strategy {
public:
  SStarStrategy(BoolFn f, CostVector c, Rational budget, InfluenceMode mode = {},
                bool early_stop_on_constant = false);
  std::unique_ptr<StrategyCursor> start() const override;
  bool exact_stats_supported() const override { return !mode_.estimated; }
  const Rational& budget() const { return budget_; }

private:
  BoolFn f_;
  CostVector c_;
  Rational budget_;
  InfluenceMode mode_;
  bool early_stop_;
  std::shared_ptr<const FnTable> base_;  // exact mode only
};

// Bias-threshold greedy strategy (S<>): queries the argmax of Inf_i/c_i while
// bias(restriction) > eps, then outputs sign(E[f_restriction]).
class SDiamondStrategy : public Strategy {
public:
  SDiamondStrategy(BoolFn f, CostVector c, Rational eps, InfluenceMode mode = {});
  std::unique_ptr<StrategyCursor> start() const override;
  bool exact_stats_supported() const override { return !mode_.estimated; }

private:
  BoolFn f_;
  CostVector c_;
  Rational eps_;
  InfluenceMode mode_;
  std::shared_ptr<const FnTable> base_;
};

// Executable view of an explicit decision tree.
class TreeStrategy : public Strategy {
public:
  explicit TreeStrategy(StrategyTree tree);
  std::unique_ptr<StrategyCursor> start() const override;
  const StrategyTree& tree() const { return tree_; }

private:
  StrategyTree tree_;
};

// Markov cost-cutoff wrapper: delegates to the inner strategy, but any query
// that would push cumulative cost above the cutoff is replaced by output +1.
class TruncatedStrategy : public Strategy {
public:
  TruncatedStrategy(std::shared_ptr<const Strategy> inner, CostVector c, Rational cutoff);
  std::unique_ptr<StrategyCursor> start() const override;
  bool exact_stats_supported() const override { return inner_->exact_stats_supported(); }

private:
  std::shared_ptr<const Strategy> inner_;
  CostVector c_;
  Rational cutoff_;
};

std::unique_ptr<Strategy> truncate_at_cost(std::shared_ptr<const Strategy> s, CostVector c,
                                           Rational cutoff);

// Record of one execution: queried coordinates with revealed bits and running
// cost, the boundary lottery outcome if one fired, and the final output.
struct Transcript {
  struct Step {
    int coordinate;
    int bit;
    long long cumulative_cost;
  };
  struct LotteryOutcome {
    Rational p_query;
    bool queried;
  };
  std::vector<Step> steps;
  std::optional<LotteryOutcome> boundary_lottery;
  int output = 0;
  long long total_cost = 0;
};

// Executes S on input x; seed drives the lottery/coin stream only.
Transcript run_strategy(const Strategy& s, const CostVector& c, uint64_t x, uint64_t seed);

Transcript run_s_star_b(const BoolFn& f, const CostVector& c, const Rational& budget, uint64_t x,
                        uint64_t seed, const InfluenceMode& mode = {},
                        bool early_stop_on_constant = false);

Transcript run_s_diamond(const BoolFn& f, const CostVector& c, const Rational& eps, uint64_t x,
                         const InfluenceMode& mode = {});

// Budget-doubling search: tries B = 2^i * min_j c_j for i = 1, 2, ... and
// returns the first whose measured error over m uniform inputs is < eps.
struct BudgetSearchResult {
  Rational budget;
  Rational measured_error;
  int doublings = 0;
  long long samples = 0;
};
// samples == 0 picks m = ceil(ln(2/delta) / (2 (eps/4)^2)).
BudgetSearchResult find_budget(const BoolFn& f, const CostVector& c, const Rational& eps,
                               long long samples, double delta, uint64_t seed,
                               const InfluenceMode& mode = {});

// Monte Carlo statistics of a strategy over m uniform inputs.
struct RunStats {
  long long samples = 0;
  double error = 0, error_se = 0;
  double expected_cost = 0, cost_se = 0;
  std::vector<double> delta;  // per-coordinate query frequency
  long long max_cost_seen = 0;
};
RunStats estimate_strategy_stats(const Strategy& s, const BoolFn& f, const CostVector& c,
                                 long long m, uint64_t seed);

}  // namespace pricedq
