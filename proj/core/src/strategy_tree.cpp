#include "pricedq/strategy_tree.hpp"

#include <nlohmann/json.hpp>

#include "pricedq/errors.hpp"

namespace pricedq {

using nlohmann::json;

StrategyTree StrategyTree::leaf(int output) {
  if (output != 1 && output != -1) throw InputError("leaf output must be +1 or -1");
  auto n = std::make_shared<Node>();
  n->output = output;
  return StrategyTree(std::move(n));
}

StrategyTree StrategyTree::internal(int coordinate, StrategyTree on0, StrategyTree on1) {
  if (coordinate < 0) throw InputError("negative query coordinate");
  if (on0.empty() || on1.empty()) throw InputError("internal node with missing child");
  auto n = std::make_shared<Node>();
  n->coordinate = coordinate;
  n->child0 = on0.root_;
  n->child1 = on1.root_;
  return StrategyTree(std::move(n));
}

namespace {

bool valid_rec(const StrategyTree::NodePtr& n, int arity, uint64_t seen) {
  if (!n) return false;
  if (n->is_leaf()) return n->output == 1 || n->output == -1;
  if (n->coordinate >= arity) return false;
  uint64_t bit = 1ull << n->coordinate;
  if (seen & bit) return false;
  return valid_rec(n->child0, arity, seen | bit) && valid_rec(n->child1, arity, seen | bit);
}

long long count_rec(const StrategyTree::NodePtr& n) {
  if (!n) return 0;
  if (n->is_leaf()) return 1;
  return 1 + count_rec(n->child0) + count_rec(n->child1);
}

int depth_rec(const StrategyTree::NodePtr& n) {
  if (!n || n->is_leaf()) return 0;
  return 1 + std::max(depth_rec(n->child0), depth_rec(n->child1));
}

json to_json_rec(const StrategyTree::NodePtr& n) {
  if (n->is_leaf()) return json{{"out", n->output}};
  json j;
  j["q"] = n->coordinate + 1;  // 1-based on the wire
  j["0"] = to_json_rec(n->child0);
  j["1"] = to_json_rec(n->child1);
  return j;
}

StrategyTree::NodePtr from_json_rec(const json& j, const std::string& path) {
  if (!j.is_object()) throw ParseError(path, "expected object");
  auto n = std::make_shared<StrategyTree::Node>();
  if (j.contains("out")) {
    if (!j["out"].is_number_integer()) throw ParseError(path + ".out", "expected +1 or -1");
    n->output = j["out"].get<int>();
    if (n->output != 1 && n->output != -1) throw ParseError(path + ".out", "expected +1 or -1");
    return n;
  }
  if (!j.contains("q") || !j["q"].is_number_integer())
    throw ParseError(path, "expected 'q' (integer) or 'out'");
  long long q = j["q"].get<long long>();
  if (q < 1 || q > 64) throw ParseError(path + ".q", "coordinate must be in 1..64");
  n->coordinate = static_cast<int>(q - 1);
  if (!j.contains("0") || !j.contains("1"))
    throw ParseError(path, "internal node needs both '0' and '1' children");
  n->child0 = from_json_rec(j["0"], path + ".0");
  n->child1 = from_json_rec(j["1"], path + ".1");
  return n;
}

}  // namespace

bool StrategyTree::valid(int arity) const { return valid_rec(root_, arity, 0); }

long long StrategyTree::node_count() const { return count_rec(root_); }

int StrategyTree::depth() const { return depth_rec(root_); }

int StrategyTree::evaluate(uint64_t x) const {
  const Node* n = root_.get();
  if (!n) throw StateError("evaluate on empty tree");
  while (!n->is_leaf()) n = ((x >> n->coordinate) & 1) ? n->child1.get() : n->child0.get();
  return n->output;
}

std::string StrategyTree::to_json() const {
  if (empty()) throw StateError("serialize on empty tree");
  return to_json_rec(root_).dump();
}

StrategyTree StrategyTree::from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("$", e.what());
  }
  return StrategyTree(from_json_rec(j, "$"));
}

}  // namespace pricedq
