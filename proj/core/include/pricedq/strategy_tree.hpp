#pragma once

#include <memory>
#include <string>

namespace pricedq {

// Deterministic query tree: internal nodes name the coordinate to query,
// leaves fix the output.  Coordinates are 0-based in the API; the JSON wire
// format ({"q":i,"0":...,"1":...} / {"out":+-1}) uses 1-based coordinates.
class StrategyTree {
public:
  struct Node;
  using NodePtr = std::shared_ptr<const Node>;
  struct Node {
    int coordinate = -1;  // -1 marks a leaf
    int output = 0;       // leaf output, +1 or -1
    NodePtr child0, child1;
    bool is_leaf() const { return coordinate < 0; }
  };

  StrategyTree() = default;
  explicit StrategyTree(NodePtr root) : root_(std::move(root)) {}

  static StrategyTree leaf(int output);
  static StrategyTree internal(int coordinate, StrategyTree on0, StrategyTree on1);

  const NodePtr& root() const { return root_; }
  bool empty() const { return root_ == nullptr; }

  // Structural soundness: coordinates within arity, no coordinate repeated
  // along any root-to-leaf path, outputs +-1.
  bool valid(int arity) const;

  long long node_count() const;
  int depth() const;

  // Output on a full assignment (bit i of x = coordinate i).
  int evaluate(uint64_t x) const;

  std::string to_json() const;
  static StrategyTree from_json(const std::string& text);

private:
  NodePtr root_;
};

}  // namespace pricedq
