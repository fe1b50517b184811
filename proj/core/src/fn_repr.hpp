#pragma once

// Internal representation shared by boolfn.cpp and boolfn_json.cpp.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "pricedq/boolfn.hpp"

namespace pricedq {

struct BoolFn::Repr {
  enum class Tag {
    constant,
    table,
    dnf,
    cnf,
    halfspace,
    intersection,
    parity,
    dictator,
    majority,
    tribes,
    tree,
    addressing,
    callback,
  };

  Tag tag = Tag::constant;
  int n = 0;
  std::string kind;

  int sign = -1;                        // constant
  TruthTable table;                     // table
  std::vector<std::vector<int>> lits;   // dnf/cnf: signed 1-based literals
  std::vector<uint64_t> pos_masks;      // per term/clause
  std::vector<uint64_t> neg_masks;
  std::vector<Halfspace> planes;        // halfspace/intersection/majority
  int coordinate = -1;                  // dictator (0-based)
  int width = 0, count = 0;             // tribes
  int address_bits = 0;                 // addressing
  StrategyTree tree;                    // tree
  std::function<int(uint64_t)> eval;    // callback
};

}  // namespace pricedq
