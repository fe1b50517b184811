#include <nlohmann/json.hpp>

#include "fn_repr.hpp"
#include "pricedq/boolfn.hpp"

namespace pricedq {

using nlohmann::json;
using Tag = BoolFn::Repr::Tag;

namespace {

std::string table_to_hex(const TruthTable& t) {
  uint64_t nibbles = (t.size() + 3) / 4;
  std::string s;
  s.reserve(nibbles);
  for (uint64_t k = 0; k < nibbles; ++k) {
    int v = 0;
    for (int b = 0; b < 4; ++b) {
      uint64_t x = 4 * k + b;
      if (x < t.size() && t.bit(x)) v |= 1 << b;
    }
    s += "0123456789abcdef"[v];
  }
  return s;
}

TruthTable table_from_hex(int n, const std::string& hex, const std::string& path) {
  TruthTable t(n);
  uint64_t nibbles = (t.size() + 3) / 4;
  if (hex.size() != nibbles)
    throw ParseError(path, "bits string must have " + std::to_string(nibbles) + " hex digits");
  for (uint64_t k = 0; k < nibbles; ++k) {
    char c = hex[k];
    int v;
    if (c >= '0' && c <= '9')
      v = c - '0';
    else if (c >= 'a' && c <= 'f')
      v = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F')
      v = c - 'A' + 10;
    else
      throw ParseError(path, "non-hex digit in bits string");
    for (int b = 0; b < 4; ++b) {
      uint64_t x = 4 * k + b;
      if (x < t.size()) {
        if (v & (1 << b)) t.set_bit(x, true);
      } else if (v & (1 << b)) {
        throw ParseError(path, "bits set beyond table size");
      }
    }
  }
  return t;
}

long long require_int(const json& j, const char* field, const std::string& path) {
  if (!j.contains(field) || !j[field].is_number_integer())
    throw ParseError(path + "." + field, "missing or non-integer field");
  return j[field].get<long long>();
}

int require_arity(const json& j, const std::string& path, int lo = 1, int hi = 64) {
  long long n = require_int(j, "n", path);
  if (n < lo || n > hi)
    throw ParseError(path + ".n", "arity must be in " + std::to_string(lo) + ".." + std::to_string(hi));
  return static_cast<int>(n);
}

std::vector<std::vector<int>> require_literal_lists(const json& j, const char* field,
                                                    const std::string& path) {
  if (!j.contains(field) || !j[field].is_array())
    throw ParseError(path + "." + field, "missing or non-array field");
  std::vector<std::vector<int>> out;
  for (const auto& term : j[field]) {
    if (!term.is_array()) throw ParseError(path + "." + field, "each entry must be an array");
    std::vector<int> lits;
    for (const auto& lit : term) {
      if (!lit.is_number_integer()) throw ParseError(path + "." + field, "literals must be integers");
      long long v = lit.get<long long>();
      if (v == 0 || v > 64 || v < -64) throw ParseError(path + "." + field, "literal out of range");
      lits.push_back(static_cast<int>(v));
    }
    out.push_back(std::move(lits));
  }
  return out;
}

Halfspace parse_halfspace(const json& j, int n, const std::string& path) {
  Halfspace h;
  if (!j.contains("w") || !j["w"].is_array())
    throw ParseError(path + ".w", "missing or non-array weights");
  for (const auto& w : j["w"]) {
    if (!w.is_number_integer()) throw ParseError(path + ".w", "weights must be integers");
    h.w.push_back(w.get<long long>());
  }
  if (static_cast<int>(h.w.size()) != n)
    throw ParseError(path + ".w", "weight count must equal arity");
  h.theta = require_int(j, "theta", path);
  return h;
}

json halfspace_to_json(const Halfspace& h) {
  json j;
  j["w"] = h.w;
  j["theta"] = h.theta;
  return j;
}

}  // namespace

std::string BoolFn::serialize() const {
  const Repr& r = *repr_;
  json j;
  switch (r.tag) {
    case Tag::constant:
      j["kind"] = "dnf";
      j["n"] = r.n;
      j["terms"] = r.sign > 0 ? json::array({json::array()}) : json::array();
      break;
    case Tag::table:
      j["kind"] = "table";
      j["n"] = r.n;
      j["bits"] = table_to_hex(r.table);
      break;
    case Tag::dnf:
      j["kind"] = "dnf";
      j["n"] = r.n;
      j["terms"] = r.lits;
      break;
    case Tag::cnf:
      j["kind"] = "cnf-of-dnf-dual";
      j["n"] = r.n;
      j["clauses"] = r.lits;
      break;
    case Tag::halfspace:
      j = halfspace_to_json(r.planes[0]);
      j["kind"] = "halfspace";
      j["n"] = r.n;
      break;
    case Tag::intersection: {
      j["kind"] = "intersection";
      j["n"] = r.n;
      json hs = json::array();
      for (const Halfspace& h : r.planes) hs.push_back(halfspace_to_json(h));
      j["halfspaces"] = std::move(hs);
      break;
    }
    case Tag::parity:
      j["kind"] = "parity";
      j["n"] = r.n;
      break;
    case Tag::dictator:
      j["kind"] = "dictator";
      j["n"] = r.n;
      j["i"] = r.coordinate + 1;
      break;
    case Tag::majority:
      j["kind"] = "majority";
      j["n"] = r.n;
      break;
    case Tag::tribes:
      j["kind"] = "tribes";
      j["n"] = r.n;
      j["width"] = r.width;
      j["count"] = r.count;
      break;
    case Tag::tree:
      j["kind"] = "tree";
      j["n"] = r.n;
      j["tree"] = json::parse(r.tree.to_json());
      break;
    case Tag::addressing: {
      if (r.n > 20) throw InputError("addressing function too large to serialize as a table");
      BoolFn plain(repr_);  // no restriction: serialize the full table
      j["kind"] = "table";
      j["n"] = r.n;
      j["bits"] = table_to_hex(plain.compact_table().table);
      break;
    }
    case Tag::callback:
      throw InputError("cannot serialize a black-box function");
  }
  if (restriction_.count() > 0) {
    json rj = json::object();
    for (int i = 0; i < r.n; ++i)
      if (restriction_.restricted(i)) rj[std::to_string(i + 1)] = restriction_.bit(i);
    j["restriction"] = std::move(rj);
  }
  return j.dump();
}

BoolFn BoolFn::parse_spec(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("$", e.what());
  }
  if (!j.is_object()) throw ParseError("$", "expected a JSON object");
  if (!j.contains("kind") || !j["kind"].is_string())
    throw ParseError("$.kind", "missing or non-string kind");
  const std::string kind = j["kind"].get<std::string>();

  BoolFn f;
  try {
    if (kind == "table") {
      int n = require_arity(j, "$", 1, 20);
      if (!j.contains("bits") || !j["bits"].is_string())
        throw ParseError("$.bits", "missing or non-string bits");
      f = from_table(table_from_hex(n, j["bits"].get<std::string>(), "$.bits"));
    } else if (kind == "dnf") {
      f = dnf(require_arity(j, "$"), require_literal_lists(j, "terms", "$"));
    } else if (kind == "cnf-of-dnf-dual") {
      f = cnf_of_dnf_dual(require_arity(j, "$"), require_literal_lists(j, "clauses", "$"));
    } else if (kind == "halfspace") {
      int n = require_arity(j, "$");
      f = halfspace(n, parse_halfspace(j, n, "$"));
    } else if (kind == "intersection") {
      int n = require_arity(j, "$");
      if (!j.contains("halfspaces") || !j["halfspaces"].is_array())
        throw ParseError("$.halfspaces", "missing or non-array field");
      std::vector<Halfspace> hs;
      for (const auto& hj : j["halfspaces"]) hs.push_back(parse_halfspace(hj, n, "$.halfspaces"));
      f = intersection(n, std::move(hs));
    } else if (kind == "parity") {
      f = parity(require_arity(j, "$"));
    } else if (kind == "dictator") {
      int n = require_arity(j, "$");
      long long i = require_int(j, "i", "$");
      if (i < 1 || i > n) throw ParseError("$.i", "coordinate must be in 1..n");
      f = dictator(n, static_cast<int>(i - 1));
    } else if (kind == "majority") {
      f = majority(require_arity(j, "$"));
    } else if (kind == "tribes") {
      long long w = require_int(j, "width", "$");
      long long s = require_int(j, "count", "$");
      if (w < 1 || s < 1 || w * s > 64) throw ParseError("$", "invalid tribes parameters");
      if (j.contains("n") && require_int(j, "n", "$") != w * s)
        throw ParseError("$.n", "arity inconsistent with width*count");
      f = tribes(static_cast<int>(w), static_cast<int>(s));
    } else if (kind == "tree") {
      int n = require_arity(j, "$");
      if (!j.contains("tree")) throw ParseError("$.tree", "missing field");
      f = from_tree(n, StrategyTree::from_json(j["tree"].dump()));
    } else {
      throw ParseError("$.kind", "unknown kind '" + kind + "'");
    }
  } catch (const InputError& e) {
    throw ParseError("$", e.what());
  }

  if (j.contains("restriction")) {
    if (!j["restriction"].is_object())
      throw ParseError("$.restriction", "expected an object of coordinate -> bit");
    Restriction r;
    for (const auto& [key, val] : j["restriction"].items()) {
      long long i;
      try {
        size_t pos = 0;
        i = std::stoll(key, &pos);
        if (pos != key.size()) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw ParseError("$.restriction", "keys must be 1-based coordinate numbers");
      }
      if (i < 1 || i > f.arity())
        throw ParseError("$.restriction", "coordinate out of range: " + key);
      if (!val.is_number_integer() || (val.get<int>() != 0 && val.get<int>() != 1))
        throw ParseError("$.restriction", "values must be 0 or 1");
      try {
        r = r.with(static_cast<int>(i - 1), val.get<int>());
      } catch (const InputError& e) {
        throw ParseError("$.restriction", e.what());
      }
    }
    f = f.with_restriction(r);
  }
  return f;
}

}  // namespace pricedq
