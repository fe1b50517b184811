#include "pricedq/boolfn.hpp"

#include <algorithm>
#include <bit>

#include "fn_repr.hpp"

namespace pricedq {

CostVector::CostVector(std::vector<long long> costs) : c_(std::move(costs)) {
  if (c_.empty() || c_.size() > 64) throw InputError("cost vector size must be in 1..64");
  for (long long v : c_)
    if (v < 1) throw InputError("costs must be positive integers");
}

CostVector CostVector::unit(int n) { return CostVector(std::vector<long long>(n, 1)); }

long long CostVector::at(int i) const {
  if (i < 0 || i >= size()) throw InputError("cost index out of range");
  return c_[i];
}

long long CostVector::total() const {
  long long s = 0;
  for (long long v : c_) s += v;
  return s;
}

long long CostVector::min_cost() const { return *std::min_element(c_.begin(), c_.end()); }

Restriction::Restriction(uint64_t mask, uint64_t values) : mask_(mask), values_(values) {
  if (values & ~mask) throw InputError("restriction values outside mask");
}

int Restriction::bit(int i) const {
  if (!restricted(i)) throw InputError("coordinate is not restricted");
  return (values_ >> i) & 1;
}

Restriction Restriction::with(int i, int b) const {
  if (i < 0 || i >= 64) throw InputError("coordinate out of range");
  if (b != 0 && b != 1) throw InputError("restriction bit must be 0 or 1");
  if (restricted(i)) throw InputError("coordinate already restricted");
  Restriction r = *this;
  r.mask_ |= 1ull << i;
  if (b) r.values_ |= 1ull << i;
  return r;
}

int Restriction::count() const { return std::popcount(mask_); }

int FnTable::var_of(int coordinate) const {
  auto it = std::lower_bound(coords.begin(), coords.end(), coordinate);
  if (it == coords.end() || *it != coordinate) return -1;
  return static_cast<int>(it - coords.begin());
}

namespace {

using Repr = BoolFn::Repr;
using Tag = Repr::Tag;

void check_arity(int n) {
  if (n < 1 || n > 64) throw InputError("arity must be in 1..64");
}

uint64_t arity_mask(int n) { return n >= 64 ? ~0ull : (1ull << n) - 1; }

// Compiles signed 1-based literal lists into (positive, negative) bit masks.
void compile_literals(Repr& r) {
  r.pos_masks.clear();
  r.neg_masks.clear();
  for (const auto& term : r.lits) {
    uint64_t pos = 0, neg = 0;
    for (int lit : term) {
      if (lit == 0) throw InputError("literal 0 is invalid");
      int j = std::abs(lit) - 1;
      if (j >= r.n) throw InputError("literal exceeds arity");
      (lit > 0 ? pos : neg) |= 1ull << j;
    }
    r.pos_masks.push_back(pos);
    r.neg_masks.push_back(neg);
  }
}

void check_halfspace(const Halfspace& h, int n) {
  if (static_cast<int>(h.w.size()) != n) throw InputError("halfspace weight count must equal arity");
}

long long halfspace_dot(const Halfspace& h, uint64_t x) {
  long long s = 0;
  for (size_t j = 0; j < h.w.size(); ++j)
    if ((x >> j) & 1) s += h.w[j];
  return s;
}

}  // namespace

int BoolFn::arity() const {
  if (!repr_) throw StateError("uninitialized function");
  return repr_->n;
}

const std::string& BoolFn::kind() const {
  if (!repr_) throw StateError("uninitialized function");
  return repr_->kind;
}

bool BoolFn::is_free(int i) const {
  return i >= 0 && i < arity() && !restriction_.restricted(i);
}

int BoolFn::evaluate(uint64_t x) const {
  const Repr& r = *repr_;
  x = restriction_.compose(x) & arity_mask(r.n);
  switch (r.tag) {
    case Tag::constant:
      return r.sign;
    case Tag::table:
      return r.table.value(x);
    case Tag::dnf:
    case Tag::tribes:
      for (size_t t = 0; t < r.pos_masks.size(); ++t)
        if ((x & r.pos_masks[t]) == r.pos_masks[t] && (x & r.neg_masks[t]) == 0) return +1;
      return -1;
    case Tag::cnf:
      for (size_t t = 0; t < r.pos_masks.size(); ++t)
        if ((x & r.pos_masks[t]) == 0 && (x & r.neg_masks[t]) == r.neg_masks[t]) return -1;
      return +1;
    case Tag::halfspace:
    case Tag::majority:
      return halfspace_dot(r.planes[0], x) >= r.planes[0].theta ? +1 : -1;
    case Tag::intersection:
      for (const Halfspace& h : r.planes)
        if (halfspace_dot(h, x) < h.theta) return -1;
      return +1;
    case Tag::parity:
      return (std::popcount(x) & 1) ? -1 : +1;
    case Tag::dictator:
      return ((x >> r.coordinate) & 1) ? +1 : -1;
    case Tag::tree:
      return r.tree.evaluate(x);
    case Tag::addressing: {
      uint64_t addr = x & arity_mask(r.address_bits);
      return ((x >> (r.address_bits + addr)) & 1) ? +1 : -1;
    }
    case Tag::callback:
      return r.eval(x) > 0 ? +1 : -1;
  }
  throw StateError("unreachable representation tag");
}

BoolFn BoolFn::restrict(int i, int b) const {
  if (i < 0 || i >= arity()) throw InputError("coordinate out of range");
  BoolFn g(repr_);
  g.restriction_ = restriction_.with(i, b);
  return g;
}

BoolFn BoolFn::with_restriction(const Restriction& r) const {
  if (r.mask() & ~arity_mask(arity())) throw InputError("restriction outside arity");
  if (r.mask() & restriction_.mask()) throw InputError("restriction overlaps existing one");
  BoolFn g(repr_);
  g.restriction_ = Restriction(restriction_.mask() | r.mask(), restriction_.values() | r.values());
  return g;
}

FnTable BoolFn::compact_table() const {
  const int n = arity();
  FnTable ft;
  for (int i = 0; i < n; ++i)
    if (!restriction_.restricted(i)) ft.coords.push_back(i);
  const int m = static_cast<int>(ft.coords.size());
  if (m > 20) throw CapacityError("exact computation limited to 20 free coordinates");
  if (repr_->tag == Tag::table && restriction_.count() == 0) {
    ft.table = repr_->table;
    return ft;
  }
  ft.table = TruthTable::from_eval(m, [&](uint64_t y) {
    uint64_t x = 0;
    for (int v = 0; v < m; ++v)
      if ((y >> v) & 1) x |= 1ull << ft.coords[v];
    return evaluate(x);
  });
  return ft;
}

BoolFn BoolFn::constant(int n, int sign) {
  check_arity(n);
  if (sign != 1 && sign != -1) throw InputError("constant sign must be +1 or -1");
  auto r = std::make_shared<Repr>();
  r->tag = Tag::constant;
  r->n = n;
  r->sign = sign;
  r->kind = "constant";
  return BoolFn(std::shared_ptr<const Repr>(std::move(r)));
}

BoolFn BoolFn::from_table(TruthTable table) {
  check_arity(table.vars());
  auto r = std::make_shared<Repr>();
  r->tag = Tag::table;
  r->n = table.vars();
  r->table = std::move(table);
  r->kind = "table";
  return BoolFn(std::shared_ptr<const Repr>(std::move(r)));
}

BoolFn BoolFn::dnf(int n, std::vector<std::vector<int>> terms) {
  check_arity(n);
  auto r = std::make_shared<Repr>();
  r->tag = Tag::dnf;
  r->n = n;
  r->lits = std::move(terms);
  r->kind = "dnf";
  compile_literals(*r);
  return BoolFn(std::shared_ptr<const Repr>(std::move(r)));
}

BoolFn BoolFn::cnf_of_dnf_dual(int n, std::vector<std::vector<int>> clauses) {
  check_arity(n);
  auto r = std::make_shared<Repr>();
  r->tag = Tag::cnf;
  r->n = n;
  r->lits = std::move(clauses);
  r->kind = "cnf-of-dnf-dual";
  compile_literals(*r);
  return BoolFn(std::shared_ptr<const Repr>(std::move(r)));
}

BoolFn BoolFn::halfspace(int n, Halfspace h) {
  check_arity(n);
  check_halfspace(h, n);
  auto r = std::make_shared<Repr>();
  r->tag = Tag::halfspace;
  r->n = n;
  r->planes.push_back(std::move(h));
  r->kind = "halfspace";
  return BoolFn(std::shared_ptr<const Repr>(std::move(r)));
}

BoolFn BoolFn::intersection(int n, std::vector<Halfspace> hs) {
  check_arity(n);
  if (hs.empty()) throw InputError("intersection needs at least one halfspace");
  for (const Halfspace& h : hs) check_halfspace(h, n);
  auto r = std::make_shared<Repr>();
  r->tag = Tag::intersection;
  r->n = n;
  r->planes = std::move(hs);
  r->kind = "intersection";
  return BoolFn(std::shared_ptr<const Repr>(std::move(r)));
}

BoolFn BoolFn::parity(int n) {
  check_arity(n);
  auto r = std::make_shared<Repr>();
  r->tag = Tag::parity;
  r->n = n;
  r->kind = "parity";
  return BoolFn(std::shared_ptr<const Repr>(std::move(r)));
}

BoolFn BoolFn::dictator(int n, int coordinate) {
  check_arity(n);
  if (coordinate < 0 || coordinate >= n) throw InputError("dictator coordinate out of range");
  auto r = std::make_shared<Repr>();
  r->tag = Tag::dictator;
  r->n = n;
  r->coordinate = coordinate;
  r->kind = "dictator";
  return BoolFn(std::shared_ptr<const Repr>(std::move(r)));
}

BoolFn BoolFn::majority(int n) {
  check_arity(n);
  if (n % 2 == 0) throw InputError("majority needs odd arity");
  auto r = std::make_shared<Repr>();
  r->tag = Tag::majority;
  r->n = n;
  Halfspace h;
  h.w.assign(n, 1);
  h.theta = (n + 1) / 2;
  r->planes.push_back(std::move(h));
  r->kind = "majority";
  return BoolFn(std::shared_ptr<const Repr>(std::move(r)));
}

BoolFn BoolFn::tribes(int width, int count) {
  if (width < 1 || count < 1) throw InputError("tribes parameters must be positive");
  if (width * count > 64) throw InputError("tribes arity exceeds 64");
  auto r = std::make_shared<Repr>();
  r->tag = Tag::tribes;
  r->n = width * count;
  r->width = width;
  r->count = count;
  for (int t = 0; t < count; ++t) {
    std::vector<int> term;
    for (int j = 0; j < width; ++j) term.push_back(t * width + j + 1);
    r->lits.push_back(std::move(term));
  }
  r->kind = "tribes";
  compile_literals(*r);
  return BoolFn(std::shared_ptr<const Repr>(std::move(r)));
}

BoolFn BoolFn::and_of(int n) {
  check_arity(n);
  auto r = std::make_shared<Repr>();
  r->tag = Tag::dnf;
  r->n = n;
  std::vector<int> term;
  for (int j = 1; j <= n; ++j) term.push_back(j);
  r->lits.push_back(std::move(term));
  r->kind = "and";
  compile_literals(*r);
  return BoolFn(std::shared_ptr<const Repr>(std::move(r)));
}

BoolFn BoolFn::or_of(int n) {
  check_arity(n);
  auto r = std::make_shared<Repr>();
  r->tag = Tag::dnf;
  r->n = n;
  for (int j = 1; j <= n; ++j) r->lits.push_back({j});
  r->kind = "or";
  compile_literals(*r);
  return BoolFn(std::shared_ptr<const Repr>(std::move(r)));
}

BoolFn BoolFn::addressing(int address_bits) {
  if (address_bits < 1 || address_bits > 5) throw InputError("addressing supports 1..5 address bits");
  auto r = std::make_shared<Repr>();
  r->tag = Tag::addressing;
  r->address_bits = address_bits;
  r->n = address_bits + (1 << address_bits);
  r->kind = "addressing";
  return BoolFn(std::shared_ptr<const Repr>(std::move(r)));
}

BoolFn BoolFn::from_tree(int n, const StrategyTree& tree) {
  check_arity(n);
  if (tree.empty() || !tree.valid(n)) throw InputError("tree is not a valid strategy over this arity");
  auto r = std::make_shared<Repr>();
  r->tag = Tag::tree;
  r->n = n;
  r->tree = tree;
  r->kind = "tree";
  return BoolFn(std::shared_ptr<const Repr>(std::move(r)));
}

BoolFn BoolFn::callback(int n, std::function<int(uint64_t)> eval, std::string label) {
  check_arity(n);
  if (!eval) throw InputError("callback function is empty");
  auto r = std::make_shared<Repr>();
  r->tag = Tag::callback;
  r->n = n;
  r->eval = std::move(eval);
  r->kind = std::move(label);
  return BoolFn(std::shared_ptr<const Repr>(std::move(r)));
}

}  // namespace pricedq
