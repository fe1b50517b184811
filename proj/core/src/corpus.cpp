#include "pricedq/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "pricedq/rng.hpp"

namespace pricedq {

namespace {

std::vector<std::string> split_colon(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == ':') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  return parts;
}

long long parse_ll(const std::string& s, const std::string& what) {
  try {
    size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw InputError("invalid " + what + ": '" + s + "'");
  }
}

int parse_int(const std::string& s, const std::string& what, long long lo, long long hi) {
  long long v = parse_ll(s, what);
  if (v < lo || v > hi)
    throw InputError(what + " must be in " + std::to_string(lo) + ".." + std::to_string(hi));
  return static_cast<int>(v);
}

// w distinct coordinates of [0, n), by partial Fisher-Yates.
std::vector<int> sample_coords(int n, int w, Rng& rng) {
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  for (int j = 0; j < w; ++j) {
    int pick = j + static_cast<int>(rng.below(static_cast<uint64_t>(n - j)));
    std::swap(pool[j], pool[pick]);
  }
  pool.resize(w);
  std::sort(pool.begin(), pool.end());
  return pool;
}

std::vector<std::vector<int>> random_terms(int n, int t, int w, bool monotone, Rng& rng) {
  std::vector<std::vector<int>> terms;
  for (int k = 0; k < t; ++k) {
    std::vector<int> term;
    for (int coord : sample_coords(n, w, rng)) {
      bool positive = monotone || (rng.next_u64() & 1);
      term.push_back(positive ? coord + 1 : -(coord + 1));
    }
    terms.push_back(std::move(term));
  }
  return terms;
}

Halfspace random_halfspace(int n, long long bound, Rng& rng) {
  Halfspace h;
  for (;;) {
    h.w.clear();
    for (int j = 0; j < n; ++j) h.w.push_back(rng.range(-bound, bound));
    long long lo = 0, hi = 0;
    for (long long w : h.w) (w < 0 ? lo : hi) += w;
    if (lo == hi) continue;  // all-zero weights: constant, resample
    h.theta = rng.range(lo + 1, hi);  // guarantees both output signs occur
    return h;
  }
}

}  // namespace

GeneratorSpec GeneratorSpec::parse(const std::string& text) {
  auto parts = split_colon(text);
  const std::string& name = parts[0];
  auto argc = parts.size() - 1;
  auto need = [&](size_t count) {
    if (argc != count)
      throw InputError("generator '" + name + "' expects " + std::to_string(count) +
                       " parameters");
  };
  GeneratorSpec g;
  using K = Kind;
  if (name == "and" || name == "or" || name == "parity" || name == "majority") {
    need(1);
    g.kind = name == "and" ? K::and_fn : name == "or" ? K::or_fn
                           : name == "parity" ? K::parity : K::majority;
    g.n = parse_int(parts[1], "arity", 1, 64);
  } else if (name == "dictator") {
    need(2);
    g.kind = K::dictator;
    g.n = parse_int(parts[1], "arity", 1, 64);
    g.width = parse_int(parts[2], "coordinate", 1, g.n) - 1;
  } else if (name == "tribes") {
    need(2);
    g.kind = K::tribes;
    g.n = parse_int(parts[1], "width", 1, 64);
    g.terms = parse_int(parts[2], "count", 1, 64);
  } else if (name == "random_dnf" || name == "random_monotone_dnf") {
    need(3);
    g.kind = name == "random_dnf" ? K::random_dnf : K::random_monotone_dnf;
    g.n = parse_int(parts[1], "arity", 1, 64);
    g.terms = parse_int(parts[2], "term count", 1, 1024);
    g.width = parse_int(parts[3], "term width", 1, g.n);
  } else if (name == "halfspace") {
    need(2);
    g.kind = K::halfspace;
    g.n = parse_int(parts[1], "arity", 1, 64);
    g.width = parse_int(parts[2], "weight bound", 1, 1000000);
  } else if (name == "intersection") {
    need(3);
    g.kind = K::intersection;
    g.n = parse_int(parts[1], "arity", 1, 64);
    g.terms = parse_int(parts[2], "halfspace count", 1, 64);
    g.width = parse_int(parts[3], "weight bound", 1, 1000000);
  } else if (name == "addressing") {
    need(1);
    g.kind = K::addressing;
    g.n = parse_int(parts[1], "address bits", 1, 5);
  } else {
    throw InputError("unknown generator kind: '" + name + "'");
  }
  return g;
}

std::string GeneratorSpec::to_string() const {
  std::ostringstream os;
  using K = Kind;
  switch (kind) {
    case K::and_fn: os << "and:" << n; break;
    case K::or_fn: os << "or:" << n; break;
    case K::parity: os << "parity:" << n; break;
    case K::majority: os << "majority:" << n; break;
    case K::dictator: os << "dictator:" << n << ":" << width + 1; break;
    case K::tribes: os << "tribes:" << n << ":" << terms; break;
    case K::random_dnf: os << "random_dnf:" << n << ":" << terms << ":" << width; break;
    case K::random_monotone_dnf:
      os << "random_monotone_dnf:" << n << ":" << terms << ":" << width;
      break;
    case K::halfspace: os << "halfspace:" << n << ":" << width; break;
    case K::intersection: os << "intersection:" << n << ":" << terms << ":" << width; break;
    case K::addressing: os << "addressing:" << n; break;
  }
  return os.str();
}

BoolFn generate_function(const GeneratorSpec& spec) {
  Rng rng(derive_seed(spec.seed, {kStreamCorpus}));
  using K = GeneratorSpec::Kind;
  switch (spec.kind) {
    case K::and_fn: return BoolFn::and_of(spec.n);
    case K::or_fn: return BoolFn::or_of(spec.n);
    case K::parity: return BoolFn::parity(spec.n);
    case K::majority: return BoolFn::majority(spec.n);
    case K::dictator: return BoolFn::dictator(spec.n, spec.width);
    case K::tribes: return BoolFn::tribes(spec.n, spec.terms);
    case K::random_dnf:
      return BoolFn::dnf(spec.n, random_terms(spec.n, spec.terms, spec.width, false, rng));
    case K::random_monotone_dnf:
      return BoolFn::dnf(spec.n, random_terms(spec.n, spec.terms, spec.width, true, rng));
    case K::halfspace:
      return BoolFn::halfspace(spec.n, random_halfspace(spec.n, spec.width, rng));
    case K::intersection: {
      std::vector<Halfspace> hs;
      for (int k = 0; k < spec.terms; ++k) hs.push_back(random_halfspace(spec.n, spec.width, rng));
      return BoolFn::intersection(spec.n, std::move(hs));
    }
    case K::addressing: return BoolFn::addressing(spec.n);
  }
  throw StateError("unreachable generator kind");
}

BoolFn generate_function(const std::string& spec_text, uint64_t seed) {
  GeneratorSpec g = GeneratorSpec::parse(spec_text);
  g.seed = seed;
  return generate_function(g);
}

CostVector generate_costs(const std::string& spec_text, int n, uint64_t seed) {
  if (n < 1 || n > 64) throw InputError("arity must be in 1..64");
  if (spec_text.find(',') != std::string::npos ||
      (!spec_text.empty() && std::isdigit(static_cast<unsigned char>(spec_text[0])))) {
    std::vector<long long> c;
    std::string cur;
    std::istringstream is(spec_text);
    while (std::getline(is, cur, ',')) c.push_back(parse_ll(cur, "cost entry"));
    if (static_cast<int>(c.size()) != n)
      throw InputError("explicit cost list length must equal arity");
    return CostVector(std::move(c));
  }
  auto parts = split_colon(spec_text);
  Rng rng(derive_seed(seed, {kStreamCosts}));
  if (parts[0] == "unit") {
    if (parts.size() != 1) throw InputError("'unit' takes no parameters");
    return CostVector::unit(n);
  }
  if (parts[0] == "uniform") {
    if (parts.size() != 2) throw InputError("'uniform' expects a maximum, e.g. uniform:8");
    long long m = parse_ll(parts[1], "maximum cost");
    if (m < 1) throw InputError("maximum cost must be >= 1");
    std::vector<long long> c;
    for (int j = 0; j < n; ++j) c.push_back(rng.range(1, m));
    return CostVector(std::move(c));
  }
  if (parts[0] == "power_law") {
    if (parts.size() != 2) throw InputError("'power_law' expects a cap, e.g. power_law:64");
    long long m = parse_ll(parts[1], "cost cap");
    if (m < 1) throw InputError("cost cap must be >= 1");
    std::vector<long long> c;
    for (int j = 0; j < n; ++j) {
      double u = 1.0 - rng.next_double();  // (0, 1]
      c.push_back(std::min(m, static_cast<long long>(1.0 / u)));
    }
    return CostVector(std::move(c));
  }
  if (parts[0] == "spike") {
    if (parts.size() != 3) throw InputError("'spike' expects coordinate and factor, e.g. spike:2:10");
    int j = parse_int(parts[1], "spike coordinate", 1, n);
    long long factor = parse_ll(parts[2], "spike factor");
    if (factor < 1) throw InputError("spike factor must be >= 1");
    std::vector<long long> c(n, 1);
    c[j - 1] = factor;
    return CostVector(std::move(c));
  }
  throw InputError("unknown cost kind: '" + parts[0] + "'");
}

bool is_monotone(const BoolFn& f) {
  FnTable ft = f.compact_table();
  const int m = ft.table.vars();
  for (uint64_t x = 0; x < ft.table.size(); ++x)
    for (int v = 0; v < m; ++v)
      if (!((x >> v) & 1) && ft.table.value(x) > ft.table.value(x | (1ull << v))) return false;
  return true;
}

}  // namespace pricedq
