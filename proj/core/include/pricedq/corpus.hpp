#pragma once

#include <cstdint>
#include <string>

#include "pricedq/boolfn.hpp"

namespace pricedq {

// Parsed generator description.  Text forms (colon-separated):
//   and:N  or:N  parity:N  majority:N  dictator:N:I  tribes:W:S
//   random_dnf:N:T:W  random_monotone_dnf:N:T:W  halfspace:N:W
//   intersection:N:M:W  addressing:K
// I is 1-based; W in halfspace/intersection bounds |weights|.
struct GeneratorSpec {
  enum class Kind {
    and_fn,
    or_fn,
    parity,
    dictator,
    majority,
    tribes,
    random_dnf,
    random_monotone_dnf,
    halfspace,
    intersection,
    addressing,
  };
  Kind kind = Kind::and_fn;
  int n = 0;          // arity (or width for tribes, address bits for addressing)
  int terms = 0;      // DNF term count / tribes count / intersection plane count
  int width = 0;      // DNF term width / weight bound / dictator coordinate (0-based)
  uint64_t seed = 0;

  static GeneratorSpec parse(const std::string& text);
  std::string to_string() const;
};

// Deterministic in (spec, spec.seed); random kinds draw from the seed only.
BoolFn generate_function(const GeneratorSpec& spec);
BoolFn generate_function(const std::string& spec_text, uint64_t seed);

// Cost kinds: "unit", "uniform:M" (each in 1..M), "power_law:M",
// "spike:J:F" (unit base, 1-based coordinate J costs F), or an explicit
// comma-separated list "1,4,3" whose length must equal n.
CostVector generate_costs(const std::string& spec_text, int n, uint64_t seed);

// Exhaustive monotonicity check over the free coordinates (<= 20).
bool is_monotone(const BoolFn& f);

}  // namespace pricedq
