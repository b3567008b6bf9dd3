#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "setramsey/core.hpp"

namespace setramsey {

// The named pattern shapes. Concrete kinds (singleton, co-singleton,
// monotone) generate fully determined matrices; the two templates carry
// wildcard cells in the unconstrained positions.
struct PatternKind {
  enum class Kind {
    Singleton,
    CoSingleton,
    Monotone,
    IncreasingTemplate,
    DecreasingTemplate,
  };

  Kind kind;
  int order;  // column count; all shapes are (order+1) x order

  bool operator==(const PatternKind&) const = default;
};

PatternMatrix generate(PatternKind k);

// Every named kind or template the concrete matrix instantiates. The input
// must be wildcard-free; only exact (n+1) x n shapes can match.
std::vector<PatternKind> classify(const PatternMatrix& p);

// True when `concrete` agrees with `tmpl` on every non-wildcard cell.
bool instantiates(const PatternMatrix& concrete, const PatternMatrix& tmpl);

// CLI spec strings: singleton:N, cosingleton:N, monotone:N, increasing:K,
// decreasing:K.
PatternKind parse_pattern_spec(std::string_view spec);
std::string to_spec(PatternKind k);

}  // namespace setramsey
