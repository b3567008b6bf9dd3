#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "setramsey/core.hpp"
#include "setramsey/patterns.hpp"

namespace setramsey {

// An extremal witness family together with its claimed size and the patterns
// it claims to avoid. Claims are rechecked by verify_construction.
struct NamedConstruction {
  std::string name;
  SetFamily family;
  std::uint64_t claimed_size;
  std::vector<PatternKind> avoided;
};

// All l-subsets of [n] in lexicographic order. Avoids chains of order n-l+1
// (increasing) and l+1 (decreasing).
NamedConstruction construct_choose(int n, int l);

// The fixed eight-member family over four elements that avoids all three
// order-3 patterns.
NamedConstruction construct_F();

// The four-class family over [2l] of size C(2l,l) + C(2l-3,l-1), avoiding
// the three order-(l+1) patterns. Requires 2 <= l <= 5.
NamedConstruction construct_prop2(int l);

struct VerificationReport {
  struct Claim {
    std::string what;
    bool pass;
  };
  std::vector<Claim> claims;
  bool all_pass = true;
};

// Rechecks the size identity, member distinctness and every avoided-pattern
// claim through the embedding engine.
VerificationReport verify_construction(const NamedConstruction& c);

}  // namespace setramsey
